#include "pebble/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "pebble/constructions.hpp"
#include "pebble/errors.hpp"
#include "pebble/io.hpp"
#include "pebble/lp.hpp"
#include "pebble/pebbling_number.hpp"
#include "pebble/solver.hpp"
#include "pebble/strategies.hpp"

namespace pebble::cli {

namespace {

namespace fs = std::filesystem;

struct Limits {
  unsigned threads = 0;         // 0: PEBBLE_THREADS, else 1
  std::uint64_t max_nodes = 0;  // 0: PEBBLE_MAX_NODES, else the library default
};

std::optional<std::uint64_t> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::BadParameter, std::string(name) + "='" + raw + "' is not a non-negative integer");
  }
  return value;
}

SearchOptions search_options(const Limits& limits) {
  SearchOptions o;
  o.threads = limits.threads ? limits.threads : static_cast<unsigned>(env_number("PEBBLE_THREADS").value_or(1));
  if (o.threads == 0) o.threads = 1;
  o.max_nodes = limits.max_nodes ? limits.max_nodes : env_number("PEBBLE_MAX_NODES").value_or(o.max_nodes);
  return o;
}

void add_limits(CLI::App* cmd, Limits& limits) {
  cmd->add_option("--threads", limits.threads, "worker threads (env PEBBLE_THREADS)");
  cmd->add_option("--max-nodes", limits.max_nodes, "solver node cap per query (env PEBBLE_MAX_NODES)");
}

template <typename F>
auto with_file(std::ostream& err, const std::string& path, F&& f) {
  try {
    return f(read_text_file(path));
  } catch (const ParseError&) {
    err << "while reading " << path << "\n";
    throw;
  }
}

GraphPtr load_graph(std::ostream& err, const std::string& path) {
  return with_file(err, path, [](const std::string& text) { return share(parse_graph(text)); });
}

WeightFunction load_weights(std::ostream& err, const std::string& path, const GraphPtr& g) {
  return with_file(err, path, [&](const std::string& text) { return parse_weights(text, g); });
}

Configuration load_config(std::ostream& err, const std::string& path, const GraphPtr& g) {
  return with_file(err, path, [&](const std::string& text) { return parse_config(text, g); });
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Tree check when the support is a tree and passes, exhaustive oracle otherwise.
CertificatePtr certify_auto(const WeightFunction& w, const SearchOptions& options, std::string& method) {
  try {
    if (check_tree_strategy(w)) {
      method = "tree";
      return certify_tree(w);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotATree) throw;
  }
  method = "oracle";
  return certify_oracle(w, options);
}

std::string describe_moves(const std::vector<Move>& moves) {
  if (moves.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(moves[i].from) + ">" + std::to_string(moves[i].to);
  }
  return s;
}

// ---- reproduction targets ------------------------------------------------

struct PaperContext {
  std::ostream& out;
  std::ostream& err;
  SearchOptions options;
};

using PaperTarget = std::function<int(PaperContext&)>;

Count cycle_formula(std::uint32_t k) { return 2 * ((Count{1} << (k + 1)) / 3) + 1; }

int paper_cycle(PaperContext& ctx, std::uint32_t k) {
  auto g = share(generate(FamilySpec::cycle(2 * k + 1)));
  PiResult pi = pi_rooted(g, ctx.options);
  ctx.out << "RESULT pi=" << pi.value << "\n";

  PathPair pair = cycle_path_pair(k);
  CertificatePtr path = certify_tree(pair.path);
  CertificatePtr combined =
      conic_combine(g, {{Rational(1), path, pair.forward}, {Rational(1), path, pair.backward}});
  std::uint32_t param[] = {k};
  bool matches_table = combined->weights() == paper_weight("cycle_combined", param);
  Count upper = lemma1_bound(combined);
  LpBound lp = lp_pebbling_bound(g, std::vector<PlacedCertificate>{{path, pair.forward}, {path, pair.backward}});
  Count formula = cycle_formula(k);
  ctx.err << "C_" << 2 * k + 1 << ": witness " << pi.witness_unsolvable.str() << " has " << pi.value - 1
          << " pebbles and is unsolvable; combined weights total " << combined->weights().total() << "\n";
  ctx.out << "RESULT lower=" << pi.value << " upper=" << upper << " lp_bound=" << lp.bound
          << " lp_optimum=" << lp.optimum << " formula=" << formula << "\n";
  bool ok = matches_table && pi.value == formula && upper == formula && lp.bound == formula;
  return ok ? kOk : kRefuted;
}

int report_oracle(PaperContext& ctx, const WeightFunction& w, const std::string& prefix = "") {
  OracleVerdict v = verify_validity_oracle(w, ctx.options);
  ctx.out << "RESULT " << prefix << "valid=" << yes_no(v.valid) << " pi=" << v.pi << " max_unsolvable=" << v.max_weight
          << " total=" << w.total() << "\n";
  if (v.maximizer) ctx.err << "heaviest unsolvable configuration: " << v.maximizer->str() << "\n";
  return v.valid ? kOk : kRefuted;
}

int paper_fig2(PaperContext& ctx) { return report_oracle(ctx, paper_weight("fig2")); }

int paper_q3(PaperContext& ctx) {
  WeightFunction fig2 = paper_weight("fig2");
  WeightFunction q3 = paper_weight("q3prime");
  CertificatePtr base = certify_oracle(fig2, ctx.options);
  if (!base) return kRefuted;
  std::vector<CertifiedCopy> copies;
  for (auto& c : cube_slice_copies(fig2, q3.graph())) copies.push_back({c.embedding, base});
  CertificatePtr composed = certify_decomposition(q3, copies);
  ctx.out << "RESULT decomposes=true copies=" << composed->components().size() << "\n";
  int rc = report_oracle(ctx, q3);
  Count pi = pi_rooted(q3.graph(), ctx.options).value;
  ctx.out << "RESULT pi=" << pi << "\n";
  return rc == kOk && pi == 8 ? kOk : kRefuted;
}

int paper_lemma5(PaperContext& ctx) { return report_oracle(ctx, paper_weight("lemma5")); }

int paper_q4(PaperContext& ctx) {
  WeightFunction lemma5 = paper_weight("lemma5");
  WeightFunction star = paper_weight("q4star");
  CertificatePtr base = certify_oracle(lemma5, ctx.options);
  if (!base) {
    ctx.err << "base weight function failed the oracle\n";
    return kRefuted;
  }
  std::vector<CertifiedCopy> copies;
  for (auto& c : cube_slice_copies(lemma5, star.graph())) copies.push_back({c.embedding, base});
  CertificatePtr composed = certify_decomposition(star, copies);
  Count upper = lemma1_bound(composed);
  Count lower = diameter_lower_bound(*star.graph());
  ctx.err << "four induced copies sum to the uniform weight 4; total " << star.total() << "\n";
  if (lower == upper) {
    ctx.out << "RESULT lower=" << lower << " upper=" << upper << " pi=" << lower << "\n";
    return kOk;
  }
  ctx.out << "RESULT lower=" << lower << " upper=" << upper << "\n";
  return kRefuted;
}

int paper_conjecture(PaperContext& ctx, std::uint32_t n) {
  std::uint32_t param[] = {n};
  return report_oracle(ctx, paper_weight("conjecture", param));
}

int paper_lollipop(PaperContext& ctx, std::uint32_t n) {
  std::uint32_t param[] = {n};
  WeightFunction w = paper_weight("lollipop", param);
  Rational expected = Rational(BigInt(1) << (n + 2), BigInt(1)) - Rational(1);
  int rc = report_oracle(ctx, w);
  if (w.total() != expected) rc = kRefuted;
  if (n == 1) {
    std::uint32_t general[] = {1, 6};
    if (report_oracle(ctx, paper_weight("lollipop_general", general), "arms=6 ") != kOk) rc = kRefuted;
  }
  return rc;
}

int paper_q4_bruteforce(PaperContext& ctx) {
  auto g = share(generate(FamilySpec::hypercube(4)));
  PiResult pi = pi_rooted(g, ctx.options);
  ctx.out << "RESULT pi=" << pi.value << "\n";
  return pi.value == 16 ? kOk : kRefuted;
}

struct PaperEntry {
  PaperTarget run;
  bool long_running = false;
};

const std::map<std::string, PaperEntry>& paper_targets() {
  static const std::map<std::string, PaperEntry> targets = {
      {"thm1-k1", {[](PaperContext& c) { return paper_cycle(c, 1); }}},
      {"thm1-k2", {[](PaperContext& c) { return paper_cycle(c, 2); }}},
      {"thm1-k3", {[](PaperContext& c) { return paper_cycle(c, 3); }}},
      {"thm1-k4", {[](PaperContext& c) { return paper_cycle(c, 4); }}},
      {"prop-fig2", {paper_fig2}},
      {"prop-q3", {paper_q3}},
      {"lemma5", {paper_lemma5}},
      {"thm2-q4", {paper_q4}},
      {"conj-n3", {[](PaperContext& c) { return paper_conjecture(c, 3); }}},
      {"conj-n4", {[](PaperContext& c) { return paper_conjecture(c, 4); }}},
      {"conj-n5", {[](PaperContext& c) { return paper_conjecture(c, 5); }, true}},
      {"thm3-n1", {[](PaperContext& c) { return paper_lollipop(c, 1); }}},
      {"thm3-n2", {[](PaperContext& c) { return paper_lollipop(c, 2); }}},
      {"thm3-n3", {[](PaperContext& c) { return paper_lollipop(c, 3); }, true}},
      {"q4-bruteforce", {paper_q4_bruteforce, true}},
  };
  return targets;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pebbling numbers, weight-function certificates and LP bounds for small graphs.", "pebble"};
  app.require_subcommand(1);

  // gen
  std::string family;
  std::vector<std::uint32_t> params;
  std::string output;
  auto* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("family", family, "path | cycle | hypercube | rooted_cube | lollipop | fig2 | lemma5")->required();
  gen->add_option("params", params, "integer parameters");
  gen->add_option("-o,--output", output, "output file (default: standard output)");

  // weights
  std::string weight_name;
  std::string graph_output;
  auto* weights = app.add_subcommand("weights", "write a named weight function and its graph");
  weights->add_option("name", weight_name, "construction name")->required();
  weights->add_option("params", params, "integer parameters");
  weights->add_option("-o,--output", output, "weights file")->required();
  weights->add_option("--graph-out", graph_output, "graph file")->required();

  // pi
  std::string graph_file;
  bool global = false;
  Limits limits;
  auto* pi = app.add_subcommand("pi", "exact rooted pebbling number");
  pi->add_option("-g,--graph", graph_file, "graph file")->required();
  pi->add_flag("--global", global, "maximize over every root and report the Class-0 predicate");
  add_limits(pi, limits);

  // solve
  std::string config_file;
  Count target = 1;
  auto* solve = app.add_subcommand("solve", "decide solvability of one configuration");
  solve->add_option("-g,--graph", graph_file, "graph file")->required();
  solve->add_option("-c,--config", config_file, "configuration file")->required();
  solve->add_option("--target", target, "pebbles required on the root")->check(CLI::PositiveNumber);
  add_limits(solve, limits);

  // verify
  std::vector<std::string> weight_files;
  std::string mode = "oracle";
  auto* verify = app.add_subcommand("verify", "check validity of a weight function");
  verify->add_option("-g,--graph", graph_file, "graph file")->required();
  verify->add_option("-w,--weights", weight_files, "weights file")->required()->expected(1);
  verify->add_option("--mode", mode, "tree | oracle")->check(CLI::IsMember({"tree", "oracle"}));
  add_limits(verify, limits);

  // bound
  auto* bound = app.add_subcommand("bound", "upper bounds from a set of weight functions");
  bound->add_option("-g,--graph", graph_file, "graph file")->required();
  bound->add_option("-w,--weights", weight_files, "weights files")->required();
  add_limits(bound, limits);

  // decompose
  std::string copies_file;
  auto* decompose = app.add_subcommand("decompose", "check a weight function against embedded copies");
  decompose->add_option("-g,--graph", graph_file, "graph file")->required();
  decompose->add_option("-w,--weights", weight_files, "weights file")->required()->expected(1);
  decompose->add_option("--copies", copies_file, "copies manifest")->required();
  add_limits(decompose, limits);

  // paper
  std::string result_id;
  bool allow_long = false;
  auto* paper = app.add_subcommand("paper", "reproduce a named result");
  std::vector<std::string> ids;
  for (const auto& [id, entry] : paper_targets()) ids.push_back(id);
  paper->add_option("id", result_id, "result id")->required()->check(CLI::IsMember(ids));
  paper->add_flag("--allow-long", allow_long, "permit long-running targets");
  add_limits(paper, limits);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      FamilySpec spec = FamilySpec::parse(family, params);
      Graph g = generate(spec);
      std::string text = serialize_graph(g);
      if (output.empty()) {
        out << text;
      } else {
        write_text_file(output, text);
        out << "RESULT vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " diameter=" << g.diameter()
            << "\n";
      }
      return kOk;
    }

    if (weights->parsed()) {
      WeightFunction w = paper_weight(weight_name, params);
      write_text_file(graph_output, serialize_graph(*w.graph()));
      write_text_file(output, serialize_weights(w));
      out << "RESULT vertices=" << w.graph()->vertex_count() << " total=" << w.total() << "\n";
      return kOk;
    }

    SearchOptions options = search_options(limits);

    if (pi->parsed()) {
      GraphPtr g = load_graph(err, graph_file);
      PiResult r = pi_rooted(g, options);
      err << "scanned sizes " << r.exhaustiveness.sizes_scanned.front() << ".." << r.exhaustiveness.sizes_scanned.back()
          << ", symmetry " << (r.exhaustiveness.symmetry_used ? "on" : "off") << ", " << r.exhaustiveness.solver_nodes
          << " solver nodes\n";
      out << "RESULT pi=" << r.value << " witness=" << r.witness_unsolvable.str() << "\n";
      if (global) {
        Count all = pi_global(g, options);
        out << "RESULT pi_global=" << all << " class0=" << yes_no(all == g->vertex_count()) << "\n";
      }
      return kOk;
    }

    if (solve->parsed()) {
      GraphPtr g = load_graph(err, graph_file);
      Configuration p = load_config(err, config_file, g);
      Solver solver(g, options.solver_options());
      SolveOutcome o = solver.solve(p, target, true);
      err << o.stats.nodes << " nodes, " << o.stats.memo_hits << " memo hits\n";
      out << "RESULT solvable=" << yes_no(o.solvable);
      if (o.witness) out << " moves=" << describe_moves(*o.witness);
      out << "\n";
      return kOk;
    }

    if (verify->parsed()) {
      GraphPtr g = load_graph(err, graph_file);
      WeightFunction w = load_weights(err, weight_files.front(), g);
      if (mode == "tree") {
        bool ok = check_tree_strategy(w);
        out << "RESULT valid=" << yes_no(ok) << " method=tree\n";
        return ok ? kOk : kRefuted;
      }
      OracleVerdict v = verify_validity_oracle(w, options);
      out << "RESULT valid=" << yes_no(v.valid) << " method=oracle pi=" << v.pi << " max_unsolvable=" << v.max_weight
          << " total=" << w.total() << "\n";
      if (v.counterexample) {
        out << "RESULT counterexample=" << v.counterexample->str() << " weight=" << evaluate(w, *v.counterexample)
            << "\n";
        return kRefuted;
      }
      return kOk;
    }

    if (bound->parsed()) {
      GraphPtr g = load_graph(err, graph_file);
      std::vector<CertificatePtr> certs;
      Count best = 0;
      bool refuted = false;
      for (std::size_t i = 0; i < weight_files.size(); ++i) {
        WeightFunction w = load_weights(err, weight_files[i], g);
        std::string method;
        CertificatePtr cert = certify_auto(w, options, method);
        if (!cert) {
          out << "RESULT certificate=" << i << " method=" << method << " valid=false\n";
          refuted = true;
          continue;
        }
        certs.push_back(cert);
        out << "RESULT certificate=" << i << " method=" << method << " valid=true";
        if (w.all_positive()) {
          Count b = lemma1_bound(cert);
          best = best == 0 ? b : std::min(best, b);
          out << " weight_bound=" << b;
        }
        out << "\n";
      }
      if (refuted) return kRefuted;
      LpBound lp = lp_pebbling_bound(g, certs);
      out << "RESULT bound=" << lp.bound << " optimum=" << lp.optimum << "\n";
      Count upper = best == 0 ? lp.bound : std::min(best, lp.bound);
      Count lower = diameter_lower_bound(*g);
      err << "lower bound from diameter " << g->diameter() << "\n";
      out << "RESULT lower=" << lower << " upper=" << upper << "\n";
      return lower <= upper ? kOk : kRefuted;
    }

    if (decompose->parsed()) {
      GraphPtr g = load_graph(err, graph_file);
      WeightFunction w = load_weights(err, weight_files.front(), g);
      CopiesManifest manifest =
          with_file(err, copies_file, [](const std::string& text) { return parse_copies(text); });
      fs::path dir = fs::path(copies_file).parent_path();
      std::vector<CertifiedCopy> certified;
      std::vector<WeightCopy> plain;
      std::map<std::pair<std::string, std::string>, CertificatePtr> cache;
      bool all_certified = true;
      for (const auto& copy : manifest.copies) {
        std::string gf = (dir / copy.graph_file).string();
        std::string wf = (dir / copy.weights_file).string();
        GraphPtr base_graph = load_graph(err, gf);
        WeightFunction base = load_weights(err, wf, base_graph);
        plain.push_back({copy.embedding, base});
        auto key = std::make_pair(gf, wf);
        if (!cache.contains(key)) {
          std::string method;
          cache[key] = certify_auto(base, options, method);
          err << wf << ": " << (cache[key] ? "certified by " + method : "not valid") << "\n";
        }
        all_certified = all_certified && cache[key];
        certified.push_back({copy.embedding, cache[key]});
      }
      bool sums = decompose_verify(w, plain);
      out << "RESULT decomposes=" << yes_no(sums) << " copies=" << manifest.copies.size() << "\n";
      if (!sums) return kRefuted;
      if (!all_certified) {
        out << "RESULT certified=false\n";
        return kRefuted;
      }
      CertificatePtr cert = certify_decomposition(w, certified);
      out << "RESULT certified=true weight_bound=" << lemma1_bound(cert) << " lower=" << diameter_lower_bound(*g) << "\n";
      return kOk;
    }

    if (paper->parsed()) {
      const PaperEntry& entry = paper_targets().at(result_id);
      if (entry.long_running && !allow_long) {
        err << result_id << " is long-running; pass --allow-long\n";
        return kUsage;
      }
      PaperContext ctx{out, err, options};
      return entry.run(ctx);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ResourceLimit ? kResource : kUsage;
  }
  return kUsage;
}

}  // namespace pebble::cli
