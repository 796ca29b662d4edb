#include "pebble/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

struct Line {
  std::size_t number = 0;
  std::string_view text;               // comment-stripped, trimmed
  std::vector<std::string_view> words;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Significant lines. Labels keep their '#' characters; other lines lose any
// trailing comment.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view s = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (s.empty() || s.front() == '#') continue;
    if (!s.starts_with("label ") && !s.starts_with("label\t")) {
      if (auto hash = s.find('#'); hash != std::string_view::npos) s = trim(s.substr(0, hash));
    }
    lines.push_back({number, s, split_words(s)});
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what, ErrorCode code = ErrorCode::ParseError) {
  throw ParseError(code, line, what);
}

std::uint64_t parse_number(std::string_view word, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  }
  return value;
}

VertexId parse_id(std::string_view word, std::size_t line, std::size_t n) {
  std::uint64_t v = parse_number(word, line);
  if (v >= n) {
    fail(line, "vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices",
         ErrorCode::VertexOutOfRange);
  }
  return static_cast<VertexId>(v);
}

void expect_arity(const Line& l, std::size_t words) {
  if (l.words.size() != words) {
    fail(l.number, "'" + std::string(l.words[0]) + "' expects " + std::to_string(words - 1) + " field(s)");
  }
}

// Checks the header and returns the remaining lines.
std::vector<Line> body(std::string_view text, std::string_view magic) {
  auto lines = significant_lines(text);
  std::size_t first = lines.empty() ? 1 : lines.front().number;
  if (lines.empty() || lines.front().words[0] != magic) {
    fail(first, "missing header '" + std::string(magic) + " 1'");
  }
  const Line& header = lines.front();
  if (header.words.size() != 2) fail(header.number, "header must be '" + std::string(magic) + " <version>'");
  if (header.words[1] != "1") {
    fail(header.number, "unsupported " + std::string(magic) + " version " + std::string(header.words[1]),
         ErrorCode::VersionMismatch);
  }
  lines.erase(lines.begin());
  return lines;
}

}  // namespace

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "pebblegraph 1\n";
  out << "vertices " << g.vertex_count() << "\n";
  out << "root " << g.root() << "\n";
  if (!g.family().empty()) out << "family " << g.family() << (g.vertex_transitive() ? " transitive" : "") << "\n";
  for (const Edge& e : g.edges()) out << "edge " << e.u << " " << e.v << "\n";
  if (g.has_labels()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.label(v) != std::to_string(v)) out << "label " << v << " " << g.label(v) << "\n";
    }
  }
  for (const Permutation& p : g.symmetry()) {
    out << "sym";
    for (VertexId x : p) out << " " << x;
    out << "\n";
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  auto lines = body(text, "pebblegraph");
  std::optional<std::size_t> n;
  std::optional<std::pair<std::uint64_t, std::size_t>> root;  // value, line
  std::vector<Edge> edges;
  std::map<VertexId, std::string> labels;
  std::vector<std::pair<std::vector<std::string_view>, std::size_t>> syms;
  std::string family;
  bool transitive = false;

  for (const Line& l : lines) {
    std::string_view key = l.words[0];
    if (key == "vertices") {
      expect_arity(l, 2);
      if (n) fail(l.number, "duplicate 'vertices' line");
      n = parse_number(l.words[1], l.number);
      if (*n == 0) fail(l.number, "graph needs at least one vertex");
    } else if (key == "root") {
      expect_arity(l, 2);
      if (root) fail(l.number, "duplicate 'root' line");
      root = {parse_number(l.words[1], l.number), l.number};
    } else if (key == "edge") {
      if (!n) fail(l.number, "'edge' before 'vertices'");
      expect_arity(l, 3);
      edges.emplace_back(parse_id(l.words[1], l.number, *n), parse_id(l.words[2], l.number, *n));
    } else if (key == "label") {
      if (!n) fail(l.number, "'label' before 'vertices'");
      if (l.words.size() < 3) fail(l.number, "'label' expects an id and a text");
      VertexId v = parse_id(l.words[1], l.number, *n);
      std::string_view rest = l.text.substr(static_cast<std::size_t>(l.words[1].data() - l.text.data()) + l.words[1].size());
      if (!labels.emplace(v, std::string(trim(rest))).second) fail(l.number, "duplicate label for " + std::to_string(v));
    } else if (key == "family") {
      if (l.words.size() < 2 || l.words.size() > 3 || (l.words.size() == 3 && l.words[2] != "transitive")) {
        fail(l.number, "'family' expects a name and an optional 'transitive'");
      }
      family = std::string(l.words[1]);
      transitive = l.words.size() == 3;
    } else if (key == "sym") {
      syms.emplace_back(std::vector<std::string_view>(l.words.begin() + 1, l.words.end()), l.number);
    } else {
      fail(l.number, "unknown directive '" + std::string(key) + "'");
    }
  }
  std::size_t end_line = lines.empty() ? 1 : lines.back().number;
  if (!n) fail(end_line, "missing 'vertices' line");
  if (!root) fail(end_line, "missing 'root' line");
  if (root->first >= *n) fail(root->second, "root out of range", ErrorCode::RootOutOfRange);

  Graph g(*n, std::move(edges), static_cast<VertexId>(root->first));
  if (!labels.empty()) {
    std::vector<std::string> all(*n);
    for (VertexId v = 0; v < *n; ++v) {
      auto it = labels.find(v);
      all[v] = it == labels.end() ? std::to_string(v) : it->second;
    }
    g = g.with_labels(std::move(all));
  }
  if (!syms.empty()) {
    std::vector<Permutation> gens;
    for (const auto& [words, line] : syms) {
      if (words.size() != *n) fail(line, "'sym' needs one image per vertex");
      Permutation p;
      for (auto w : words) p.push_back(parse_id(w, line, *n));
      gens.push_back(std::move(p));
    }
    g = g.with_symmetry(std::move(gens));
  }
  if (!family.empty()) g = g.with_family(family, transitive);
  return g;
}

std::string serialize_config(const Configuration& p) {
  std::ostringstream out;
  out << "pebbleconfig 1\n";
  for (VertexId v = 0; v < p.counts().size(); ++v) {
    if (p[v] != 0) out << "p " << v << " " << p[v] << "\n";
  }
  return out.str();
}

Configuration parse_config(std::string_view text, const GraphPtr& g) {
  auto lines = body(text, "pebbleconfig");
  Configuration p(g);
  std::vector<bool> seen(g->vertex_count(), false);
  for (const Line& l : lines) {
    if (l.words[0] != "p") fail(l.number, "unknown directive '" + std::string(l.words[0]) + "'");
    expect_arity(l, 3);
    VertexId v = parse_id(l.words[1], l.number, g->vertex_count());
    if (seen[v]) fail(l.number, "duplicate entry for vertex " + std::to_string(v));
    seen[v] = true;
    std::uint64_t c = parse_number(l.words[2], l.number);
    if (c > std::numeric_limits<Count>::max()) fail(l.number, "count too large", ErrorCode::Overflow);
    p.set(v, static_cast<Count>(c));
  }
  return p;
}

std::string serialize_weights(const WeightFunction& w) {
  std::ostringstream out;
  out << "pebbleweights 1\n";
  for (VertexId v = 0; v < w.weights().size(); ++v) {
    if (!w[v].is_zero()) out << "w " << v << " " << w[v].str() << "\n";
  }
  return out.str();
}

WeightFunction parse_weights(std::string_view text, const GraphPtr& g) {
  auto lines = body(text, "pebbleweights");
  std::vector<Rational> weights(g->vertex_count());
  std::vector<bool> seen(g->vertex_count(), false);
  for (const Line& l : lines) {
    if (l.words[0] != "w") fail(l.number, "unknown directive '" + std::string(l.words[0]) + "'");
    expect_arity(l, 3);
    VertexId v = parse_id(l.words[1], l.number, g->vertex_count());
    if (seen[v]) fail(l.number, "duplicate entry for vertex " + std::to_string(v));
    seen[v] = true;
    Rational value;
    try {
      value = Rational::parse(l.words[2]);
    } catch (const Error& e) {
      fail(l.number, e.what());
    }
    if (value.is_negative()) fail(l.number, "negative weight " + value.str(), ErrorCode::NegativeWeight);
    if (v == g->root() && !value.is_zero()) fail(l.number, "root weight must be 0", ErrorCode::BadParameter);
    weights[v] = value;
  }
  return WeightFunction(g, std::move(weights));
}

std::string serialize_copies(const CopiesManifest& m) {
  std::ostringstream out;
  out << "pebblecopies 1\n";
  for (const auto& c : m.copies) {
    out << "copy " << c.graph_file << " " << c.weights_file << "\n";
    for (VertexId v = 0; v < c.embedding.image.size(); ++v) out << "map " << v << " " << c.embedding.image[v] << "\n";
  }
  return out.str();
}

CopiesManifest parse_copies(std::string_view text) {
  auto lines = body(text, "pebblecopies");
  CopiesManifest m;
  std::map<VertexId, VertexId> maps;
  std::size_t copy_line = 0;
  auto close = [&] {
    if (m.copies.empty()) return;
    auto& image = m.copies.back().embedding.image;
    VertexId expect = 0;
    for (const auto& [sub, amb] : maps) {
      if (sub != expect) fail(copy_line, "copy is missing a map line for vertex " + std::to_string(expect));
      image.push_back(amb);
      ++expect;
    }
    if (image.empty()) fail(copy_line, "copy has no map lines");
    maps.clear();
  };
  for (const Line& l : lines) {
    if (l.words[0] == "copy") {
      expect_arity(l, 3);
      close();
      m.copies.push_back({std::string(l.words[1]), std::string(l.words[2]), {}});
      copy_line = l.number;
    } else if (l.words[0] == "map") {
      if (m.copies.empty()) fail(l.number, "'map' before any 'copy'");
      expect_arity(l, 3);
      std::uint64_t sub = parse_number(l.words[1], l.number);
      std::uint64_t amb = parse_number(l.words[2], l.number);
      if (sub > std::numeric_limits<VertexId>::max() || amb > std::numeric_limits<VertexId>::max()) {
        fail(l.number, "vertex id too large", ErrorCode::VertexOutOfRange);
      }
      if (!maps.emplace(static_cast<VertexId>(sub), static_cast<VertexId>(amb)).second) {
        fail(l.number, "duplicate map for vertex " + std::to_string(sub));
      }
    } else {
      fail(l.number, "unknown directive '" + std::string(l.words[0]) + "'");
    }
  }
  close();
  return m;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ErrorCode::ParseError, 0, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::BadParameter, "failed writing " + path.string());
}

}  // namespace pebble
