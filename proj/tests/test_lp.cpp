#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>

#include "oracles.hpp"
#include "pebble/constructions.hpp"
#include "pebble/errors.hpp"
#include "pebble/lp.hpp"

using namespace pebble;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadParameter;
}

Rational to_rational(const oracle::Q& q) {
  return Rational(BigInt(boost::multiprecision::numerator(q)), BigInt(boost::multiprecision::denominator(q)));
}

std::vector<PlacedCertificate> cycle_strategies(std::uint32_t k) {
  PathPair pp = cycle_path_pair(k);
  CertificatePtr path = certify_tree(pp.path);
  REQUIRE(path);
  return {{path, pp.forward}, {path, pp.backward}};
}

void check_solution(const LinearProgram& lp, const LpSolution& s) {
  REQUIRE(s.status == LpStatus::Optimal);
  std::size_t n = lp.objective.size();
  REQUIRE(s.point.size() == n);
  REQUIRE(s.dual.size() == lp.rows.size());
  Rational value;
  for (std::size_t j = 0; j < n; ++j) {
    CHECK_FALSE(s.point[j].is_negative());
    value += lp.objective[j] * s.point[j];
  }
  CHECK(value == s.optimum);
  Rational dual_value;
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[r].coefficients[j] * s.point[j];
    CHECK(lhs <= lp.rows[r].rhs);
    CHECK_FALSE(s.dual[r].is_negative());
    dual_value += s.dual[r] * lp.rows[r].rhs;
  }
  CHECK(dual_value == s.optimum);
  for (std::size_t j = 0; j < n; ++j) {
    Rational col;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) col += s.dual[r] * lp.rows[r].coefficients[j];
    CHECK(col >= lp.objective[j]);
  }
}

// Subtree of g spanned by breadth-first search from the root, as its own graph.
std::pair<Graph, Embedding> bfs_tree(const Graph& g, std::mt19937_64& rng) {
  std::size_t n = g.vertex_count();
  std::vector<VertexId> order{g.root()};
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  seen[g.root()] = true;
  std::deque<VertexId> queue{g.root()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    std::vector<VertexId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    std::shuffle(nb.begin(), nb.end(), rng);
    for (VertexId u : nb) {
      if (seen[u]) continue;
      seen[u] = true;
      parent[u] = static_cast<int>(v);
      order.push_back(u);
      queue.push_back(u);
    }
  }
  // New id i is order[i]; the root becomes 0.
  std::vector<VertexId> local(n);
  for (VertexId i = 0; i < n; ++i) local[order[i]] = i;
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v)
    if (parent[v] >= 0) edges.emplace_back(local[v], local[static_cast<VertexId>(parent[v])]);
  return {Graph(n, edges, 0), Embedding{order}};
}

// w(v) = 2^(height - depth(v)): every parent carries twice its child.
WeightFunction geometric(const GraphPtr& tree) {
  std::uint32_t h = 0;
  for (auto d : tree->root_distances()) h = std::max(h, d);
  std::vector<Rational> w(tree->vertex_count());
  for (VertexId v = 0; v < tree->vertex_count(); ++v)
    if (v != tree->root()) w[v] = Rational(std::int64_t{1} << (h - tree->root_distances()[v]));
  return WeightFunction(tree, w);
}

}  // namespace

TEST_CASE("solve_lp examples") {
  LinearProgram hand{{1, 1}, {{{2, 1}, 7}, {{1, 2}, 7}}};
  LpSolution s = solve_lp(hand);
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.optimum == Rational(14, 3));
  CHECK(s.point == std::vector<Rational>{Rational(7, 3), Rational(7, 3)});
  check_solution(hand, s);

  LinearProgram one{{1}, {{{1}, 3}}};
  CHECK(solve_lp(one).optimum == Rational(3));

  LinearProgram free{{1}, {}};
  CHECK(solve_lp(free).status == LpStatus::Unbounded);

  LinearProgram infeasible{{1}, {{{1}, -1}}};
  CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

  LinearProgram ragged{{1, 1}, {{{1}, 3}}};
  CHECK(code_of([&] { solve_lp(ragged); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("negative right-hand sides go through phase one") {
  // x + y <= 4, -x <= -1, -y <= -2: maximize 2x + y -> x = 2, y = 2.
  LinearProgram lp{{2, 1}, {{{1, 1}, 4}, {{-1, 0}, -1}, {{0, -1}, -2}}};
  LpSolution s = solve_lp(lp);
  CHECK(s.optimum == Rational(6));
  check_solution(lp, s);
}

TEST_CASE("simplex agrees with vertex enumeration on random programs") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> coef(0, 6), rhs(1, 20), neg(-3, 3), vars(1, 4), rows(1, 4);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t n = static_cast<std::size_t>(vars(rng));
    std::size_t m = static_cast<std::size_t>(rows(rng));
    LinearProgram lp;
    std::vector<oracle::Q> c(n), b(m);
    std::vector<std::vector<oracle::Q>> a(m + 1, std::vector<oracle::Q>(n));
    for (std::size_t j = 0; j < n; ++j) {
      int v = neg(rng);
      c[j] = v;
      lp.objective.push_back(v);
    }
    for (std::size_t r = 0; r < m; ++r) {
      LinearProgram::Row row;
      for (std::size_t j = 0; j < n; ++j) {
        int v = trial % 3 == 0 ? neg(rng) : coef(rng);
        a[r][j] = v;
        row.coefficients.push_back(v);
      }
      int h = trial % 3 == 0 ? neg(rng) : rhs(rng);
      b[r] = h;
      row.rhs = h;
      lp.rows.push_back(row);
    }
    // A box row keeps every instance bounded so the oracle applies.
    LinearProgram::Row box;
    for (std::size_t j = 0; j < n; ++j) {
      a[m][j] = 1;
      box.coefficients.push_back(1);
    }
    box.rhs = 30;
    lp.rows.push_back(box);
    b.push_back(30);

    auto expect = oracle::lp_vertex_max(c, a, b);
    LpSolution s = solve_lp(lp);
    if (!expect) {
      CHECK(s.status == LpStatus::Infeasible);
      continue;
    }
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.optimum == to_rational(*expect));
    check_solution(lp, s);
  }
}

TEST_CASE("lp_pebbling_bound examples") {
  GraphPtr c5 = share(generate(FamilySpec::cycle(5)));
  LpBound b = lp_pebbling_bound(c5, cycle_strategies(2));
  CHECK(b.optimum == Rational(14, 3));
  CHECK(b.bound == 5);

  CertificatePtr path = certify_tree(paper_weight("path", std::vector<std::uint32_t>{2}));
  LpBound p3 = lp_pebbling_bound(path->graph(), std::vector<CertificatePtr>{path});
  CHECK(p3.optimum == Rational(3));
  CHECK(p3.bound == 4);

  WeightFunction star = paper_weight("q4star");
  CertificatePtr l5 = certify_oracle(paper_weight("lemma5"));
  std::vector<CertifiedCopy> copies;
  for (const WeightCopy& c : cube_slice_copies(l5->weights(), star.graph())) copies.push_back({c.embedding, l5});
  CertificatePtr starcert = certify_decomposition(star, copies);
  LpBound q4 = lp_pebbling_bound(star.graph(), std::vector<CertificatePtr>{starcert});
  CHECK(q4.optimum == Rational(15));
  CHECK(q4.bound == 16);
}

TEST_CASE("lp_pebbling_bound errors") {
  GraphPtr c5 = share(generate(FamilySpec::cycle(5)));
  CHECK(code_of([&] { lp_pebbling_bound(c5, std::vector<PlacedCertificate>{}); }) == ErrorCode::EmptyStrategySet);
  auto strategies = cycle_strategies(2);
  CHECK(code_of([&] { lp_pebbling_bound(c5, {strategies[0]}); }) == ErrorCode::UnboundedCoverage);
  auto null = strategies;
  null[1].certificate = nullptr;
  CHECK(code_of([&] { lp_pebbling_bound(c5, null); }) == ErrorCode::UncertifiedComponent);
  auto bad = strategies;
  bad[1].embedding.image = {1, 3, 4, 0};
  CHECK(code_of([&] { lp_pebbling_bound(c5, bad); }) == ErrorCode::BadEmbedding);
}

TEST_CASE("cycle bounds are exact") {
  const Count pi[] = {3, 5, 11, 21};
  const Rational optimum[] = {Rational(2), Rational(14, 3), Rational(10), Rational(62, 3)};
  for (std::uint32_t k = 1; k <= 4; ++k) {
    GraphPtr c = share(generate(FamilySpec::cycle(2 * k + 1)));
    LpBound b = lp_pebbling_bound(c, cycle_strategies(k));
    CHECK(b.optimum == optimum[k - 1]);
    CHECK(b.bound == pi[k - 1]);
    CHECK(b.bound == pi_rooted(c).value);
    check_solution(
        [&] {
          LinearProgram lp;
          lp.objective.assign(c->vertex_count() - 1, Rational(1));
          for (const auto& s : cycle_strategies(k)) {
            WeightFunction w = extend(s.certificate->weights(), c, s.embedding);
            LinearProgram::Row row;
            for (VertexId v = 1; v < c->vertex_count(); ++v) row.coefficients.push_back(w[v]);
            row.rhs = w.total();
            lp.rows.push_back(row);
          }
          return lp;
        }(),
        b.solution);
  }
}

TEST_CASE("bounds from spanning-tree strategies are sound") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, 2 + trial % 6, 0.3));
    std::vector<PlacedCertificate> certs;
    for (int i = 0; i < 2; ++i) {
      auto [tree, emb] = bfs_tree(*g, rng);
      GraphPtr t = share(std::move(tree));
      CertificatePtr c = certify_tree(geometric(t));
      REQUIRE(c);
      certs.push_back({c, emb});
    }
    LpBound b = lp_pebbling_bound(g, certs);
    PiResult pi = pi_rooted(g);
    REQUIRE(pi.value == oracle::pebbling_number(oracle::plain(*g)));
    CHECK(b.bound >= pi.value);
    CHECK(b.optimum >= Rational(static_cast<std::int64_t>(pi.witness_unsolvable.size())));
  }
}
