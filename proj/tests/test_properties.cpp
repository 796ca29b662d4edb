// Randomized invariant checks. Every suite runs at least 200 cases on graphs
// with at most 8 vertices, from fixed seeds.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <numeric>

#include "oracles.hpp"
#include "pebble/errors.hpp"
#include "pebble/pebbling_number.hpp"
#include "pebble/strategies.hpp"

using namespace pebble;

namespace {

constexpr int kCases = 200;

std::uniform_int_distribution<std::size_t> vertices(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi);
}

// Spanning tree of g found by randomized breadth-first search, as a graph of
// its own plus the map back into g. The root becomes vertex 0.
std::pair<GraphPtr, Embedding> spanning_tree(const Graph& g, std::mt19937_64& rng) {
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
  std::vector<VertexId> local(n);
  for (VertexId i = 0; i < n; ++i) local[order[i]] = i;
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v)
    if (parent[v] >= 0) edges.emplace_back(local[v], local[static_cast<VertexId>(parent[v])]);
  return {share(Graph(n, edges, 0)), Embedding{order}};
}

// Random weights on a tree with w(parent) >= 2 w(child) below the root's
// neighbours: each vertex gets a random amount plus twice its heaviest child.
WeightFunction random_tree_weights(const GraphPtr& t, std::mt19937_64& rng) {
  std::size_t n = t->vertex_count();
  std::vector<VertexId> by_depth(n);
  std::iota(by_depth.begin(), by_depth.end(), 0U);
  std::sort(by_depth.begin(), by_depth.end(),
            [&](VertexId a, VertexId b) { return t->root_distances()[a] > t->root_distances()[b]; });
  std::uniform_int_distribution<int> num(1, 5), den(1, 3);
  std::vector<Rational> w(n);
  for (VertexId v : by_depth) {
    if (v == t->root()) continue;
    Rational heaviest;
    for (VertexId c : t->neighbors(v))
      if (t->root_distances()[c] > t->root_distances()[v]) heaviest = std::max(heaviest, w[c]);
    w[v] = Rational(num(rng), den(rng)) + Rational(2) * heaviest;
  }
  return WeightFunction(t, w);
}

}  // namespace

TEST_CASE("distance is a metric matching Floyd-Warshall") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < kCases; ++trial) {
    Graph g = oracle::random_graph(rng, vertices(1, 8)(rng), 0.3);
    auto d = oracle::distances(oracle::plain(g));
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      CHECK(g.distance(a, a) == 0);
      for (VertexId b = 0; b < g.vertex_count(); ++b) {
        REQUIRE(g.distance(a, b) == d[a][b]);
        CHECK(g.distance(a, b) == g.distance(b, a));
        if (a != b) CHECK(g.distance(a, b) > 0);
        for (VertexId c = 0; c < g.vertex_count(); ++c) CHECK(d[a][c] <= d[a][b] + d[b][c]);
      }
    }
  }
}

TEST_CASE("solvability is monotone under adding pebbles") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < kCases; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, vertices(2, 8)(rng), 0.25));
    auto plain = oracle::plain(*g);
    std::uniform_int_distribution<Count> size(0, 8), extra(0, 2);
    auto p = oracle::random_counts(rng, plain, size(rng));
    auto q = p;
    for (VertexId v = 0; v < g->vertex_count(); ++v)
      if (v != g->root() && std::accumulate(q.begin(), q.end(), 0U) < 10) q[v] += extra(rng);
    Solver solver(g);
    bool sp = solver.solvable(p);
    bool sq = solver.solvable(q);
    REQUIRE(sp == oracle::solvable(plain, p));
    if (sp) CHECK(sq);
  }
}

TEST_CASE("potential shortcuts are sound") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < kCases; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, vertices(2, 8)(rng), 0.3));
    auto plain = oracle::plain(*g);
    std::uniform_int_distribution<Count> size(0, 10), target(1, 3);
    Configuration p(g, oracle::random_counts(rng, plain, size(rng)));
    Count t = target(rng);
    bool solved = is_solvable(p, t).solvable;
    REQUIRE(solved == oracle::solvable(plain, {p.counts().begin(), p.counts().end()}, t));
    if (potential(p) < Rational(t)) CHECK_FALSE(solved);
    for (VertexId v = 0; v < g->vertex_count(); ++v)
      if (p[v] >= (t << g->root_distances()[v])) CHECK(solved);
  }
}

TEST_CASE("witnesses replay legally") {
  std::mt19937_64 rng(131);
  int replayed = 0;
  for (int trial = 0; trial < kCases; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, vertices(2, 8)(rng), 0.3));
    auto plain = oracle::plain(*g);
    std::uniform_int_distribution<Count> size(2, 12), target(1, 2);
    Configuration p(g, oracle::random_counts(rng, plain, size(rng)));
    Count t = target(rng);
    SolveOutcome out = is_solvable(p, t);
    if (!out.solvable) continue;
    REQUIRE(out.witness.has_value());
    Configuration q = p;
    for (const Move& m : *out.witness) q = apply_move(q, m.from, m.to);
    CHECK(q[g->root()] >= t);
    ++replayed;
  }
  CHECK(replayed >= kCases / 4);
}

TEST_CASE("enumeration counts match stars and bars") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < kCases; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, vertices(1, 8)(rng), 0.3));
    std::uint64_t n = g->vertex_count();
    Count s = std::uniform_int_distribution<Count>(0, 6)(rng);
    std::uint64_t all = 0, rootless = 0;
    ConfigurationStream a(g, s);
    while (a.next()) ++all;
    EnumerationOptions ex;
    ex.exclude_root = true;
    ConfigurationStream b(g, s, ex);
    while (b.next()) ++rootless;
    CHECK(all == oracle::binomial(s + n - 1, n - 1));
    if (n >= 2) CHECK(rootless == oracle::binomial(s + n - 2, n - 2));
  }
}

TEST_CASE("pi respects distance bounds and matches brute force") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < kCases; ++trial) {
    std::size_t n = vertices(1, 8)(rng);
    GraphPtr g = share(oracle::random_graph(rng, n, 0.35));
    PiResult r = pi_rooted(g);
    CHECK(r.value >= (Count{1} << g->eccentricity(g->root())));
    CHECK(r.value >= g->vertex_count());
    CHECK(r.witness_unsolvable.size() + 1 == r.value);
    CHECK_FALSE(is_solvable(r.witness_unsolvable).solvable);
    CHECK_FALSE(find_unsolvable(g, r.value).has_value());
    if (n <= 6) CHECK(r.value == oracle::pebbling_number(oracle::plain(*g)));
    if (trial % 4 == 0) CHECK(pi_global(g) >= (Count{1} << g->diameter()));
  }
}

TEST_CASE("tree strategies pass the exhaustive oracle") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < kCases; ++trial) {
    GraphPtr t = share(oracle::random_tree(rng, vertices(2, 7)(rng)));
    WeightFunction w = random_tree_weights(t, rng);
    REQUIRE(check_tree_strategy(w));
    OracleVerdict v = verify_validity_oracle(w);
    CHECK(v.valid);
    CHECK(v.max_weight <= w.total());
  }
}

TEST_CASE("conic combinations of certified functions stay valid") {
  std::mt19937_64 rng(127);
  std::uniform_int_distribution<int> num(0, 9), den(1, 3), parts(1, 3);
  int combined = 0;
  for (int trial = 0; trial < kCases; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, vertices(2, 6)(rng), 0.35));
    std::vector<CertificateComponent> components;
    int k = parts(rng);
    for (int i = 0; i < k; ++i) {
      auto [tree, emb] = spanning_tree(*g, rng);
      CertificatePtr cert = certify_tree(random_tree_weights(tree, rng));
      REQUIRE(cert);
      Rational c(num(rng), den(rng));
      if (c > Rational(3)) c = Rational(3);
      components.push_back({c, cert, emb});
    }
    try {
      CertificatePtr sum = conic_combine(g, components);
      REQUIRE(sum);
      REQUIRE(sum->weights().all_positive());
      OracleVerdict v = verify_validity_oracle(sum->weights());
      CHECK(v.valid);
      ++combined;
    } catch (const Error& e) {
      // Every coefficient drawn as zero leaves the vertices unweighted.
      CHECK(e.code() == ErrorCode::UncoveredVertex);
    }
  }
  CHECK(combined >= kCases * 3 / 4);
}
