#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pebble/errors.hpp"
#include "pebble/solver.hpp"

using namespace pebble;

namespace {

VertexId by_label(const Graph& g, const std::string& label) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.label(v) == label) return v;
  FAIL("no vertex " << label);
  return 0;
}

void check_witness(const Configuration& start, const SolveOutcome& out, Count target) {
  REQUIRE(out.solvable);
  REQUIRE(out.witness.has_value());
  Configuration p = start;
  for (const Move& m : *out.witness) p = apply_move(p, m.from, m.to);
  CHECK(p[p.graph()->root()] >= target);
}

}  // namespace

TEST_CASE("potential examples") {
  GraphPtr p3 = share(generate(FamilySpec::path(3)));
  CHECK(potential(Configuration(p3, {0, 0, 1})) == Rational(1));
  CHECK(potential(Configuration(p3, {3, 0, 0})) == Rational(3, 4));

  GraphPtr g4 = share(generate(FamilySpec::rooted_cube(4)));
  Configuration far(g4);
  far.set(8, 15);  // (1,1,1), distance 4
  CHECK(potential(far) == Rational(15, 16));
}

TEST_CASE("solvability examples") {
  GraphPtr p3 = share(generate(FamilySpec::path(3)));
  CHECK(is_solvable(Configuration(p3, {0, 0, 1})).solvable);

  GraphPtr c5 = share(generate(FamilySpec::cycle(5)));
  Configuration two(c5, {0, 0, 2, 2, 0});
  REQUIRE(c5->distance(0, 2) == 2);
  REQUIRE(c5->distance(0, 3) == 2);
  CHECK_FALSE(is_solvable(two).solvable);

  GraphPtr l5 = share(generate(FamilySpec::named("lemma5")));
  Configuration q(l5);
  q.set(by_label(*l5, "x_1"), 1);
  q.set(by_label(*l5, "x_2"), 1);
  q.set(by_label(*l5, "z"), 8);
  auto out = is_solvable(q);
  check_witness(q, out, 1);

  // Brute-force oracle: v_0 -> v_1 gives v_1 two pebbles, then v_1 -> r.
  Configuration p31(p3, {3, 1, 0});
  REQUIRE(oracle::solvable(oracle::plain(*p3), {3, 1, 0}));
  check_witness(p31, is_solvable(p31), 1);
  REQUIRE_FALSE(oracle::solvable(oracle::plain(*p3), {3, 0, 0}));
  CHECK_FALSE(is_solvable(Configuration(p3, {3, 0, 0})).solvable);
}

TEST_CASE("t-fold targets") {
  GraphPtr p3 = share(generate(FamilySpec::path(3)));
  Configuration p(p3, {8, 0, 0});
  check_witness(p, is_solvable(p, 2), 2);
  CHECK_FALSE(is_solvable(p, 3).solvable);
  CHECK(is_solvable(Configuration(p3, {0, 0, 3}), 3).solvable);

  GraphPtr q3 = share(generate(FamilySpec::hypercube(3)));
  std::mt19937_64 rng(23);
  auto plain = oracle::plain(*q3);
  for (int trial = 0; trial < 60; ++trial) {
    auto counts = oracle::random_counts(rng, plain, 6 + trial % 8);
    Count t = 1 + trial % 3;
    Configuration c(q3, counts);
    auto out = is_solvable(c, t);
    CHECK(out.solvable == oracle::solvable(plain, counts, t));
    if (out.solvable) check_witness(c, out, t);
  }
}

TEST_CASE("resource limit is an error, not a verdict") {
  // Unsolvable with potential 5/4, so neither shortcut settles it.
  GraphPtr c9 = share(generate(FamilySpec::cycle(9)));
  Configuration p(c9, {0, 0, 0, 0, 10, 10, 0, 0, 0});
  REQUIRE(potential(p) >= Rational(1));
  CHECK_FALSE(is_solvable(p).solvable);
  SolverOptions opts;
  opts.max_nodes = 3;
  try {
    is_solvable(p, 1, opts);
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.code() == ErrorCode::ResourceLimit);
  }
}

TEST_CASE("solver agrees with breadth-first search on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 250; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, 2 + trial % 7, 0.25));
    auto plain = oracle::plain(*g);
    Count size = static_cast<Count>(trial % 11);
    auto counts = oracle::random_counts(rng, plain, size);
    Configuration p(g, counts);
    SolverOptions opts;
    opts.use_symmetry = trial % 2 == 0;
    auto out = is_solvable(p, 1, opts);
    REQUIRE(out.solvable == oracle::solvable(plain, counts));
    if (out.solvable) check_witness(p, out, 1);
  }
}

TEST_CASE("one solver reused across queries stays exact") {
  GraphPtr lol = share(generate(FamilySpec::lollipop(1)));
  auto plain = oracle::plain(*lol);
  Solver solver(lol);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    auto counts = oracle::random_counts(rng, plain, 3 + trial % 7);
    CHECK(solver.solvable(counts) == oracle::solvable(plain, counts));
  }
  CHECK(solver.memo_size() > 0);
  solver.clear_memo();
  CHECK(solver.memo_size() == 0);
}

TEST_CASE("potential shortcuts are respected") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    GraphPtr g = share(oracle::random_graph(rng, 2 + trial % 7, 0.3));
    auto plain = oracle::plain(*g);
    auto counts = oracle::random_counts(rng, plain, trial % 10);
    Configuration p(g, counts);
    Count t = 1 + trial % 2;
    bool solved = is_solvable(p, t).solvable;
    if (potential(p) < Rational(t)) CHECK_FALSE(solved);
    for (VertexId v = 0; v < g->vertex_count(); ++v)
      if (counts[v] >= (t << g->root_distances()[v])) CHECK(solved);
  }
}

TEST_CASE("path solvability follows the binary weight criterion") {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    GraphPtr path = share(generate(FamilySpec::path(k + 1)));
    Solver solver(path);
    auto weight = [&](const oracle::Counts& counts) {
      std::uint64_t w = 0;
      for (std::uint32_t i = 0; i < k; ++i) w += std::uint64_t{counts[i]} << i;
      return w;
    };
    if (k <= 5) {
      for (Count s = 0; s <= (1U << k); ++s)
        for (auto& counts : oracle::compositions(k + 1, s, k))
          REQUIRE(solver.solvable(counts) == (weight(counts) >= (1U << k)));
      continue;
    }
    // k = 6 has C(70,6) configurations; sample every size instead.
    std::mt19937_64 rng(43);
    auto plain = oracle::plain(*path);
    for (Count s = 0; s <= (1U << k); ++s) {
      for (int rep = 0; rep < 300; ++rep) {
        auto counts = oracle::random_counts(rng, plain, s);
        REQUIRE(solver.solvable(counts) == (weight(counts) >= (1U << k)));
      }
    }
  }
}
