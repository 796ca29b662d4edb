#pragma once

// Deliberately naive reference implementations used only by the tests. None
// of them call into the library's search, enumeration, symmetry or LP code;
// they share nothing with it beyond the edge list of a graph.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "pebble/graph.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Counts = std::vector<std::uint32_t>;

struct Plain {
  std::size_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t root = 0;
};

Plain plain(const pebble::Graph& g);

/// Floyd-Warshall all-pairs distances.
std::vector<std::vector<std::uint32_t>> distances(const Plain& g);

/// Breadth-first search over every reachable configuration.
bool solvable(const Plain& g, const Counts& p, std::uint32_t target = 1);

/// Every configuration of exactly `size` pebbles, optionally with vertex
/// `zero` forced empty.
std::vector<Counts> compositions(std::size_t n, std::uint32_t size, std::optional<std::uint32_t> zero = std::nullopt);

/// Least s such that every size-s configuration with an empty root is
/// solvable, scanning from s = 1.
std::uint32_t pebbling_number(const Plain& g);

struct MaxWeight {
  Q weight;
  Counts p;
};

/// Max w(p) over unsolvable p with |p| <= bound, by full enumeration.
MaxWeight max_unsolvable(const Plain& g, const std::vector<Q>& w, std::uint32_t bound);

/// C(n, k) by the multiplicative formula.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of orbits of size-s configurations (root empty when
/// exclude_root) under the group generated by `gens`, by closure.
std::size_t orbit_count(const Plain& g, std::uint32_t size, bool exclude_root,
                        const std::vector<std::vector<std::uint32_t>>& gens);

/// Root-preserving isomorphism test by backtracking.
bool isomorphic(const Plain& a, const Plain& b);

/// maximize c.x s.t. A x <= b, x >= 0 by enumerating basic solutions.
/// nullopt when no vertex is feasible. Callers ensure boundedness.
std::optional<Q> lp_vertex_max(const std::vector<Q>& c, const std::vector<std::vector<Q>>& a,
                               const std::vector<Q>& b);

/// Connected random graph on n vertices: a random spanning tree plus extra
/// edges, each present with probability `density`.
pebble::Graph random_graph(std::mt19937_64& rng, std::size_t n, double density);

/// Random tree rooted at a random vertex.
pebble::Graph random_tree(std::mt19937_64& rng, std::size_t n);

/// Random configuration with `size` pebbles spread over non-root vertices.
Counts random_counts(std::mt19937_64& rng, const Plain& g, std::uint32_t size);

}  // namespace oracle
