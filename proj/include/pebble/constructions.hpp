#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pebble/graph.hpp"
#include "pebble/strategies.hpp"
#include "pebble/weight_function.hpp"

namespace pebble {

/// Named weight functions on generated graphs.
///
///   fig2                  rooted_cube(3): 2, 2/3, 1/3 by distance from the root
///   q3prime               hypercube(3): 2, 4/3, 1 by number of ones
///   lemma5                rooted_cube(4): 4, 2, 4/3, 1 by distance
///   q4star                hypercube(4): 4 on every non-root vertex
///   conjecture n          rooted_cube(n): 1/d(v, r)
///   lollipop n            lollipop(n): 2^j on v_j, 1 on every u_i
///   lollipop_general n m  same weights with m arms, m >= 2^(n+1) + 1
///   cycle_combined k      cycle(2k+1): sum of the two mirrored path strategies
///   path k                path on k+1 vertices: 2^i on v_i
///
/// Throws UnknownName or BadParameter.
WeightFunction paper_weight(std::string_view name, std::span<const std::uint32_t> params = {});

/// Names accepted by paper_weight.
std::vector<std::string_view> paper_weight_names();

/// Maps rooted_cube(n) onto the copy of it inside hypercube(n) whose cube
/// vertices have coordinate i (1-based) equal to 1; the root maps to all-zeros.
Embedding cube_slice_embedding(std::uint32_t n, std::uint32_t i);

/// The n slice copies of `base` (a weight function on rooted_cube(n)) inside `cube`.
std::vector<WeightCopy> cube_slice_copies(const WeightFunction& base, const GraphPtr& cube);

/// Path strategy on k+2 vertices and its two mirrored embeddings into
/// cycle(2k+1): one runs from the root through 1, 2, ..., the other through
/// 2k, 2k-1, ...
struct PathPair {
  WeightFunction path;
  Embedding forward;
  Embedding backward;
};
PathPair cycle_path_pair(std::uint32_t k);

}  // namespace pebble
