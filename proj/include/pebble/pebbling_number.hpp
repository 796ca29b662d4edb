#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/rational.hpp"
#include "pebble/solver.hpp"
#include "pebble/weight_function.hpp"

namespace pebble {

struct SearchOptions {
  unsigned threads = 1;
  /// Per-query solver node cap.
  std::uint64_t max_nodes = 100'000'000;
  bool use_symmetry = true;
  std::size_t symmetry_cap = SymmetryGroup::kDefaultCap;
  /// Skip every extension of a partial configuration that is already
  /// solvable (adding pebbles never destroys solvability). When false, every
  /// configuration is streamed and solved individually.
  bool monotone_pruning = true;

  SolverOptions solver_options() const { return {max_nodes, use_symmetry, symmetry_cap}; }
};

/// What an exhaustive scan actually covered.
struct Exhaustiveness {
  std::vector<Count> sizes_scanned;  // ascending; the last one had no unsolvable configuration
  Count start_size = 0;              // 2^ecc(root)
  bool symmetry_used = false;
  bool monotone_pruning = true;
  std::uint64_t solver_nodes = 0;
};

struct PiResult {
  Count value = 0;
  /// Root-unsolvable configuration of size value - 1.
  Configuration witness_unsolvable;
  Exhaustiveness exhaustiveness;
};

/// First root-unsolvable configuration of exactly `size` pebbles (root empty),
/// or nullopt when every such configuration is solvable.
std::optional<Configuration> find_unsolvable(const GraphPtr& g, Count size, const SearchOptions& options = {},
                                             Exhaustiveness* record = nullptr);

/// pi(G, r) for the graph's own root.
///
/// Scans sizes upward from 2^ecc(r), the distance lower bound, and stops at
/// the first size with no unsolvable configuration. That size is pi: sizes
/// below the start are beaten by (2^ecc - 1) pebbles on a farthest vertex,
/// and once size s is all-solvable every larger configuration contains a
/// size-s sub-configuration, hence is solvable too.
PiResult pi_rooted(const GraphPtr& g, const SearchOptions& options = {});

/// max over roots of pi(G, r). Vertex-transitive families evaluate one root;
/// otherwise one root per orbit of the stored symmetry.
Count pi_global(const GraphPtr& g, const SearchOptions& options = {});

/// pi(G) == |V(G)|.
bool is_class0(const GraphPtr& g, const SearchOptions& options = {});

struct MaxUnsolvable {
  Rational weight;
  Configuration configuration;
};

/// Maximum of w(p) over root-unsolvable configurations with |p| <= size_bound,
/// by branch and bound (partial weight + remaining pebbles * largest remaining
/// weight <= best prunes) together with monotone pruning.
MaxUnsolvable max_unsolvable_weight(const WeightFunction& w, Count size_bound, const SearchOptions& options = {});

}  // namespace pebble
