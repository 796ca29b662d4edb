#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

using Count = std::uint32_t;

/// Pebble counts on the vertices of one graph.
class Configuration {
 public:
  explicit Configuration(GraphPtr graph);
  Configuration(GraphPtr graph, std::vector<Count> counts);

  const GraphPtr& graph() const { return graph_; }
  std::span<const Count> counts() const { return counts_; }
  Count operator[](VertexId v) const;
  /// |p|, the total number of pebbles.
  std::uint64_t size() const;

  void set(VertexId v, Count c);

  /// Nonzero entries as "id:count" joined by commas; "-" when empty.
  std::string str() const;

  friend bool operator==(const Configuration& a, const Configuration& b);

 private:
  GraphPtr graph_;
  std::vector<Count> counts_;
};

/// Removes two pebbles from `from` and adds one to the adjacent `to`.
/// Throws NotAdjacent or InsufficientPebbles; the input is left untouched.
Configuration apply_move(const Configuration& p, VertexId from, VertexId to);

/// 1_G: one pebble on every vertex.
Configuration uniform_configuration(const GraphPtr& g);

/// Root-fixing automorphism group generated by a graph's stored permutations.
///
/// Three working modes:
///   SortBlocks  - every generator is a transposition, so the group is the
///                 direct product of the symmetric groups on the components
///                 of the transposition graph; canonicalization sorts counts.
///   Enumerated  - the closure is materialized when its order is <= cap.
///   Ignored     - the closure exceeded the cap; no reduction is applied.
///
/// The canonical form is the lexicographically greatest image in vertex-id
/// order, so within a SortBlocks block counts end up in descending order.
class SymmetryGroup {
 public:
  enum class Mode { Trivial, SortBlocks, Enumerated, Ignored };

  static constexpr std::size_t kDefaultCap = 10000;

  explicit SymmetryGroup(const Graph& g, std::size_t cap = kDefaultCap);

  Mode mode() const { return mode_; }
  bool reduces() const { return mode_ == Mode::SortBlocks || mode_ == Mode::Enumerated; }
  /// Sorted member lists of each block (SortBlocks mode only).
  const std::vector<std::vector<VertexId>>& blocks() const { return blocks_; }
  /// Every group element including the identity (Enumerated mode only).
  const std::vector<Permutation>& elements() const { return elements_; }

  void canonicalize(std::span<const Count> counts, std::span<Count> out) const;
  bool is_canonical(std::span<const Count> counts) const;

 private:
  Mode mode_ = Mode::Trivial;
  std::vector<std::vector<VertexId>> blocks_;
  std::vector<Permutation> elements_;
};

/// Orbit representative under the graph's stored symmetry.
Configuration canonical_form(const Configuration& p, std::size_t cap = SymmetryGroup::kDefaultCap);
Configuration canonical_form(const Configuration& p, const SymmetryGroup& group);

struct EnumerationOptions {
  bool exclude_root = false;
  bool use_symmetry = false;
  std::size_t symmetry_cap = SymmetryGroup::kDefaultCap;
  /// Restricts the stream to configurations whose first free vertex holds a
  /// count in [lo, hi]; each such range is a contiguous slice of the stream.
  std::optional<std::pair<Count, Count>> first_count_range;
};

/// All configurations of one exact size, in lexicographic vertex order with
/// counts descending: (s,0,..), (s-1,1,0,..), (s-1,0,1,..), ...
///
/// With use_symmetry only canonical representatives are produced, one per orbit.
class ConfigurationStream {
 public:
  ConfigurationStream(GraphPtr g, Count size, EnumerationOptions options = {});

  std::optional<Configuration> next();

  /// Vertices that may hold pebbles, in enumeration order.
  const std::vector<VertexId>& free_vertices() const { return free_; }

 private:
  GraphPtr graph_;
  Count size_;
  EnumerationOptions options_;
  std::optional<SymmetryGroup> group_;
  std::vector<VertexId> free_;
  std::vector<Count> current_;   // indexed by free position
  std::vector<Count> scratch_;   // full-length counts for canonicality checks
  std::vector<Count> canonical_;
  bool started_ = false;
  bool done_ = false;

  bool advance();
  bool accept();
};

ConfigurationStream enumerate_configurations(GraphPtr g, Count size, EnumerationOptions options = {});

}  // namespace pebble
