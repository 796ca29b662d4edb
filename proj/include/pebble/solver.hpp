#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/rational.hpp"

namespace pebble {

struct Move {
  VertexId from = 0;
  VertexId to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

struct SolveOutcome {
  bool solvable = false;
  /// Present when requested and solvable; replays legally to >= target pebbles on the root.
  std::optional<std::vector<Move>> witness;
  SolveStats stats;
};

struct SolverOptions {
  /// Search nodes allowed per query; exceeding it raises ResourceLimitError.
  std::uint64_t max_nodes = 100'000'000;
  bool use_symmetry = true;
  std::size_t symmetry_cap = SymmetryGroup::kDefaultCap;
};

/// Sum of p(v) / 2^d(v, root). Pebbling moves never increase it.
Rational potential(const Configuration& p);

/// Decides whether some sequence of pebbling moves puts `target` pebbles on
/// the root.
///
/// Depth-first search over moves, memoized on the canonical form of the
/// configuration. Every move shrinks the configuration by one pebble, so the
/// reachable states form a DAG and no in-progress marker is needed. Two sound
/// shortcuts cut the search: potential below the target means unsolvable, and
/// a vertex holding target * 2^d(v) pebbles means solvable.
///
/// The memo survives between queries; one Solver per worker thread.
class Solver {
 public:
  explicit Solver(GraphPtr graph, SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  const GraphPtr& graph() const { return graph_; }
  const SolverOptions& options() const { return options_; }

  SolveOutcome solve(const Configuration& p, Count target = 1, bool want_witness = true);

  /// Fast path for exhaustive searches; `counts` is indexed by vertex id.
  bool solvable(std::span<const Count> counts, Count target = 1);

  const SolveStats& totals() const { return totals_; }
  std::size_t memo_size() const;
  void clear_memo();

 private:
  struct Memo;

  GraphPtr graph_;
  SolverOptions options_;
  std::optional<SymmetryGroup> group_;
  std::vector<std::uint32_t> dist_;
  std::uint32_t ecc_ = 0;
  std::vector<unsigned __int128> potential_scale_;  // 2^(ecc - d(v))
  std::vector<Move> moves_;
  std::vector<VertexId> toward_root_;               // next hop on a shortest path to the root
  std::vector<Count> work_;
  std::vector<Count> canon_;
  std::vector<std::vector<std::uint64_t>> binom_;  // binom_[a][b], saturating
  std::unique_ptr<Memo> memo_;
  SolveStats totals_;
  std::uint64_t query_nodes_ = 0;

  bool search(Count target);
  bool shortcut_unsolvable(Count target) const;
  std::optional<VertexId> shortcut_solvable(Count target) const;
  std::uint64_t rank_of(std::span<const Count> counts);
  void ensure_binomials(std::size_t max_a);
  std::vector<Move> reconstruct(Count target);
  void load(std::span<const Count> counts);
};

/// One-shot convenience wrapper around Solver.
SolveOutcome is_solvable(const Configuration& p, Count target = 1, SolverOptions options = {});

}  // namespace pebble
