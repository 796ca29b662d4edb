#include "pebble/solver.hpp"

#include <algorithm>
#include <limits>

#include <absl/container/flat_hash_map.h>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

constexpr std::uint32_t kMaxEccentricity = 60;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

}  // namespace

struct Solver::Memo {
  // target -> (rank of canonical configuration -> solvable)
  absl::flat_hash_map<Count, absl::flat_hash_map<std::uint64_t, bool>> tables;
};

Rational potential(const Configuration& p) {
  const Graph& g = *p.graph();
  Rational sum;
  auto dist = g.root_distances();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (p.counts()[v] == 0) continue;
    sum += Rational(BigInt(p.counts()[v]), BigInt(1) << dist[v]);
  }
  return sum;
}

Solver::Solver(GraphPtr graph, SolverOptions options)
    : graph_(std::move(graph)), options_(options), memo_(std::make_unique<Memo>()) {
  const Graph& g = *graph_;
  std::size_t n = g.vertex_count();
  auto rd = g.root_distances();
  dist_.assign(rd.begin(), rd.end());
  ecc_ = *std::max_element(dist_.begin(), dist_.end());
  if (ecc_ > kMaxEccentricity) {
    throw Error(ErrorCode::ResourceLimit, "root eccentricity " + std::to_string(ecc_) + " exceeds " +
                                              std::to_string(kMaxEccentricity));
  }
  for (VertexId v = 0; v < n; ++v) potential_scale_.push_back(static_cast<unsigned __int128>(1) << (ecc_ - dist_[v]));

  for (const Edge& e : g.edges()) {
    moves_.push_back({e.u, e.v});
    moves_.push_back({e.v, e.u});
  }
  // Moves toward the root first, then from vertices nearest the root.
  std::stable_sort(moves_.begin(), moves_.end(), [&](const Move& a, const Move& b) {
    int da = static_cast<int>(dist_[a.to]) - static_cast<int>(dist_[a.from]);
    int db = static_cast<int>(dist_[b.to]) - static_cast<int>(dist_[b.from]);
    if (da != db) return da < db;
    return dist_[a.from] < dist_[b.from];
  });

  toward_root_.assign(n, g.root());
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (dist_[w] + 1 == dist_[v]) {
        toward_root_[v] = w;
        break;
      }
    }
  }

  if (options_.use_symmetry) {
    group_.emplace(g, options_.symmetry_cap);
    if (!group_->reduces()) group_.reset();
  }
  work_.assign(n, 0);
  canon_.assign(n, 0);
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

std::size_t Solver::memo_size() const {
  std::size_t total = 0;
  for (const auto& [t, table] : memo_->tables) total += table.size();
  return total;
}

void Solver::clear_memo() { memo_->tables.clear(); }

void Solver::ensure_binomials(std::size_t max_a) {
  std::size_t n = graph_->vertex_count();
  while (binom_.size() <= max_a) {
    std::size_t a = binom_.size();
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t b = 1; b <= n && b <= a; ++b) {
      std::uint64_t x = binom_[a - 1][b - 1];
      std::uint64_t y = b <= a - 1 ? binom_[a - 1][b] : 0;
      row[b] = (x == kSaturated || y == kSaturated || x > kSaturated - y) ? kSaturated : x + y;
    }
    binom_.push_back(std::move(row));
  }
}

// Combinatorial number system: the configuration maps to the strictly
// increasing sequence s_i = c_0 + ... + c_i + i, and its rank is the sum of
// C(s_i, i + 1). This is a bijection from configurations of size <= S onto
// [0, C(S + n, n)), so ranks are exact keys as long as that bound fits.
std::uint64_t Solver::rank_of(std::span<const Count> counts) {
  std::size_t n = counts.size();
  std::uint64_t size = 0;
  for (Count c : counts) size += c;
  ensure_binomials(size + n);
  if (binom_[size + n][n] == kSaturated) {
    throw ResourceLimitError("configuration space of size " + std::to_string(size) + " on " + std::to_string(n) +
                             " vertices is too large for 64-bit memo keys");
  }
  std::uint64_t rank = 0;
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s += counts[i] + (i == 0 ? 0 : 1);
    rank += binom_[s][i + 1];
  }
  return rank;
}

void Solver::load(std::span<const Count> counts) {
  if (counts.size() != work_.size()) {
    throw Error(ErrorCode::GraphMismatch, "configuration length does not match the solver's graph");
  }
  std::copy(counts.begin(), counts.end(), work_.begin());
}

bool Solver::shortcut_unsolvable(Count target) const {
  unsigned __int128 weighted = 0;
  for (std::size_t v = 0; v < work_.size(); ++v) weighted += potential_scale_[v] * work_[v];
  return weighted < (static_cast<unsigned __int128>(target) << ecc_);
}

std::optional<VertexId> Solver::shortcut_solvable(Count target) const {
  for (VertexId v = 0; v < work_.size(); ++v) {
    if (dist_[v] >= 32) continue;
    std::uint64_t need = static_cast<std::uint64_t>(target) << dist_[v];
    if (work_[v] >= need) return v;
  }
  return std::nullopt;
}

bool Solver::search(Count target) {
  VertexId root = graph_->root();
  if (work_[root] >= target) return true;
  if (shortcut_unsolvable(target)) return false;
  if (shortcut_solvable(target)) return true;

  std::uint64_t key;
  if (group_) {
    group_->canonicalize(work_, canon_);
    key = rank_of(canon_);
  } else {
    key = rank_of(work_);
  }
  auto& table = memo_->tables[target];
  if (auto it = table.find(key); it != table.end()) {
    ++totals_.memo_hits;
    return it->second;
  }
  if (++query_nodes_ > options_.max_nodes) {
    throw ResourceLimitError("search exceeded " + std::to_string(options_.max_nodes) + " nodes");
  }
  ++totals_.nodes;

  bool result = false;
  for (const Move& m : moves_) {
    if (work_[m.from] < 2) continue;
    work_[m.from] -= 2;
    work_[m.to] += 1;
    bool ok = search(target);
    work_[m.from] += 2;
    work_[m.to] -= 1;
    if (ok) {
      result = true;
      break;
    }
  }
  // The recursive calls may have rehashed the table; look it up again.
  memo_->tables[target].emplace(key, result);
  return result;
}

std::vector<Move> Solver::reconstruct(Count target) {
  std::vector<Move> moves;
  VertexId root = graph_->root();
  auto apply = [&](VertexId from, VertexId to) {
    work_[from] -= 2;
    work_[to] += 1;
    moves.push_back({from, to});
  };
  while (work_[root] < target) {
    if (auto v = shortcut_solvable(target)) {
      for (VertexId x = *v; x != root; x = toward_root_[x]) {
        while (work_[x] >= 2) apply(x, toward_root_[x]);
      }
      break;
    }
    bool advanced = false;
    for (const Move& m : moves_) {
      if (work_[m.from] < 2) continue;
      work_[m.from] -= 2;
      work_[m.to] += 1;
      bool ok = search(target);
      work_[m.from] += 2;
      work_[m.to] -= 1;
      if (ok) {
        apply(m.from, m.to);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error(ErrorCode::BadParameter, "internal: witness reconstruction lost the solution");
  }
  return moves;
}

SolveOutcome Solver::solve(const Configuration& p, Count target, bool want_witness) {
  if (!same_graph(p.graph(), graph_)) throw Error(ErrorCode::GraphMismatch, "configuration is on another graph");
  if (target == 0) throw Error(ErrorCode::BadParameter, "target must be >= 1");
  SolveStats before = totals_;
  query_nodes_ = 0;
  load(p.counts());
  SolveOutcome out;
  out.solvable = search(target);
  if (out.solvable && want_witness) {
    load(p.counts());
    out.witness = reconstruct(target);
  }
  out.stats.nodes = totals_.nodes - before.nodes;
  out.stats.memo_hits = totals_.memo_hits - before.memo_hits;
  return out;
}

bool Solver::solvable(std::span<const Count> counts, Count target) {
  if (target == 0) throw Error(ErrorCode::BadParameter, "target must be >= 1");
  query_nodes_ = 0;
  load(counts);
  return search(target);
}

SolveOutcome is_solvable(const Configuration& p, Count target, SolverOptions options) {
  Solver solver(p.graph(), options);
  return solver.solve(p, target, true);
}

}  // namespace pebble
