#include "pebble/pebbling_number.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

// Vertex order for the down-set walks. block_prev[i] is the order position of
// the previous member of i's interchangeable block, or -1; walks keep counts
// non-increasing along it so only one representative per orbit is visited.
struct Layout {
  std::vector<VertexId> order;
  std::vector<int> block_prev;
  bool reduced = false;
};

Layout make_layout(const Graph& g, const SearchOptions& options, const WeightFunction* w) {
  Layout layout;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != g.root()) layout.order.push_back(v);
  }
  layout.block_prev.assign(layout.order.size(), -1);
  if (!options.use_symmetry) return layout;
  SymmetryGroup group(g, options.symmetry_cap);
  if (group.mode() != SymmetryGroup::Mode::SortBlocks) return layout;
  if (w) {
    for (const Permutation& p : g.symmetry()) {
      if (!w->invariant_under(p)) return layout;
    }
  }
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < layout.order.size(); ++i) position[layout.order[i]] = static_cast<int>(i);
  for (const auto& block : group.blocks()) {
    for (std::size_t j = 1; j < block.size(); ++j) layout.block_prev[position[block[j]]] = position[block[j - 1]];
  }
  layout.reduced = true;
  return layout;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kUnbounded - b ? kUnbounded : a + b; }

// One worker's view of a down-set walk: private solver, private scratch.
class Walker {
 public:
  Walker(const GraphPtr& g, const Layout& layout, const SearchOptions& options)
      : solver_(g, options.solver_options()), layout_(layout), counts_(g->vertex_count(), 0),
        caps_(layout.order.size(), 0) {}

  Solver& solver() { return solver_; }

  // Searches configurations of exactly `size` pebbles whose first free vertex
  // holds c0. Sets prefix_solvable when c0 alone is already solvable, which
  // rules out this chunk and every later one.
  std::optional<std::vector<Count>> exact_chunk(Count size, Count c0, bool& prefix_solvable) {
    std::fill(counts_.begin(), counts_.end(), 0);
    prefix_solvable = false;
    const auto& order = layout_.order;
    counts_[order[0]] = c0;
    if (c0 > 0 && solver_.solvable(counts_)) {
      prefix_solvable = true;
      return std::nullopt;
    }
    if (exact(1, size - c0)) return found_;
    return std::nullopt;
  }

  struct Best {
    __int128 weight = -1;
    std::vector<Count> counts;
  };

  Best max_chunk(Count bound, Count c0, const std::vector<std::int64_t>& weights, bool& prefix_solvable) {
    std::fill(counts_.begin(), counts_.end(), 0);
    prefix_solvable = false;
    weights_ = &weights;
    suffix_max_.assign(layout_.order.size() + 1, 0);
    for (std::size_t i = layout_.order.size(); i-- > 0;) {
      suffix_max_[i] = std::max<std::int64_t>(suffix_max_[i + 1], weights[layout_.order[i]]);
    }
    best_ = Best{};
    VertexId v0 = layout_.order[0];
    counts_[v0] = c0;
    if (c0 > 0 && solver_.solvable(counts_)) {
      prefix_solvable = true;
      return best_;
    }
    __int128 w0 = static_cast<__int128>(c0) * weights[v0];
    best_.weight = w0;
    best_.counts = counts_;
    maximize(1, bound - c0, w0);
    return best_;
  }

 private:
  Solver solver_;
  const Layout& layout_;
  std::vector<Count> counts_;
  std::vector<std::uint64_t> caps_;
  std::vector<Count> found_;
  const std::vector<std::int64_t>* weights_ = nullptr;
  std::vector<std::int64_t> suffix_max_;
  Best best_;

  std::uint64_t position_limit(std::size_t i) const {
    int p = layout_.block_prev[i];
    return p < 0 ? kUnbounded : counts_[layout_.order[static_cast<std::size_t>(p)]];
  }

  // Most pebbles positions i.. can still take under the block ordering.
  std::uint64_t suffix_capacity(std::size_t i) {
    std::uint64_t total = 0;
    for (std::size_t j = i; j < layout_.order.size(); ++j) {
      int p = layout_.block_prev[j];
      std::uint64_t c;
      if (p < 0) {
        c = kUnbounded;
      } else if (static_cast<std::size_t>(p) < i) {
        c = counts_[layout_.order[static_cast<std::size_t>(p)]];
      } else {
        c = caps_[static_cast<std::size_t>(p)];
      }
      caps_[j] = c;
      total = saturating_add(total, c);
    }
    return total;
  }

  bool exact(std::size_t i, Count remaining) {
    if (remaining == 0) {
      found_ = counts_;
      return true;
    }
    const auto& order = layout_.order;
    if (i == order.size()) return false;
    if (suffix_capacity(i) < remaining) return false;
    VertexId v = order[i];
    Count limit = static_cast<Count>(std::min<std::uint64_t>(remaining, position_limit(i)));
    if (i + 1 == order.size()) {
      if (remaining > limit) return false;
      counts_[v] = remaining;
      bool hit = !solver_.solvable(counts_);
      if (hit) found_ = counts_;
      counts_[v] = 0;
      return hit;
    }
    for (Count c = 0; c <= limit; ++c) {
      if (c > 0) {
        counts_[v] = c;
        if (solver_.solvable(counts_)) break;
      }
      if (exact(i + 1, remaining - c)) {
        counts_[v] = 0;
        return true;
      }
    }
    counts_[v] = 0;
    return false;
  }

  void maximize(std::size_t i, Count remaining, __int128 weight) {
    const auto& order = layout_.order;
    if (i == order.size() || remaining == 0) return;
    if (weight + static_cast<__int128>(remaining) * suffix_max_[i] <= best_.weight) return;
    VertexId v = order[i];
    std::int64_t wv = (*weights_)[v];
    Count limit = static_cast<Count>(std::min<std::uint64_t>(remaining, position_limit(i)));
    for (Count c = 0; c <= limit; ++c) {
      __int128 wc = weight + static_cast<__int128>(c) * wv;
      if (c > 0) {
        counts_[v] = c;
        if (solver_.solvable(counts_)) break;
        if (wc > best_.weight) {
          best_.weight = wc;
          best_.counts = counts_;
        }
      }
      maximize(i + 1, remaining - c, wc);
    }
    counts_[v] = 0;
  }
};

// Runs chunk indices 0..last across worker threads. `body(walker, chunk)`
// returns false to stop handing out chunks at or beyond `chunk`.
template <typename Body>
std::uint64_t run_chunks(const GraphPtr& g, const Layout& layout, const SearchOptions& options, Count last,
                         std::atomic<std::uint64_t>& stop_at, Body body) {
  unsigned threads = std::max(1U, options.threads);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      Walker walker(g, layout, options);
      while (true) {
        std::uint64_t chunk = next.fetch_add(1);
        if (chunk > last || chunk >= stop_at.load()) break;
        body(walker, static_cast<Count>(chunk));
      }
      nodes += walker.solver().totals().nodes;
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      stop_at.store(0);
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return nodes.load();
}

void lower_to(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

std::optional<Configuration> find_unsolvable_streamed(const GraphPtr& g, Count size, const SearchOptions& options,
                                                      Exhaustiveness* record) {
  Solver solver(g, options.solver_options());
  EnumerationOptions eo;
  eo.exclude_root = true;
  eo.use_symmetry = options.use_symmetry;
  eo.symmetry_cap = options.symmetry_cap;
  ConfigurationStream stream(g, size, eo);
  std::optional<Configuration> hit;
  while (auto p = stream.next()) {
    if (!solver.solvable(p->counts())) {
      hit = std::move(p);
      break;
    }
  }
  if (record) record->solver_nodes += solver.totals().nodes;
  return hit;
}

}  // namespace

std::optional<Configuration> find_unsolvable(const GraphPtr& g, Count size, const SearchOptions& options,
                                             Exhaustiveness* record) {
  if (!options.monotone_pruning) return find_unsolvable_streamed(g, size, options, record);
  Layout layout = make_layout(*g, options, nullptr);
  if (layout.order.empty()) {
    if (size == 0) return Configuration(g);
    return std::nullopt;
  }
  std::vector<std::optional<std::vector<Count>>> results(static_cast<std::size_t>(size) + 1);
  std::atomic<std::uint64_t> stop_at{static_cast<std::uint64_t>(size) + 1};
  std::uint64_t nodes = run_chunks(g, layout, options, size, stop_at, [&](Walker& walker, Count c0) {
    bool prefix_solvable = false;
    auto hit = walker.exact_chunk(size, c0, prefix_solvable);
    if (prefix_solvable) {
      lower_to(stop_at, c0);
    } else if (hit) {
      results[c0] = std::move(hit);
      lower_to(stop_at, static_cast<std::uint64_t>(c0) + 1);
    }
  });
  if (record) record->solver_nodes += nodes;
  for (auto& r : results) {
    if (r) return Configuration(g, std::move(*r));
  }
  return std::nullopt;
}

PiResult pi_rooted(const GraphPtr& g, const SearchOptions& options) {
  std::uint32_t ecc = g->eccentricity(g->root());
  if (ecc >= 31) throw ResourceLimitError("root eccentricity " + std::to_string(ecc) + " is out of reach");
  Exhaustiveness record;
  record.start_size = Count{1} << ecc;
  record.monotone_pruning = options.monotone_pruning;
  record.symmetry_used = options.use_symmetry && SymmetryGroup(*g, options.symmetry_cap).reduces();

  std::optional<Configuration> last;
  Count size = record.start_size;
  while (true) {
    auto hit = find_unsolvable(g, size, options, &record);
    record.sizes_scanned.push_back(size);
    if (!hit) break;
    last = std::move(hit);
    ++size;
  }
  if (!last) {
    Configuration far(g);
    auto dist = g->root_distances();
    VertexId v = static_cast<VertexId>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    if (record.start_size > 1) far.set(v, record.start_size - 1);
    last = std::move(far);
  }
  Solver check(g, options.solver_options());
  if (check.solvable(last->counts())) {
    throw Error(ErrorCode::BadParameter, "internal: pebbling-number witness turned out solvable");
  }
  return PiResult{size, std::move(*last), std::move(record)};
}

Count pi_global(const GraphPtr& g, const SearchOptions& options) {
  if (g->vertex_transitive()) return pi_rooted(g, options).value;
  std::vector<bool> covered(g->vertex_count(), false);
  std::vector<std::vector<VertexId>> orbits(g->vertex_count());
  SymmetryGroup group(*g, options.symmetry_cap);
  if (options.use_symmetry && group.mode() == SymmetryGroup::Mode::SortBlocks) {
    for (const auto& block : group.blocks()) orbits[block.front()] = block;
  } else if (options.use_symmetry && group.mode() == SymmetryGroup::Mode::Enumerated) {
    for (VertexId v = 0; v < g->vertex_count(); ++v) {
      std::set<VertexId> orbit;
      for (const Permutation& p : group.elements()) orbit.insert(p[v]);
      orbits[v].assign(orbit.begin(), orbit.end());
    }
  }
  Count best = 0;
  for (VertexId r = 0; r < g->vertex_count(); ++r) {
    if (covered[r]) continue;
    covered[r] = true;
    for (VertexId u : orbits[r]) covered[u] = true;
    auto rerooted = share(g->with_root(r));
    best = std::max(best, pi_rooted(rerooted, options).value);
  }
  return best;
}

bool is_class0(const GraphPtr& g, const SearchOptions& options) {
  return pi_global(g, options) == g->vertex_count();
}

MaxUnsolvable max_unsolvable_weight(const WeightFunction& w, Count size_bound, const SearchOptions& options) {
  const GraphPtr& g = w.graph();
  auto form = w.integer_form();
  const auto& weights = form.numerators;
  auto to_rational = [&](__int128 scaled) {
    BigInt big = static_cast<std::int64_t>(scaled >> 64);
    big <<= 64;
    big += static_cast<std::uint64_t>(scaled);
    return Rational(big, form.denominator);
  };

  if (!options.monotone_pruning) {
    Solver solver(g, options.solver_options());
    bool symmetric = std::all_of(g->symmetry().begin(), g->symmetry().end(),
                                 [&](const Permutation& p) { return w.invariant_under(p); });
    __int128 best = -1;
    std::vector<Count> best_counts(g->vertex_count(), 0);
    for (Count s = 0; s <= size_bound; ++s) {
      EnumerationOptions eo;
      eo.exclude_root = true;
      eo.use_symmetry = options.use_symmetry && symmetric;
      eo.symmetry_cap = options.symmetry_cap;
      ConfigurationStream stream(g, s, eo);
      while (auto p = stream.next()) {
        __int128 value = 0;
        for (VertexId v = 0; v < g->vertex_count(); ++v) value += static_cast<__int128>(p->counts()[v]) * weights[v];
        if (value > best && !solver.solvable(p->counts())) {
          best = value;
          best_counts.assign(p->counts().begin(), p->counts().end());
        }
      }
    }
    return {to_rational(best), Configuration(g, std::move(best_counts))};
  }

  Layout layout = make_layout(*g, options, &w);
  if (layout.order.empty()) return {Rational(0), Configuration(g)};
  std::vector<std::optional<Walker::Best>> results(static_cast<std::size_t>(size_bound) + 1);
  std::atomic<std::uint64_t> stop_at{static_cast<std::uint64_t>(size_bound) + 1};
  run_chunks(g, layout, options, size_bound, stop_at, [&](Walker& walker, Count c0) {
    bool prefix_solvable = false;
    auto best = walker.max_chunk(size_bound, c0, weights, prefix_solvable);
    if (prefix_solvable) {
      lower_to(stop_at, c0);
    } else {
      results[c0] = std::move(best);
    }
  });
  const Walker::Best* winner = nullptr;
  for (const auto& r : results) {
    if (r && (!winner || r->weight > winner->weight)) winner = &*r;
  }
  if (!winner) throw Error(ErrorCode::BadParameter, "internal: no unsolvable configuration found");
  return {to_rational(winner->weight), Configuration(g, winner->counts)};
}

}  // namespace pebble
