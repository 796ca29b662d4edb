#include "pebble/configuration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "pebble/errors.hpp"

namespace pebble {

Configuration::Configuration(GraphPtr graph) : graph_(std::move(graph)) {
  if (!graph_) throw Error(ErrorCode::BadParameter, "configuration needs a graph");
  counts_.assign(graph_->vertex_count(), 0);
}

Configuration::Configuration(GraphPtr graph, std::vector<Count> counts)
    : graph_(std::move(graph)), counts_(std::move(counts)) {
  if (!graph_) throw Error(ErrorCode::BadParameter, "configuration needs a graph");
  if (counts_.size() != graph_->vertex_count()) {
    throw Error(ErrorCode::GraphMismatch, "configuration has " + std::to_string(counts_.size()) +
                                              " entries for a graph on " + std::to_string(graph_->vertex_count()));
  }
}

Count Configuration::operator[](VertexId v) const {
  graph_->check_vertex(v);
  return counts_[v];
}

std::uint64_t Configuration::size() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

void Configuration::set(VertexId v, Count c) {
  graph_->check_vertex(v);
  counts_[v] = c;
}

std::string Configuration::str() const {
  std::string s;
  for (VertexId v = 0; v < counts_.size(); ++v) {
    if (counts_[v] == 0) continue;
    if (!s.empty()) s += ',';
    s += std::to_string(v) + ":" + std::to_string(counts_[v]);
  }
  return s.empty() ? "-" : s;
}

bool operator==(const Configuration& a, const Configuration& b) {
  return same_graph(a.graph_, b.graph_) && a.counts_ == b.counts_;
}

Configuration apply_move(const Configuration& p, VertexId from, VertexId to) {
  const Graph& g = *p.graph();
  if (!g.adjacent(from, to)) {
    throw Error(ErrorCode::NotAdjacent, std::to_string(from) + " and " + std::to_string(to) + " are not adjacent");
  }
  if (p[from] < 2) {
    throw Error(ErrorCode::InsufficientPebbles, "vertex " + std::to_string(from) + " holds " +
                                                    std::to_string(p[from]) + " pebble(s)");
  }
  Configuration q = p;
  q.set(from, p[from] - 2);
  q.set(to, p[to] + 1);
  return q;
}

Configuration uniform_configuration(const GraphPtr& g) {
  return Configuration(g, std::vector<Count>(g->vertex_count(), 1));
}

SymmetryGroup::SymmetryGroup(const Graph& g, std::size_t cap) {
  const auto& gens = g.symmetry();
  std::size_t n = g.vertex_count();
  if (gens.empty()) return;

  bool all_transpositions = std::all_of(gens.begin(), gens.end(), [&](const Permutation& p) {
    std::size_t moved = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (p[v] != v) {
        ++moved;
        if (p[p[v]] != v) return false;
      }
    }
    return moved == 2;
  });

  if (all_transpositions) {
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0U);
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const Permutation& p : gens) {
      VertexId a = n;
      VertexId b = n;
      for (VertexId v = 0; v < n; ++v) {
        if (p[v] != v) (a == n ? a : b) = v;
      }
      parent[find(a)] = find(b);
    }
    std::vector<std::vector<VertexId>> by_root(n);
    for (VertexId v = 0; v < n; ++v) by_root[find(v)].push_back(v);
    for (auto& b : by_root) {
      if (b.size() >= 2) blocks_.push_back(std::move(b));
    }
    std::sort(blocks_.begin(), blocks_.end());
    mode_ = Mode::SortBlocks;
    return;
  }

  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0U);
  std::set<Permutation> seen{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& h : frontier) {
      for (const Permutation& s : gens) {
        Permutation composed(n);
        for (VertexId v = 0; v < n; ++v) composed[v] = s[h[v]];
        if (seen.insert(composed).second) {
          if (seen.size() > cap) {
            mode_ = Mode::Ignored;
            return;
          }
          next.push_back(std::move(composed));
        }
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
  mode_ = Mode::Enumerated;
}

void SymmetryGroup::canonicalize(std::span<const Count> counts, std::span<Count> out) const {
  std::copy(counts.begin(), counts.end(), out.begin());
  if (mode_ == Mode::SortBlocks) {
    std::vector<Count> vals;
    for (const auto& block : blocks_) {
      vals.clear();
      for (VertexId v : block) vals.push_back(counts[v]);
      std::sort(vals.begin(), vals.end(), std::greater<>());
      for (std::size_t i = 0; i < block.size(); ++i) out[block[i]] = vals[i];
    }
  } else if (mode_ == Mode::Enumerated) {
    std::vector<Count> image(counts.size());
    for (const Permutation& p : elements_) {
      for (VertexId v = 0; v < counts.size(); ++v) image[p[v]] = counts[v];
      if (std::lexicographical_compare(out.begin(), out.end(), image.begin(), image.end())) {
        std::copy(image.begin(), image.end(), out.begin());
      }
    }
  }
}

bool SymmetryGroup::is_canonical(std::span<const Count> counts) const {
  if (mode_ == Mode::SortBlocks) {
    for (const auto& block : blocks_) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        if (counts[block[i - 1]] < counts[block[i]]) return false;
      }
    }
    return true;
  }
  if (mode_ != Mode::Enumerated) return true;
  std::vector<Count> canon(counts.size());
  canonicalize(counts, canon);
  return std::equal(canon.begin(), canon.end(), counts.begin());
}

Configuration canonical_form(const Configuration& p, std::size_t cap) {
  return canonical_form(p, SymmetryGroup(*p.graph(), cap));
}

Configuration canonical_form(const Configuration& p, const SymmetryGroup& group) {
  std::vector<Count> out(p.counts().size());
  group.canonicalize(p.counts(), out);
  return Configuration(p.graph(), std::move(out));
}

ConfigurationStream::ConfigurationStream(GraphPtr g, Count size, EnumerationOptions options)
    : graph_(std::move(g)), size_(size), options_(options) {
  for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
    if (!(options_.exclude_root && v == graph_->root())) free_.push_back(v);
  }
  if (options_.use_symmetry) {
    group_.emplace(*graph_, options_.symmetry_cap);
    if (!group_->reduces()) group_.reset();
  }
  scratch_.assign(graph_->vertex_count(), 0);
  canonical_.assign(graph_->vertex_count(), 0);
  current_.assign(free_.size(), 0);
}

bool ConfigurationStream::advance() {
  std::size_t k = current_.size();
  if (!started_) {
    started_ = true;
    if (k == 0) return size_ == 0;
    Count hi = size_;
    Count lo = 0;
    if (options_.first_count_range) {
      lo = options_.first_count_range->first;
      hi = std::min(options_.first_count_range->second, size_);
      if (lo > hi) return false;
    }
    if (k == 1) {
      current_[0] = size_;
      return size_ >= lo && size_ <= hi;
    }
    current_[0] = hi;
    current_[1] = size_ - hi;
    return true;
  }
  if (k <= 1) return false;
  // Rightmost non-last position holding pebbles gives up one; everything to
  // its right collapses onto the next position.
  std::size_t i = k - 1;
  while (i > 0 && current_[i - 1] == 0) --i;
  if (i == 0) return false;
  --i;
  Count tail = 1;
  for (std::size_t j = i + 1; j < k; ++j) {
    tail += current_[j];
    current_[j] = 0;
  }
  --current_[i];
  current_[i + 1] = tail;
  if (i == 0 && options_.first_count_range && current_[0] < options_.first_count_range->first) return false;
  return true;
}

bool ConfigurationStream::accept() {
  if (!group_) return true;
  std::fill(scratch_.begin(), scratch_.end(), 0);
  for (std::size_t i = 0; i < free_.size(); ++i) scratch_[free_[i]] = current_[i];
  return group_->is_canonical(scratch_);
}

std::optional<Configuration> ConfigurationStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (!accept()) continue;
    std::vector<Count> counts(graph_->vertex_count(), 0);
    for (std::size_t i = 0; i < free_.size(); ++i) counts[free_[i]] = current_[i];
    return Configuration(graph_, std::move(counts));
  }
  return std::nullopt;
}

ConfigurationStream enumerate_configurations(GraphPtr g, Count size, EnumerationOptions options) {
  return ConfigurationStream(std::move(g), size, options);
}

}  // namespace pebble
