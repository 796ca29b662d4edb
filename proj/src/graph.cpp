#include "pebble/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kAllPairsLimit = 2048;

std::string tuple_label(std::uint32_t mask, std::uint32_t dims) {
  std::string s = "(";
  for (std::uint32_t i = 0; i < dims; ++i) {
    if (i) s += ',';
    s += ((mask >> (dims - 1 - i)) & 1U) ? '1' : '0';
  }
  return s + ")";
}

// Vertex permutation of Q_dims induced by swapping coordinates a and b.
std::uint32_t swap_bits(std::uint32_t mask, std::uint32_t dims, std::uint32_t a, std::uint32_t b) {
  std::uint32_t ba = dims - 1 - a;
  std::uint32_t bb = dims - 1 - b;
  std::uint32_t xa = (mask >> ba) & 1U;
  std::uint32_t xb = (mask >> bb) & 1U;
  if (xa != xb) mask ^= (1U << ba) | (1U << bb);
  return mask;
}

Graph make_hypercube(std::uint32_t dims) {
  std::size_t n = std::size_t{1} << dims;
  std::vector<Edge> edges;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t b = 0; b < dims; ++b) {
      std::uint32_t w = v ^ (1U << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  std::vector<std::string> labels;
  for (std::uint32_t v = 0; v < n; ++v) labels.push_back(tuple_label(v, dims));
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i + 1 < dims; ++i) {
    Permutation p(n);
    for (std::uint32_t v = 0; v < n; ++v) p[v] = swap_bits(v, dims, i, i + 1);
    gens.push_back(std::move(p));
  }
  return Graph(n, std::move(edges), 0)
      .with_labels(std::move(labels))
      .with_symmetry(std::move(gens))
      .with_family("hypercube(" + std::to_string(dims) + ")", true);
}

// Root is id 0, cube vertex `mask` is id 1 + mask.
Graph make_rooted_cube(std::uint32_t n) {
  std::uint32_t dims = n - 1;
  std::size_t cube = std::size_t{1} << dims;
  std::vector<Edge> edges{{0, 1}};
  for (std::uint32_t v = 0; v < cube; ++v) {
    for (std::uint32_t b = 0; b < dims; ++b) {
      std::uint32_t w = v ^ (1U << b);
      if (v < w) edges.emplace_back(1 + v, 1 + w);
    }
  }
  std::vector<std::string> labels{"r"};
  for (std::uint32_t v = 0; v < cube; ++v) labels.push_back(tuple_label(v, dims));
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i + 1 < dims; ++i) {
    Permutation p(cube + 1);
    p[0] = 0;
    for (std::uint32_t v = 0; v < cube; ++v) p[1 + v] = 1 + swap_bits(v, dims, i, i + 1);
    gens.push_back(std::move(p));
  }
  return Graph(cube + 1, std::move(edges), 0)
      .with_labels(std::move(labels))
      .with_symmetry(std::move(gens))
      .with_family("rooted_cube(" + std::to_string(n) + ")");
}

Graph make_path(std::uint32_t vertices) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i + 1 < vertices; ++i) labels.push_back("v_" + std::to_string(i));
  labels.push_back("r");
  return Graph(vertices, std::move(edges), vertices - 1)
      .with_labels(std::move(labels))
      .with_family("path(" + std::to_string(vertices) + ")");
}

Graph make_cycle(std::uint32_t length) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
  std::vector<std::string> labels{"r"};
  for (std::uint32_t i = 1; i < length; ++i) labels.push_back("c_" + std::to_string(i));
  Permutation reflection(length);
  for (std::uint32_t i = 0; i < length; ++i) reflection[i] = (length - i) % length;
  return Graph(length, std::move(edges), 0)
      .with_labels(std::move(labels))
      .with_symmetry({reflection})
      .with_family("cycle(" + std::to_string(length) + ")", true);
}

// r = 0, v_j = n + 1 - j, u_0 = n + 1, u_i = n + 1 + i.
Graph make_lollipop(std::uint32_t n, std::uint32_t arms) {
  std::uint32_t total = n + 2 + arms;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
  VertexId v1 = n;
  VertexId u0 = n + 1;
  for (std::uint32_t i = 1; i <= arms; ++i) {
    edges.emplace_back(v1, u0 + i);
    edges.emplace_back(u0 + i, u0);
  }
  std::vector<std::string> labels{"r"};
  for (std::uint32_t j = n; j >= 1; --j) labels.push_back("v_" + std::to_string(j));
  for (std::uint32_t i = 0; i <= arms; ++i) labels.push_back("u_" + std::to_string(i));
  std::vector<Permutation> gens;
  for (std::uint32_t i = 1; i < arms; ++i) {
    Permutation p(total);
    std::iota(p.begin(), p.end(), 0U);
    std::swap(p[u0 + i], p[u0 + i + 1]);
    gens.push_back(std::move(p));
  }
  return Graph(total, std::move(edges), 0)
      .with_labels(std::move(labels))
      .with_symmetry(std::move(gens))
      .with_family("lollipop(" + std::to_string(n) + "," + std::to_string(arms) + ")");
}

Graph make_named(const std::string& name) {
  if (name == "fig2") {
    return make_rooted_cube(3).with_family("fig2");
  }
  if (name == "lemma5") {
    Graph g = make_rooted_cube(4);
    // x_i has only coordinate i set, y_i has every coordinate but i, z is all ones.
    std::vector<std::string> labels(9);
    labels[0] = "r";
    labels[1] = "u";
    for (std::uint32_t i = 1; i <= 3; ++i) {
      std::uint32_t bit = 1U << (3 - i);
      labels[1 + bit] = "x_" + std::to_string(i);
      labels[1 + (7U ^ bit)] = "y_" + std::to_string(i);
    }
    labels[8] = "z";
    return g.with_labels(std::move(labels)).with_family("lemma5");
  }
  throw Error(ErrorCode::UnknownFamily, "unknown named graph '" + name + "'");
}

}  // namespace

Embedding Embedding::identity(std::size_t n) {
  Embedding e;
  e.image.resize(n);
  std::iota(e.image.begin(), e.image.end(), 0U);
  return e;
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, VertexId root)
    : n_(vertex_count), root_(root), edges_(std::move(edges)) {
  if (n_ == 0) throw Error(ErrorCode::BadParameter, "graph needs at least one vertex");
  if (root_ >= n_) {
    throw Error(ErrorCode::RootOutOfRange, "root " + std::to_string(root_) + " >= " + std::to_string(n_));
  }
  for (const Edge& e : edges_) {
    if (e.v >= n_) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") listed twice");
  }

  std::vector<std::size_t> degree(n_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }

  root_dist_ = bfs(root_);
  if (std::find(root_dist_.begin(), root_dist_.end(), kUnreached) != root_dist_.end()) {
    throw Error(ErrorCode::Disconnected, "graph on " + std::to_string(n_) + " vertices is not connected");
  }
  if (n_ <= kAllPairsLimit) {
    all_dist_.resize(n_ * n_);
    for (VertexId s = 0; s < n_; ++s) {
      auto d = bfs(s);
      std::copy(d.begin(), d.end(), all_dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
    diameter_ = *std::max_element(all_dist_.begin(), all_dist_.end());
  } else {
    for (VertexId s = 0; s < n_; ++s) diameter_ = std::max(diameter_, eccentricity(s));
  }
}

std::vector<std::uint32_t> Graph::bfs(VertexId source) const {
  std::vector<std::uint32_t> dist(n_, kUnreached);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  auto nb = neighbors(a);
  check_vertex(b);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::uint32_t Graph::distance(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  if (!all_dist_.empty()) return all_dist_[a * n_ + b];
  if (b == root_) return root_dist_[a];
  return bfs(a)[b];
}

std::uint32_t Graph::eccentricity(VertexId v) const {
  check_vertex(v);
  if (v == root_) return *std::max_element(root_dist_.begin(), root_dist_.end());
  if (!all_dist_.empty()) {
    auto row = all_dist_.begin() + static_cast<std::ptrdiff_t>(v * n_);
    return *std::max_element(row, row + static_cast<std::ptrdiff_t>(n_));
  }
  auto d = bfs(v);
  return *std::max_element(d.begin(), d.end());
}

std::string Graph::label(VertexId v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) {
    throw Error(ErrorCode::BadParameter, "label count does not match vertex count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::with_symmetry(std::vector<Permutation> generators) const {
  for (const Permutation& p : generators) {
    if (p.size() != n_) throw Error(ErrorCode::BadSymmetry, "permutation has wrong length");
    std::vector<bool> seen(n_, false);
    for (VertexId img : p) {
      if (img >= n_ || seen[img]) throw Error(ErrorCode::BadSymmetry, "not a permutation");
      seen[img] = true;
    }
    if (p[root_] != root_) throw Error(ErrorCode::BadSymmetry, "permutation moves the root");
    for (const Edge& e : edges_) {
      if (!adjacent(p[e.u], p[e.v])) {
        throw Error(ErrorCode::BadSymmetry, "permutation does not preserve edge (" + std::to_string(e.u) +
                                                "," + std::to_string(e.v) + ")");
      }
    }
  }
  Graph g = *this;
  g.symmetry_ = std::move(generators);
  return g;
}

Graph Graph::with_family(std::string family, bool vertex_transitive) const {
  Graph g = *this;
  g.family_ = std::move(family);
  g.vertex_transitive_ = vertex_transitive;
  return g;
}

Graph Graph::with_root(VertexId root) const {
  if (root >= n_) throw Error(ErrorCode::RootOutOfRange, "root " + std::to_string(root) + " out of range");
  Graph g(n_, edges_, root);
  g.labels_ = labels_;
  g.family_ = family_;
  g.vertex_transitive_ = vertex_transitive_;
  for (const Permutation& p : symmetry_) {
    if (p[root] == root) g.symmetry_.push_back(p);
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " >= " + std::to_string(n_));
  }
}

bool Graph::same_structure(const Graph& other) const {
  return n_ == other.n_ && root_ == other.root_ && edges_ == other.edges_;
}

bool same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges, VertexId root) {
  return Graph(vertex_count, std::vector<Edge>(edges.begin(), edges.end()), root);
}

std::uint32_t distance(const Graph& g, VertexId u, VertexId v) { return g.distance(u, v); }
std::uint32_t diameter(const Graph& g) { return g.diameter(); }

FamilySpec FamilySpec::path(std::uint32_t vertices) { return {Kind::Path, vertices, 0, {}}; }
FamilySpec FamilySpec::cycle(std::uint32_t length) { return {Kind::Cycle, length, 0, {}}; }
FamilySpec FamilySpec::hypercube(std::uint32_t n) { return {Kind::Hypercube, n, 0, {}}; }
FamilySpec FamilySpec::rooted_cube(std::uint32_t n) { return {Kind::RootedCube, n, 0, {}}; }
FamilySpec FamilySpec::lollipop(std::uint32_t n, std::uint32_t arms) { return {Kind::Lollipop, n, arms, {}}; }
FamilySpec FamilySpec::named(std::string name) { return {Kind::Named, 0, 0, std::move(name)}; }

FamilySpec FamilySpec::parse(std::string_view family, std::span<const std::uint32_t> params) {
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw Error(ErrorCode::BadParameter, "family '" + std::string(family) + "' takes " + std::to_string(lo) +
                                               (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s)");
    }
  };
  if (family == "path") { want(1, 1); return path(params[0]); }
  if (family == "cycle") { want(1, 1); return cycle(params[0]); }
  if (family == "hypercube") { want(1, 1); return hypercube(params[0]); }
  if (family == "rooted_cube" || family == "rooted-cube") { want(1, 1); return rooted_cube(params[0]); }
  if (family == "lollipop") { want(1, 2); return lollipop(params[0], params.size() > 1 ? params[1] : 0); }
  if (family == "fig2" || family == "lemma5") { want(0, 0); return named(std::string(family)); }
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(family) + "'");
}

std::string FamilySpec::describe() const {
  switch (kind) {
    case Kind::Path: return "path(" + std::to_string(n) + ")";
    case Kind::Cycle: return "cycle(" + std::to_string(n) + ")";
    case Kind::Hypercube: return "hypercube(" + std::to_string(n) + ")";
    case Kind::RootedCube: return "rooted_cube(" + std::to_string(n) + ")";
    case Kind::Lollipop: return "lollipop(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Kind::Named: return name;
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  auto bad = [&](const std::string& why) { throw Error(ErrorCode::BadParameter, spec.describe() + ": " + why); };
  switch (spec.kind) {
    case FamilySpec::Kind::Path:
      if (spec.n < 1) bad("needs at least one vertex");
      return make_path(spec.n);
    case FamilySpec::Kind::Cycle:
      if (spec.n < 3) bad("cycle length must be >= 3");
      return make_cycle(spec.n);
    case FamilySpec::Kind::Hypercube:
      if (spec.n < 1 || spec.n > 16) bad("dimension must be in [1, 16]");
      return make_hypercube(spec.n);
    case FamilySpec::Kind::RootedCube:
      if (spec.n < 2 || spec.n > 17) bad("n must be in [2, 17]");
      return make_rooted_cube(spec.n);
    case FamilySpec::Kind::Lollipop: {
      if (spec.n < 1 || spec.n > 20) bad("path length must be in [1, 20]");
      std::uint32_t arms = spec.m == 0 ? (1U << (spec.n + 1)) : spec.m;
      return make_lollipop(spec.n, arms);
    }
    case FamilySpec::Kind::Named:
      return make_named(spec.name);
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family kind");
}

VertexId hypercube_vertex(std::span<const int> coords) {
  VertexId id = 0;
  for (int c : coords) id = (id << 1) | (c ? 1U : 0U);
  return id;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices, VertexId root) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  for (VertexId v : keep) g.check_vertex(v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  auto root_it = std::lower_bound(keep.begin(), keep.end(), root);
  if (root_it == keep.end() || *root_it != root) {
    throw Error(ErrorCode::RootNotIncluded, "root " + std::to_string(root) + " not in vertex set");
  }
  std::vector<VertexId> index(g.vertex_count(), std::numeric_limits<VertexId>::max());
  for (VertexId i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] != std::numeric_limits<VertexId>::max() && index[e.v] != std::numeric_limits<VertexId>::max()) {
      edges.emplace_back(index[e.u], index[e.v]);
    }
  }
  Graph sub(keep.size(), std::move(edges), index[root]);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (VertexId v : keep) labels.push_back(g.label(v));
    sub = sub.with_labels(std::move(labels));
  }
  return {sub.with_family("induced"), Embedding{std::move(keep)}};
}

void check_embedding(const Graph& sub, const Graph& ambient, const Embedding& e, bool induced) {
  if (e.image.size() != sub.vertex_count()) {
    throw Error(ErrorCode::BadEmbedding, "embedding size " + std::to_string(e.image.size()) +
                                             " != subgraph vertex count " + std::to_string(sub.vertex_count()));
  }
  std::vector<bool> used(ambient.vertex_count(), false);
  for (VertexId img : e.image) {
    if (img >= ambient.vertex_count()) throw Error(ErrorCode::BadEmbedding, "image out of range");
    if (used[img]) throw Error(ErrorCode::BadEmbedding, "embedding is not injective at " + std::to_string(img));
    used[img] = true;
  }
  if (e.image[sub.root()] != ambient.root()) throw Error(ErrorCode::BadEmbedding, "root is not mapped to root");
  for (const Edge& edge : sub.edges()) {
    if (!ambient.adjacent(e.image[edge.u], e.image[edge.v])) {
      throw Error(ErrorCode::BadEmbedding,
                  "edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ") maps to a non-edge");
    }
  }
  if (induced) {
    std::size_t inside = 0;
    for (const Edge& edge : ambient.edges()) {
      if (used[edge.u] && used[edge.v]) ++inside;
    }
    if (inside != sub.edge_count()) throw Error(ErrorCode::BadEmbedding, "image is not an induced subgraph");
  }
}

}  // namespace pebble
