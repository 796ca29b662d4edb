#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pebble {

/// Dense 0-based vertex index into the owning graph.
using VertexId = std::uint32_t;

/// Unordered edge, normalized so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// perm[v] is the image of v.
using Permutation = std::vector<VertexId>;

/// Map from the vertices of a smaller graph into a larger one: image[sub] = ambient.
struct Embedding {
  std::vector<VertexId> image;

  static Embedding identity(std::size_t n);
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Connected, simple, undirected graph with a distinguished root.
///
/// Immutable after construction; share it through GraphPtr. Optional
/// metadata: per-vertex labels, a family descriptor, and a list of
/// root-fixing automorphisms used for symmetry reduction. Every stored
/// permutation is checked to map edges onto edges and fix the root.
class Graph {
 public:
  /// Validating constructor. Throws SelfLoop, DuplicateEdge, Disconnected,
  /// RootOutOfRange or VertexOutOfRange.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, VertexId root);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexId root() const { return root_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;

  std::uint32_t distance(VertexId a, VertexId b) const;
  /// d(v, root) for every v.
  std::span<const std::uint32_t> root_distances() const { return root_dist_; }
  std::uint32_t eccentricity(VertexId v) const;
  std::uint32_t diameter() const { return diameter_; }

  bool has_labels() const { return !labels_.empty(); }
  /// Label text, or the decimal id when the graph carries no labels.
  std::string label(VertexId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<Permutation>& symmetry() const { return symmetry_; }
  const std::string& family() const { return family_; }
  /// Set by generators whose graphs are vertex-transitive (cycles, hypercubes).
  bool vertex_transitive() const { return vertex_transitive_; }

  Graph with_labels(std::vector<std::string> labels) const;
  /// Throws BadSymmetry if some permutation is not a root-fixing automorphism.
  Graph with_symmetry(std::vector<Permutation> generators) const;
  Graph with_family(std::string family, bool vertex_transitive = false) const;
  /// Same structure, new root. Keeps only the generators that fix it.
  Graph with_root(VertexId root) const;

  void check_vertex(VertexId v) const;

  /// Structural equality: vertex count, root and edge set.
  bool same_structure(const Graph& other) const;

 private:
  std::size_t n_;
  VertexId root_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<std::uint32_t> root_dist_;
  std::vector<std::uint32_t> all_dist_;
  std::uint32_t diameter_ = 0;
  std::vector<std::string> labels_;
  std::vector<Permutation> symmetry_;
  std::string family_;
  bool vertex_transitive_ = false;

  std::vector<std::uint32_t> bfs(VertexId source) const;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// True when both pointers refer to the same graph or to structurally equal ones.
bool same_graph(const GraphPtr& a, const GraphPtr& b);

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges, VertexId root);

std::uint32_t distance(const Graph& g, VertexId u, VertexId v);
std::uint32_t diameter(const Graph& g);

/// Parameterized description of a generated family.
struct FamilySpec {
  enum class Kind { Path, Cycle, Hypercube, RootedCube, Lollipop, Named };

  Kind kind = Kind::Path;
  std::uint32_t n = 0;  // vertices (path), length (cycle), dimension, or lollipop path length
  std::uint32_t m = 0;  // lollipop arm count; 0 selects the default 2^(n+1)
  std::string name;     // Named only: "fig2" or "lemma5"

  /// Path on `vertices` vertices, labelled v_0 .. v_{k-1}, r; rooted at the end.
  static FamilySpec path(std::uint32_t vertices);
  static FamilySpec cycle(std::uint32_t length);
  /// Q_n rooted at the all-zeros tuple.
  static FamilySpec hypercube(std::uint32_t n);
  /// G_n: Q_{n-1} plus a pendant root attached to the all-zeros tuple.
  static FamilySpec rooted_cube(std::uint32_t n);
  /// Path r, v_n, ..., v_1 followed by `arms` parallel length-2 paths v_1 - u_i - u_0.
  static FamilySpec lollipop(std::uint32_t n, std::uint32_t arms = 0);
  static FamilySpec named(std::string name);

  /// Parses a family name and its positional integer parameters. Throws
  /// UnknownFamily or BadParameter.
  static FamilySpec parse(std::string_view family, std::span<const std::uint32_t> params);

  std::string describe() const;
};

Graph generate(const FamilySpec& spec);

/// Vertex id of a hypercube tuple; coords[0] is x_1 and is the most significant bit.
VertexId hypercube_vertex(std::span<const int> coords);

struct InducedSubgraph {
  Graph graph;
  Embedding embedding;  // new id -> old id, ascending in old id
};

/// Throws RootNotIncluded or Disconnected.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices, VertexId root);

/// Checks that `e` maps `sub` injectively into `ambient`, sends root to root,
/// and maps every edge to an edge. With `induced`, non-edges must also map
/// to non-edges. Throws BadEmbedding with the first violation.
void check_embedding(const Graph& sub, const Graph& ambient, const Embedding& e, bool induced);

}  // namespace pebble
