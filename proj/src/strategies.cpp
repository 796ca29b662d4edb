#include "pebble/strategies.hpp"

#include <limits>
#include <queue>

#include "pebble/errors.hpp"

namespace pebble {

struct CertificateIssuer {
  static CertificatePtr issue(WeightFunction w, CertificateStatus status, std::vector<CertificateComponent> components,
                              std::string notes) {
    return CertificatePtr(new Certificate(std::move(w), status, std::move(components), std::move(notes)));
  }
};

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::TreeChecked: return "tree";
    case CertificateStatus::OracleChecked: return "oracle";
    case CertificateStatus::Composed: return "composed";
    case CertificateStatus::Decomposed: return "decomposed";
  }
  return "?";
}

namespace {

void require_positive(const WeightFunction& w) {
  const Graph& g = *w.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != g.root() && !w[v].is_positive()) {
      throw Error(ErrorCode::WeightNotPositive, "vertex " + g.label(v) + " has weight 0");
    }
  }
}

}  // namespace

bool check_tree_strategy(const WeightFunction& w) {
  const Graph& g = *w.graph();
  std::size_t n = g.vertex_count();
  VertexId root = g.root();
  std::vector<bool> in_support(n, false);
  std::size_t support = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == root || w[v].is_positive()) {
      in_support[v] = true;
      ++support;
    }
  }
  std::size_t induced_edges = 0;
  for (const Edge& e : g.edges()) {
    if (in_support[e.u] && in_support[e.v]) ++induced_edges;
  }
  if (induced_edges + 1 != support) {
    throw Error(ErrorCode::NotATree, "support has " + std::to_string(support) + " vertices but " +
                                         std::to_string(induced_edges) + " edges");
  }

  std::vector<VertexId> parent(n, root);
  std::vector<bool> seen(n, false);
  std::queue<VertexId> queue;
  queue.push(root);
  seen[root] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId u : g.neighbors(v)) {
      if (!in_support[u] || seen[u]) continue;
      seen[u] = true;
      parent[u] = v;
      ++reached;
      queue.push(u);
    }
  }
  if (reached != support) throw Error(ErrorCode::NotATree, "support is not connected to the root");

  for (VertexId v = 0; v < n; ++v) {
    if (!in_support[v] || v == root || parent[v] == root) continue;
    if (w[parent[v]] < w[v] * Rational(2)) return false;
  }
  return true;
}

CertificatePtr certify_tree(const WeightFunction& w) {
  if (!check_tree_strategy(w)) return nullptr;
  return CertificateIssuer::issue(w, CertificateStatus::TreeChecked, {}, "parent weight at least twice child weight");
}

OracleVerdict verify_validity_oracle(const WeightFunction& w, const SearchOptions& options) {
  require_positive(w);
  OracleVerdict verdict;
  verdict.pi = pi_rooted(w.graph(), options).value;
  MaxUnsolvable best = max_unsolvable_weight(w, verdict.pi - 1, options);
  verdict.max_weight = best.weight;
  verdict.valid = best.weight <= w.total();
  if (!verdict.valid) verdict.counterexample = best.configuration;
  verdict.maximizer = std::move(best.configuration);
  return verdict;
}

CertificatePtr certify_oracle(const WeightFunction& w, const SearchOptions& options) {
  OracleVerdict verdict = verify_validity_oracle(w, options);
  if (!verdict.valid) return nullptr;
  return CertificateIssuer::issue(w, CertificateStatus::OracleChecked, {},
                                  "exhaustive: pi=" + std::to_string(verdict.pi) +
                                      " max_unsolvable=" + verdict.max_weight.str());
}

WeightFunction extend(const WeightFunction& w, const GraphPtr& ambient, const Embedding& e) {
  const Graph& sub = *w.graph();
  if (e.image.size() != sub.vertex_count()) {
    throw Error(ErrorCode::BadEmbedding, "embedding covers " + std::to_string(e.image.size()) + " of " +
                                             std::to_string(sub.vertex_count()) + " vertices");
  }
  std::vector<Rational> weights(ambient->vertex_count());
  for (VertexId v = 0; v < sub.vertex_count(); ++v) {
    ambient->check_vertex(e.image[v]);
    weights[e.image[v]] = w[v];
  }
  return WeightFunction(ambient, std::move(weights));
}

CertificatePtr conic_combine(const GraphPtr& ambient, const std::vector<CertificateComponent>& components) {
  std::vector<Rational> sum(ambient->vertex_count());
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (!c.certificate) {
      throw Error(ErrorCode::UncertifiedComponent, "component " + std::to_string(i) + " carries no certificate");
    }
    if (c.coefficient.is_negative()) {
      throw Error(ErrorCode::NegativeCoefficient, "component " + std::to_string(i) + " has coefficient " +
                                                      c.coefficient.str());
    }
    check_embedding(*c.certificate->graph(), *ambient, c.embedding, false);
    WeightFunction lifted = extend(c.certificate->weights(), ambient, c.embedding);
    for (VertexId v = 0; v < ambient->vertex_count(); ++v) sum[v] += c.coefficient * lifted[v];
  }
  WeightFunction w(ambient, std::move(sum));
  for (VertexId v = 0; v < ambient->vertex_count(); ++v) {
    if (v != ambient->root() && w[v].is_zero()) {
      throw Error(ErrorCode::UncoveredVertex, "vertex " + ambient->label(v) + " receives total weight 0");
    }
  }
  return CertificateIssuer::issue(std::move(w), CertificateStatus::Composed, components,
                                  std::to_string(components.size()) + " components");
}

bool decompose_verify(const WeightFunction& w, const std::vector<WeightCopy>& copies) {
  const GraphPtr& ambient = w.graph();
  std::vector<Rational> sum(ambient->vertex_count());
  for (const WeightCopy& copy : copies) {
    check_embedding(*copy.base.graph(), *ambient, copy.embedding, true);
    WeightFunction lifted = extend(copy.base, ambient, copy.embedding);
    for (VertexId v = 0; v < ambient->vertex_count(); ++v) sum[v] += lifted[v];
  }
  for (VertexId v = 0; v < ambient->vertex_count(); ++v) {
    if (sum[v] != w[v]) return false;
  }
  return true;
}

CertificatePtr certify_decomposition(const WeightFunction& w, const std::vector<CertifiedCopy>& copies) {
  std::vector<WeightCopy> plain;
  std::vector<CertificateComponent> components;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (!copies[i].base) {
      throw Error(ErrorCode::UncertifiedComponent, "copy " + std::to_string(i) + " carries no certificate");
    }
    plain.push_back({copies[i].embedding, copies[i].base->weights()});
    components.push_back({Rational(1), copies[i].base, copies[i].embedding});
  }
  if (!decompose_verify(w, plain)) {
    throw Error(ErrorCode::UncertifiedWeight, "copies do not sum to the target weight function");
  }
  const Graph& g = *w.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != g.root() && w[v].is_zero()) {
      throw Error(ErrorCode::UncoveredVertex, "vertex " + g.label(v) + " receives total weight 0");
    }
  }
  return CertificateIssuer::issue(w, CertificateStatus::Decomposed, std::move(components),
                                  std::to_string(copies.size()) + " induced copies");
}

Count lemma1_bound(const CertificatePtr& cert) {
  if (!cert) throw Error(ErrorCode::UncertifiedWeight, "bound requires a certified weight function");
  const WeightFunction& w = cert->weights();
  require_positive(w);
  auto m = w.min_positive();
  if (!m) return 1;  // single-vertex graph
  BigInt q = (w.total() / *m).floor() + 1;
  if (q > std::numeric_limits<Count>::max()) throw Error(ErrorCode::Overflow, "bound " + q.str() + " overflows");
  return static_cast<Count>(q);
}

Count diameter_lower_bound(const Graph& g) {
  if (g.diameter() >= 32) throw Error(ErrorCode::Overflow, "2^" + std::to_string(g.diameter()) + " overflows");
  return Count{1} << g.diameter();
}

}  // namespace pebble
