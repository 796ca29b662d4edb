#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/pebbling_number.hpp"
#include "pebble/rational.hpp"
#include "pebble/weight_function.hpp"

namespace pebble {

enum class CertificateStatus { TreeChecked, OracleChecked, Composed, Decomposed };

std::string to_string(CertificateStatus status);

class Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

/// One summand of a composed certificate: coefficient * (component extended by 0).
struct CertificateComponent {
  Rational coefficient;
  CertificatePtr certificate;
  Embedding embedding;  // component graph -> ambient graph
};

/// A weight function together with the reason it is valid. Only the
/// certify_* functions below issue certificates.
class Certificate {
 public:
  const WeightFunction& weights() const { return weights_; }
  const GraphPtr& graph() const { return weights_.graph(); }
  CertificateStatus status() const { return status_; }
  const std::vector<CertificateComponent>& components() const { return components_; }
  const std::string& notes() const { return notes_; }

 private:
  friend struct CertificateIssuer;

  Certificate(WeightFunction w, CertificateStatus status, std::vector<CertificateComponent> components,
              std::string notes)
      : weights_(std::move(w)), status_(status), components_(std::move(components)), notes_(std::move(notes)) {}

  WeightFunction weights_;
  CertificateStatus status_;
  std::vector<CertificateComponent> components_;
  std::string notes_;
};

/// Tree-strategy test: the positive-weight support plus the root must induce
/// a tree (else NotATree), and w(parent) >= 2 w(v) must hold for every
/// supported v not adjacent to the root.
bool check_tree_strategy(const WeightFunction& w);

/// Issues a TreeChecked certificate, or nullptr when the inequality fails.
/// Zero weights off the tree are allowed; such a certificate is meant as a
/// conic-combination component.
CertificatePtr certify_tree(const WeightFunction& w);

struct OracleVerdict {
  bool valid = false;
  /// pi(G, r); unsolvable configurations have at most pi - 1 pebbles.
  Count pi = 0;
  /// Heaviest r-unsolvable configuration and its weight.
  Rational max_weight;
  std::optional<Configuration> maximizer;
  /// Set when invalid: an r-unsolvable p with w(p) > w(1_G).
  std::optional<Configuration> counterexample;
};

/// Exhaustive validity check. Computes pi(G, r) itself, then the maximum
/// weight over all r-unsolvable configurations. Throws WeightNotPositive when
/// some non-root vertex has weight 0.
OracleVerdict verify_validity_oracle(const WeightFunction& w, const SearchOptions& options = {});

/// OracleChecked certificate, or nullptr when the oracle finds a counterexample.
CertificatePtr certify_oracle(const WeightFunction& w, const SearchOptions& options = {});

/// Conic combination on `ambient`. Embeddings only need to be subgraph
/// embeddings. Throws NegativeCoefficient, UncertifiedComponent (null
/// component), BadEmbedding or UncoveredVertex.
CertificatePtr conic_combine(const GraphPtr& ambient, const std::vector<CertificateComponent>& components);

/// w extended by zero along `e` onto `ambient`.
WeightFunction extend(const WeightFunction& w, const GraphPtr& ambient, const Embedding& e);

struct WeightCopy {
  Embedding embedding;  // base graph -> ambient graph, induced
  WeightFunction base;
};

/// True iff the copies, each extended by zero, sum exactly to w. Throws
/// BadEmbedding when some embedding is not an induced root-preserving one.
bool decompose_verify(const WeightFunction& w, const std::vector<WeightCopy>& copies);

struct CertifiedCopy {
  Embedding embedding;
  CertificatePtr base;
};

/// Decomposed certificate for w. Throws UncertifiedComponent, BadEmbedding,
/// UncoveredVertex, or UncertifiedWeight when the copies do not sum to w.
CertificatePtr certify_decomposition(const WeightFunction& w, const std::vector<CertifiedCopy>& copies);

/// floor(w(1_G) / m) + 1 with m the least non-root weight. Throws
/// UncertifiedWeight for a null certificate and WeightNotPositive when some
/// non-root weight is 0.
Count lemma1_bound(const CertificatePtr& cert);

/// 2^diameter.
Count diameter_lower_bound(const Graph& g);

}  // namespace pebble
