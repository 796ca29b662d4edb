#include "pebble/weight_function.hpp"

#include "pebble/errors.hpp"

namespace pebble {

WeightFunction::WeightFunction(GraphPtr graph, std::vector<Rational> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (!graph_) throw Error(ErrorCode::BadParameter, "weight function needs a graph");
  if (weights_.size() != graph_->vertex_count()) {
    throw Error(ErrorCode::GraphMismatch, std::to_string(weights_.size()) + " weights for a graph on " +
                                              std::to_string(graph_->vertex_count()) + " vertices");
  }
  if (!weights_[graph_->root()].is_zero()) {
    throw Error(ErrorCode::BadParameter, "root weight must be 0, got " + weights_[graph_->root()].str());
  }
  for (VertexId v = 0; v < weights_.size(); ++v) {
    if (weights_[v].is_negative()) {
      throw Error(ErrorCode::NegativeWeight, "vertex " + std::to_string(v) + " has weight " + weights_[v].str());
    }
  }
}

WeightFunction WeightFunction::zero(GraphPtr graph) {
  std::size_t n = graph->vertex_count();
  return WeightFunction(std::move(graph), std::vector<Rational>(n));
}

const Rational& WeightFunction::operator[](VertexId v) const {
  graph_->check_vertex(v);
  return weights_[v];
}

Rational WeightFunction::total() const {
  Rational sum;
  for (const Rational& w : weights_) sum += w;
  return sum;
}

bool WeightFunction::all_positive() const {
  for (VertexId v = 0; v < weights_.size(); ++v) {
    if (v != graph_->root() && !weights_[v].is_positive()) return false;
  }
  return true;
}

std::optional<Rational> WeightFunction::min_positive() const {
  std::optional<Rational> best;
  for (const Rational& w : weights_) {
    if (w.is_positive() && (!best || w < *best)) best = w;
  }
  return best;
}

WeightFunction WeightFunction::scaled(const Rational& factor) const {
  if (factor.is_negative()) throw Error(ErrorCode::NegativeCoefficient, "negative scale factor " + factor.str());
  std::vector<Rational> out;
  out.reserve(weights_.size());
  for (const Rational& w : weights_) out.push_back(w * factor);
  return WeightFunction(graph_, std::move(out));
}

bool WeightFunction::invariant_under(const Permutation& p) const {
  for (VertexId v = 0; v < weights_.size(); ++v) {
    if (weights_[p[v]] != weights_[v]) return false;
  }
  return true;
}

WeightFunction::IntegerForm WeightFunction::integer_form() const {
  BigInt lcm = 1;
  for (const Rational& w : weights_) {
    BigInt d = w.denominator();
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IntegerForm form;
  form.denominator = lcm;
  for (const Rational& w : weights_) form.numerators.push_back(to_int64(w.numerator() * (lcm / w.denominator())));
  return form;
}

bool operator==(const WeightFunction& a, const WeightFunction& b) {
  return same_graph(a.graph_, b.graph_) && a.weights_ == b.weights_;
}

Rational evaluate(const WeightFunction& w, const Configuration& p) {
  if (!same_graph(w.graph(), p.graph())) {
    throw Error(ErrorCode::GraphMismatch, "weight function and configuration live on different graphs");
  }
  Rational sum;
  auto counts = p.counts();
  for (VertexId v = 0; v < counts.size(); ++v) {
    if (counts[v] != 0) sum += w.weights()[v] * Rational(static_cast<std::int64_t>(counts[v]));
  }
  return sum;
}

}  // namespace pebble
