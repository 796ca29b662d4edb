#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/rational.hpp"

namespace pebble {

/// Exact rational weight per vertex. The root weight is 0 and no weight is
/// negative; zero weights elsewhere are allowed here (strategy components)
/// and rejected later by the validity checkers.
class WeightFunction {
 public:
  /// Throws NegativeWeight, BadParameter (nonzero root weight) or GraphMismatch.
  WeightFunction(GraphPtr graph, std::vector<Rational> weights);

  static WeightFunction zero(GraphPtr graph);

  const GraphPtr& graph() const { return graph_; }
  const Rational& operator[](VertexId v) const;
  std::span<const Rational> weights() const { return weights_; }

  /// w(1_G).
  Rational total() const;
  /// True when every non-root vertex has positive weight.
  bool all_positive() const;
  std::optional<Rational> min_positive() const;

  WeightFunction scaled(const Rational& factor) const;
  bool invariant_under(const Permutation& p) const;

  /// Weights over a common denominator: weights[v] == numerators[v] / denominator.
  /// Throws Overflow when a numerator leaves the int64 range.
  struct IntegerForm {
    std::vector<std::int64_t> numerators;
    BigInt denominator;
  };
  IntegerForm integer_form() const;

  friend bool operator==(const WeightFunction& a, const WeightFunction& b);

 private:
  GraphPtr graph_;
  std::vector<Rational> weights_;
};

/// w(p) = sum of p(v) * w(v). Throws GraphMismatch.
Rational evaluate(const WeightFunction& w, const Configuration& p);

}  // namespace pebble
