#pragma once

#include <string>
#include <vector>

#include "pebble/graph.hpp"
#include "pebble/rational.hpp"
#include "pebble/strategies.hpp"

namespace pebble {

/// maximize objective . x  subject to  row . x <= rhs for every row, x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<Rational> coefficients;
    Rational rhs;
  };
  std::vector<Rational> objective;
  std::vector<Row> rows;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;
  std::vector<Rational> point;
  /// One multiplier per row; nonnegative, and dual . rhs == optimum.
  std::vector<Rational> dual;
};

/// Exact two-phase tableau simplex with Bland's least-index rule, so pivots
/// are deterministic and cycling cannot occur. Throws DimensionMismatch.
LpSolution solve_lp(const LinearProgram& lp);

struct PlacedCertificate {
  CertificatePtr certificate;
  Embedding embedding;  // certificate graph -> ambient graph
};

struct LpBound {
  Rational optimum;
  Count bound = 0;  // floor(optimum) + 1
  LpSolution solution;
};

/// Largest total pebble count p over non-root vertices with
/// w_i(p) <= w_i(1) for every certificate; any r-unsolvable configuration is
/// such a point, so floor(optimum) + 1 bounds pi(G, r) from above.
/// Throws EmptyStrategySet, UncertifiedComponent, BadEmbedding or
/// UnboundedCoverage (a non-root vertex no certificate weighs).
LpBound lp_pebbling_bound(const GraphPtr& g, const std::vector<PlacedCertificate>& certs);

/// Same, for certificates that already live on g.
LpBound lp_pebbling_bound(const GraphPtr& g, const std::vector<CertificatePtr>& certs);

}  // namespace pebble
