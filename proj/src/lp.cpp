#include "pebble/lp.hpp"

#include <algorithm>

#include "pebble/errors.hpp"

namespace pebble {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

class Tableau {
 public:
  // Columns: x in [0, n), slacks in [n, n + m), artificials after that.
  explicit Tableau(const LinearProgram& lp) : n_(lp.objective.size()), m_(lp.rows.size()) {
    std::size_t artificials = 0;
    for (const auto& row : lp.rows) artificials += row.rhs.is_negative() ? 1 : 0;
    cols_ = n_ + m_ + artificials;
    std::size_t next_artificial = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& row = lp.rows[i];
      Rational sign = row.rhs.is_negative() ? Rational(-1) : Rational(1);
      std::vector<Rational> t(cols_ + 1);
      for (std::size_t j = 0; j < n_; ++j) t[j] = sign * row.coefficients[j];
      t[n_ + i] = sign;
      t[cols_] = sign * row.rhs;
      if (row.rhs.is_negative()) {
        t[next_artificial] = Rational(1);
        basis_.push_back(next_artificial++);
      } else {
        basis_.push_back(n_ + i);
      }
      rows_.push_back(std::move(t));
    }
  }

  bool has_artificials() const { return cols_ > n_ + m_; }

  // Maximizes c over the columns below `limit`. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& c, std::size_t limit) {
    while (true) {
      std::vector<bool> basic(cols_, false);
      for (std::size_t b : basis_) basic[b] = true;
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (basic[j]) continue;
        Rational reduced = c[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          if (!c[basis_[i]].is_zero() && !rows_[i][j].is_zero()) reduced -= c[basis_[i]] * rows_[i][j];
        }
        if (reduced.is_positive()) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;

      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i][enter].is_positive()) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  Rational value(const std::vector<Rational>& c) const {
    Rational v;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += c[basis_[i]] * rows_[i][cols_];
    return v;
  }

  // After a feasible phase one: pivot zero-valued artificials out of the
  // basis, dropping rows that turn out to be redundant.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_ + m_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n_ + m_ && rows_[i][j].is_zero()) ++j;
      if (j < n_ + m_) {
        pivot(i, j);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][cols_];
    }
    return x;
  }

  // y_i = c_B B^-1 applied to row i's slack column.
  std::vector<Rational> dual(const std::vector<Rational>& c) const {
    std::vector<Rational> y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t i = 0; i < rows_.size(); ++i) y[r] += c[basis_[i]] * rows_[i][n_ + r];
    }
    return y;
  }

  std::size_t columns() const { return cols_; }
  std::size_t structural() const { return n_ + m_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& x : rows_[r]) x /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!rows_[r][j].is_zero()) rows_[i][j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].coefficients.size() != lp.objective.size()) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                    std::to_string(lp.rows[i].coefficients.size()) +
                                                    " coefficients, objective has " +
                                                    std::to_string(lp.objective.size()));
    }
  }
  Tableau t(lp);
  LpSolution out;
  if (t.has_artificials()) {
    std::vector<Rational> phase1(t.columns());
    for (std::size_t j = t.structural(); j < t.columns(); ++j) phase1[j] = Rational(-1);
    t.optimize(phase1, t.columns());
    if (t.value(phase1).is_negative()) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    t.expel_artificials();
  }
  std::vector<Rational> c(t.columns());
  std::copy(lp.objective.begin(), lp.objective.end(), c.begin());
  if (!t.optimize(c, t.structural())) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.point = t.point();
  out.optimum = t.value(c);
  out.dual = t.dual(c);
  return out;
}

LpBound lp_pebbling_bound(const GraphPtr& g, const std::vector<PlacedCertificate>& certs) {
  if (certs.empty()) throw Error(ErrorCode::EmptyStrategySet, "no certificates given");
  std::vector<VertexId> column(g->vertex_count(), 0);
  std::vector<VertexId> free;
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    if (v == g->root()) continue;
    column[v] = static_cast<VertexId>(free.size());
    free.push_back(v);
  }

  LinearProgram lp;
  lp.objective.assign(free.size(), Rational(1));
  std::vector<bool> covered(g->vertex_count(), false);
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& placed = certs[i];
    if (!placed.certificate) {
      throw Error(ErrorCode::UncertifiedComponent, "strategy " + std::to_string(i) + " carries no certificate");
    }
    check_embedding(*placed.certificate->graph(), *g, placed.embedding, false);
    WeightFunction lifted = extend(placed.certificate->weights(), g, placed.embedding);
    LinearProgram::Row row;
    row.coefficients.resize(free.size());
    for (VertexId v : free) {
      row.coefficients[column[v]] = lifted[v];
      if (lifted[v].is_positive()) covered[v] = true;
    }
    row.rhs = placed.certificate->weights().total();
    lp.rows.push_back(std::move(row));
  }
  for (VertexId v : free) {
    if (!covered[v]) {
      throw Error(ErrorCode::UnboundedCoverage, "vertex " + g->label(v) + " has weight 0 in every strategy");
    }
  }

  LpBound out;
  out.solution = solve_lp(lp);
  if (out.solution.status != LpStatus::Optimal) {
    throw Error(ErrorCode::UnboundedCoverage, "pebbling LP is " + to_string(out.solution.status));
  }
  out.optimum = out.solution.optimum;
  BigInt bound = out.optimum.floor() + 1;
  out.bound = static_cast<Count>(to_uint64(bound));
  return out;
}

LpBound lp_pebbling_bound(const GraphPtr& g, const std::vector<CertificatePtr>& certs) {
  std::vector<PlacedCertificate> placed;
  for (const auto& c : certs) {
    placed.push_back({c, c ? Embedding::identity(c->graph()->vertex_count()) : Embedding{}});
  }
  return lp_pebbling_bound(g, placed);
}

}  // namespace pebble
