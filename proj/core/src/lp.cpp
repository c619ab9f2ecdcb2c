#include "gossez/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gossez/errors.hpp"

namespace gossez::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kRatioTieTol = 1e-12;
constexpr std::size_t kMaxIterations = 100000;

void validate(const Problem& p) {
  const auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double d) { return std::isfinite(d); });
  };
  if (p.objective.size() != p.num_vars) throw DomainError("lp::solve: objective length != num_vars");
  if (!finite(p.objective)) throw DomainError("lp::solve: non-finite objective");
  if (!p.free_vars.empty() && p.free_vars.size() != p.num_vars) {
    throw DomainError("lp::solve: free_vars length != num_vars");
  }
  for (const auto& c : p.constraints) {
    if (c.coeffs.size() != p.num_vars) throw DomainError("lp::solve: constraint length != num_vars");
    if (!finite(c.coeffs) || !std::isfinite(c.bound)) throw DomainError("lp::solve: non-finite constraint");
  }
}

// Row-major dense tableau. Row `rows` is the reduced-cost row; the last
// column holds right-hand sides (and minus the objective value in the cost row).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> a_;
};

enum class Outcome { Optimal, Unbounded };

// Bland's rule: lowest-index improving column enters; among ratio-test ties
// the lowest-index basic variable leaves.
Outcome run_simplex(Tableau& t, std::vector<std::size_t>& basis, const std::vector<bool>& allowed,
                    const std::vector<bool>& active_row) {
  for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
    std::size_t enter = t.cols();
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && t.cost(c) < -kOptimalityTol) {
        enter = c;
        break;
      }
    }
    if (enter == t.cols()) return Outcome::Optimal;

    std::size_t leave = t.rows();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (!active_row[r]) continue;
      const double a = t.at(r, enter);
      if (a <= kPivotTol) continue;
      const double ratio = std::max(0.0, t.rhs(r)) / a;
      if (ratio < best - kRatioTieTol) {
        best = ratio;
        leave = r;
      } else if (ratio <= best + kRatioTieTol && basis[r] < basis[leave]) {
        best = std::min(best, ratio);
        leave = r;
      }
    }
    if (leave == t.rows()) return Outcome::Unbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
  }
  throw std::runtime_error("lp::solve: iteration limit exceeded");
}

}  // namespace

Solution solve(const Problem& p) {
  validate(p);

  // Structural columns: one per variable, plus a mirrored column for each free one.
  std::vector<std::size_t> neg_col(p.num_vars, 0);
  std::size_t structural = p.num_vars;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    if (!p.free_vars.empty() && p.free_vars[j]) neg_col[j] = structural++;
  }

  const std::size_t m = p.constraints.size();
  std::vector<double> sign(m, 1.0);
  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = p.constraints[i];
    if (c.bound < 0.0) sign[i] = -1.0;
    if (c.relation == Relation::LessEqual) ++n_slack;
    // Rows that cannot start with their slack basic need an artificial.
    if (c.relation == Relation::Equal || sign[i] < 0.0) ++n_art;
  }

  const std::size_t art_begin = structural + n_slack;
  const std::size_t cols = art_begin + n_art;
  Tableau t(m, cols);
  std::vector<std::size_t> basis(m);
  std::vector<bool> is_art(cols, false);

  std::size_t next_slack = structural;
  std::size_t next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = p.constraints[i];
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      t.at(i, j) = sign[i] * c.coeffs[j];
      if (neg_col[j] != 0) t.at(i, neg_col[j]) = -sign[i] * c.coeffs[j];
    }
    t.rhs(i) = sign[i] * c.bound;
    if (c.relation == Relation::LessEqual) {
      t.at(i, next_slack) = sign[i];
      if (sign[i] > 0.0) basis[i] = next_slack;
      ++next_slack;
    }
    if (c.relation == Relation::Equal || sign[i] < 0.0) {
      t.at(i, next_art) = 1.0;
      is_art[next_art] = true;
      basis[i] = next_art++;
    }
  }

  std::vector<bool> active_row(m, true);
  std::vector<bool> allowed(cols, true);

  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    for (std::size_t c = art_begin; c < cols; ++c) t.cost(c) = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[basis[i]]) continue;
      for (std::size_t c = 0; c <= cols; ++c) t.at(m, c) -= t.at(i, c);
    }
    run_simplex(t, basis, allowed, active_row);
    if (-t.rhs(m) > kFeasibilityTol) return Solution{Status::Infeasible, {}, 0.0};

    // Drive remaining (zero-valued) artificials out; rows with no usable
    // pivot are linearly dependent and get dropped.
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[basis[i]]) continue;
      std::size_t pc = cols;
      for (std::size_t c = 0; c < art_begin; ++c) {
        if (std::abs(t.at(i, c)) > kPivotTol) {
          pc = c;
          break;
        }
      }
      if (pc == cols) {
        active_row[i] = false;
      } else {
        t.pivot(i, pc);
        basis[i] = pc;
      }
    }
    for (std::size_t c = art_begin; c < cols; ++c) allowed[c] = false;
  }

  // Phase 2: original objective, expressed in reduced costs w.r.t. the basis.
  for (std::size_t c = 0; c <= cols; ++c) t.cost(c) = 0.0;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    t.cost(j) = p.objective[j];
    if (neg_col[j] != 0) t.cost(neg_col[j]) = -p.objective[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!active_row[i]) continue;
    const double f = t.cost(basis[i]);
    if (f == 0.0) continue;
    for (std::size_t c = 0; c <= cols; ++c) t.at(m, c) -= f * t.at(i, c);
  }
  if (run_simplex(t, basis, allowed, active_row) == Outcome::Unbounded) {
    return Solution{Status::Unbounded, {}, 0.0};
  }

  std::vector<double> col_value(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (active_row[i]) col_value[basis[i]] = t.rhs(i);
  }
  Solution sol{Status::Optimal, std::vector<double>(p.num_vars, 0.0), 0.0};
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    sol.values[j] = col_value[j] - (neg_col[j] != 0 ? col_value[neg_col[j]] : 0.0);
    sol.objective += p.objective[j] * sol.values[j];
  }
  return sol;
}

double max_violation(const Problem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    const bool is_free = !p.free_vars.empty() && p.free_vars[j];
    if (!is_free) worst = std::max(worst, -x[j]);
  }
  for (const auto& c : p.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    const double gap = lhs - c.bound;
    worst = std::max(worst, c.relation == Relation::Equal ? std::abs(gap) : gap);
  }
  return worst;
}

}  // namespace gossez::lp
