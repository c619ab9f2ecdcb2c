#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace gossez::oracle {

namespace {

struct Hyperplane {
  std::vector<double> a;
  double b;
};

// Gaussian elimination with partial pivoting; nullopt when singular.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> m, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-10) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Keeps a maximal linearly independent subset of the equality rows. Every
// dropped row is implied by the rest, since rows are consistent by construction.
std::vector<Hyperplane> independent_rows(const std::vector<Hyperplane>& rows) {
  std::vector<Hyperplane> kept;
  std::vector<std::vector<double>> echelon;
  std::vector<std::size_t> lead;
  for (const auto& h : rows) {
    std::vector<double> v = h.a;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const double f = v[lead[k]] / echelon[k][lead[k]];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[k][c];
    }
    const auto it = std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (it == v.end() || std::abs(*it) < 1e-10) continue;
    lead.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    kept.push_back(h);
  }
  return kept;
}

bool feasible(const lp::Problem& p, const std::vector<double>& x) {
  constexpr double tol = 1e-7;
  for (double v : x) {
    if (v < -tol) return false;
  }
  for (const auto& c : p.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    if (c.relation == lp::Relation::Equal ? std::abs(lhs - c.bound) > tol : lhs > c.bound + tol) return false;
  }
  return true;
}

}  // namespace

std::optional<double> vertex_enumeration(const lp::Problem& p) {
  const std::size_t n = p.num_vars;
  std::vector<Hyperplane> fixed;
  std::vector<Hyperplane> optional_planes;
  for (const auto& c : p.constraints) {
    (c.relation == lp::Relation::Equal ? fixed : optional_planes).push_back({c.coeffs, c.bound});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> a(n, 0.0);
    a[j] = 1.0;
    optional_planes.push_back({std::move(a), 0.0});
  }
  fixed = independent_rows(fixed);
  const std::size_t pick = n - fixed.size();
  if (pick > optional_planes.size()) return std::nullopt;

  std::optional<double> best;
  // Iterate over all pick-subsets of optional_planes via a selection mask.
  std::vector<bool> mask(optional_planes.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(pick), true);
  do {
    std::vector<std::vector<double>> m;
    std::vector<double> rhs;
    for (const auto& h : fixed) {
      m.push_back(h.a);
      rhs.push_back(h.b);
    }
    for (std::size_t i = 0; i < optional_planes.size(); ++i) {
      if (!mask[i]) continue;
      m.push_back(optional_planes[i].a);
      rhs.push_back(optional_planes[i].b);
    }
    const auto x = solve_square(std::move(m), std::move(rhs));
    if (!x || !feasible(p, *x)) continue;
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j) obj += p.objective[j] * (*x)[j];
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

lp::Problem random_bounded_lp(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_rows) {
  const auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  const auto pick = [&](std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(rng() % (hi - lo + 1)); };

  lp::Problem p;
  p.num_vars = pick(1, max_vars);
  const std::size_t rows = pick(1, max_rows);
  p.objective.resize(p.num_vars);
  for (auto& c : p.objective) c = std::round(uniform(-5.0, 5.0) * 4.0) / 4.0;

  // Anchor point keeps every row satisfiable.
  std::vector<double> anchor(p.num_vars);
  for (auto& v : anchor) v = uniform(0.0, 3.0);

  std::size_t equalities = 0;
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    lp::Constraint c;
    c.coeffs.resize(p.num_vars);
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      c.coeffs[j] = std::round(uniform(-4.0, 4.0) * 2.0) / 2.0;
      lhs += c.coeffs[j] * anchor[j];
    }
    if (equalities + 1 < p.num_vars && rng() % 5 == 0) {
      c.relation = lp::Relation::Equal;
      c.bound = lhs;
      ++equalities;
    } else {
      c.relation = lp::Relation::LessEqual;
      c.bound = lhs + uniform(0.0, 2.0);
    }
    p.constraints.push_back(std::move(c));
  }
  lp::Constraint cap;
  cap.coeffs.assign(p.num_vars, 1.0);
  double sum = 0.0;
  for (double v : anchor) sum += v;
  cap.bound = sum + uniform(0.5, 4.0);
  p.constraints.push_back(std::move(cap));
  return p;
}

double bisect_distance_bound(double lambda) {
  const auto f = [lambda](double d) {
    const double z = 1.0 + d / lambda;
    return 0.25 * lambda * z * z + d - 1.0;
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gossez::oracle
