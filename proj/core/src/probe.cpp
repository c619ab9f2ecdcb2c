#include "gossez/probe.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "gossez/duality.hpp"
#include "gossez/errors.hpp"

namespace gossez {

namespace {

constexpr double kTieTol = 1e-12;

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::uint64_t pattern_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= 3;
  return c;
}

// Base-3 code, coordinate 1 most significant, digit d <-> sign d - 1. Code
// order is then lexicographic order on patterns.
SignPattern decode(std::uint64_t code, std::size_t n) {
  SignPattern p(n);
  for (std::size_t i = n; i-- > 0;) {
    p[i] = static_cast<int>(code % 3) - 1;
    code /= 3;
  }
  return p;
}

std::uint64_t encode(const SignPattern& p) {
  std::uint64_t code = 0;
  for (int s : p) code = code * 3 + static_cast<std::uint64_t>(s + 1);
  return code;
}

void check_lambda(double lambda, const char* where) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError(std::string(where) + ": lambda must be > 0");
}

ProbeResult finalize(double lambda, const EvConstSeq& target, const SignPattern& sigma, const PatternSolution& sol) {
  ProbeResult r;
  r.lambda = lambda;
  r.dim = sigma.size();
  r.estimate = std::max(0.0, sol.value);
  r.pattern = sigma;
  r.target = target;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != 0 && sol.x[i] != 0.0) r.certificate_x.set(i + 1, Rational::from_double(sol.x[i]));
  }
  r.certificate_selection = clamped_selection(r.certificate_x, Rational::from_double(lambda), target);
  r.lower_bound = probe_lower_bound(lambda, target);
  return r;
}

// Smallest code whose value is within kTieTol of the overall minimum.
template <class Range>
std::uint64_t pick_best(const Range& code_values) {
  double vmin = std::numeric_limits<double>::infinity();
  for (const auto& [code, v] : code_values) vmin = std::min(vmin, v);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [code, v] : code_values) {
    if (v <= vmin + kTieTol) best = std::min(best, code);
  }
  return best;
}

}  // namespace

double theorem_a_bound(double lambda, double norm_xss) {
  check_lambda(lambda, "theorem_a_bound");
  if (!(norm_xss >= 0.0)) throw DomainError("theorem_a_bound: norm must be >= 0");
  return 0.25 * lambda * norm_xss * norm_xss;
}

double distance_lower_bound(double lambda) {
  if (!(lambda > 0.0 && lambda <= 4.0)) throw DomainError("distance_lower_bound: lambda must lie in (0, 4]");
  // Root of d^2 + 6 lambda d + lambda^2 - 4 lambda = 0 in the cancellation-free
  // form (4 lambda - lambda^2) / (sqrt(8 lambda^2 + 4 lambda) + 3 lambda).
  return (4.0 * lambda - lambda * lambda) / (std::sqrt(8.0 * lambda * lambda + 4.0 * lambda) + 3.0 * lambda);
}

double consistency_slack(double lambda, double eps) {
  const double z = 1.0 + eps / lambda;
  return 0.25 * lambda * z * z + eps - 1.0;
}

std::string to_string(ProbeMethod m) { return m == ProbeMethod::Exact ? "exact" : "heuristic"; }

ProbeMethod parse_method(const std::string& s) {
  if (s == "exact") return ProbeMethod::Exact;
  if (s == "heuristic") return ProbeMethod::Heuristic;
  throw DomainError("unknown probe method \"" + s + "\"");
}

EvConstSeq neg_e_star() { return -e_star(); }

double probe_lower_bound(double lambda, const EvConstSeq& target) {
  if (target != neg_e_star() || lambda > 4.0) return 0.0;
  return distance_lower_bound(lambda);
}

unsigned default_thread_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GOSSEZ_LAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

lp::Problem pattern_problem(const SignPattern& sigma, double lambda, const EvConstSeq& target) {
  check_lambda(lambda, "pattern_lp");
  const std::size_t n = sigma.size();

  std::vector<std::size_t> active;  // 1-based coordinates with sigma != 0
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] < -1 || sigma[i] > 1) throw DomainError("pattern_lp: sign pattern entries must be -1, 0 or 1");
    if (sigma[i] != 0) active.push_back(i + 1);
  }
  const std::size_t nv = active.size() + 1;
  const std::size_t t_var = nv - 1;

  lp::Problem p;
  p.num_vars = nv;
  p.objective.assign(nv, 0.0);
  p.objective[t_var] = 1.0;

  // Row j of G in the a-variables: coefficient sign(m - j) * sigma_m.
  // j == 0 encodes the tail, where every coordinate lies before j.
  const auto add_coordinate = [&](std::size_t j, int sigma_j, double tau) {
    lp::Constraint up;
    lp::Constraint down;
    up.coeffs.assign(nv, 0.0);
    down.coeffs.assign(nv, 0.0);
    for (std::size_t k = 0; k < active.size(); ++k) {
      const std::size_t m = active[k];
      const int s = sigma[m - 1];
      const double g = (j != 0 && m > j) ? s : (j != 0 && m == j ? 0.0 : -s);
      if (sigma_j != 0) {
        up.coeffs[k] = g + lambda * sigma_j;
        down.coeffs[k] = -(g + lambda * sigma_j);
      } else {
        up.coeffs[k] = g - lambda;
        down.coeffs[k] = -g - lambda;
      }
    }
    up.coeffs[t_var] = -1.0;
    down.coeffs[t_var] = -1.0;
    up.bound = tau;
    down.bound = -tau;
    p.constraints.push_back(std::move(up));
    p.constraints.push_back(std::move(down));
  };

  const std::size_t len = std::max(n, target.length());
  for (std::size_t j = 1; j <= len; ++j) {
    add_coordinate(j, j <= n ? sigma[j - 1] : 0, target.at(j).to_double());
  }
  add_coordinate(0, 0, target.tail().to_double());
  return p;
}

PatternSolution pattern_lp(const SignPattern& sigma, double lambda, const EvConstSeq& target) {
  const lp::Problem p = pattern_problem(sigma, lambda, target);
  const lp::Solution s = lp::solve(p);
  if (s.status != lp::Status::Optimal) throw std::runtime_error("pattern_lp: LP not solved to optimality");

  PatternSolution out;
  out.value = s.values.back();
  out.x.assign(sigma.size(), 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] == 0) continue;
    out.x[i] = sigma[i] * std::max(0.0, s.values[k++]);
  }
  return out;
}

ProbeResult probe_exact(double lambda, std::size_t n, const EvConstSeq& target, ProbeOptions opts) {
  if (n < 1 || n > kMaxExactDim) throw DomainError("probe_exact: dimension must lie in [1, 12]");
  check_lambda(lambda, "probe_exact");
  const auto start = Clock::now();

  const std::uint64_t total = pattern_count(n);
  std::vector<double> values(total);
  const unsigned threads = static_cast<unsigned>(
      std::min<std::uint64_t>(opts.threads == 0 ? default_thread_count() : opts.threads, total));

  const auto sweep = [&](unsigned worker, std::exception_ptr& err) {
    try {
      for (std::uint64_t code = worker; code < total; code += threads) {
        values[code] = pattern_lp(decode(code, n), lambda, target).value;
      }
    } catch (...) {
      err = std::current_exception();
    }
  };

  std::vector<std::exception_ptr> errors(threads);
  if (threads <= 1) {
    sweep(0, errors[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(sweep, w, std::ref(errors[w]));
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<std::uint64_t, double>> indexed;
  indexed.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c) indexed.emplace_back(c, values[c]);
  const SignPattern best = decode(pick_best(indexed), n);

  ProbeResult r = finalize(lambda, target, best, pattern_lp(best, lambda, target));
  r.method = ProbeMethod::Exact;
  r.patterns_explored = total;
  r.runtime_ms = elapsed_ms(start);
  return r;
}

ProbeResult probe_heuristic(double lambda, std::size_t n, const EvConstSeq& target, std::uint64_t budget,
                            std::uint64_t seed) {
  if (n < 1 || n > kMaxHeuristicDim) throw DomainError("probe_heuristic: dimension must lie in [1, 40]");
  if (budget < 1) throw DomainError("probe_heuristic: budget must be >= 1");
  check_lambda(lambda, "probe_heuristic");
  const auto start = Clock::now();

  const std::uint64_t total = pattern_count(n);
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, double> solved;

  const auto evaluate = [&](const SignPattern& p) -> std::optional<double> {
    const std::uint64_t code = encode(p);
    if (const auto it = solved.find(code); it != solved.end()) return it->second;
    if (solved.size() >= budget) return std::nullopt;
    const double v = pattern_lp(p, lambda, target).value;
    solved.emplace(code, v);
    return v;
  };

  const auto random_unsolved = [&]() {
    SignPattern p(n);
    for (int attempt = 0; attempt < 32; ++attempt) {
      for (auto& s : p) s = static_cast<int>(rng() % 3) - 1;
      if (!solved.contains(encode(p))) return p;
    }
    for (std::uint64_t c = rng() % total, k = 0; k < total; ++k, c = (c + 1) % total) {
      if (!solved.contains(c)) return decode(c, n);
    }
    return p;
  };

  while (solved.size() < budget && solved.size() < total) {
    SignPattern current = random_unsolved();
    double current_value = *evaluate(current);

    // First-improvement descent over single-coordinate sign changes.
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < n && !improved; ++i) {
        const int original = current[i];
        for (int s = -1; s <= 1 && !improved; ++s) {
          if (s == original) continue;
          current[i] = s;
          const auto v = evaluate(current);
          if (v && *v < current_value - kTieTol) {
            current_value = *v;
            improved = true;
          } else {
            current[i] = original;
          }
          if (!v) break;
        }
        if (solved.size() >= budget) break;
      }
      if (solved.size() >= budget) break;
    }
  }

  const SignPattern best = decode(pick_best(solved), n);
  ProbeResult r = finalize(lambda, target, best, pattern_lp(best, lambda, target));
  r.method = ProbeMethod::Heuristic;
  r.patterns_explored = solved.size();
  r.seed = seed;
  r.runtime_ms = elapsed_ms(start);
  return r;
}

bool theorem_consistency_check(const ProbeResult& result) {
  if (result.target != neg_e_star()) throw DomainError("theorem_consistency_check: target must be -e*");
  return consistency_slack(result.lambda, result.estimate) >= -1e-9;
}

double certificate_residual(const ProbeResult& result) {
  return clamped_residual(result.certificate_x, Rational::from_double(result.lambda), result.target).to_double();
}

}  // namespace gossez
