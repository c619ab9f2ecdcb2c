#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gossez/duality.hpp"
#include "gossez/errors.hpp"
#include "gossez/operators.hpp"
#include "gossez/serialize.hpp"

namespace gossez::cli {

namespace {

using nlohmann::json;

constexpr double kScanTol = 1e-9;
constexpr double kCertificateTol = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // verify
  std::uint64_t cases = 1000;
  // shared
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string output;
  // bound / probe
  std::optional<double> lambda;
  std::size_t dim = 4;
  std::string target = "neg-e-star";
  std::string method;
  std::uint64_t budget = 2000;
  // scan
  double lambda_min = 0.5;
  double lambda_max = 4.0;
  std::size_t steps = 8;
  // apply
  std::string op;
  std::string input;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EvConstSeq load_target(const std::string& spec) {
  if (spec == "neg-e-star") return neg_e_star();
  return decode_json<EvConstSeq>(read_file(spec));
}

ProbeMethod resolve_method(const Options& o) {
  if (o.method.empty()) return o.dim <= 8 ? ProbeMethod::Exact : ProbeMethod::Heuristic;
  try {
    return parse_method(o.method);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format \"" + format + "\"");
}

// Writes to --output when set, otherwise to out.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw UsageError("cannot write \"" + o.output + "\"");
  f << text;
  if (!f) throw UsageError("failed writing \"" + o.output + "\"");
}

std::string text_of(const SparseSeq& x) {
  std::string s = "{";
  bool first = true;
  for (const auto& [m, v] : x.entries()) {
    s += (first ? "" : ", ") + std::to_string(m) + ": " + v.str();
    first = false;
  }
  return s + "}";
}

std::string text_of(const EvConstSeq& y) {
  std::string s = "prefix [";
  for (std::size_t i = 0; i < y.length(); ++i) s += (i ? ", " : "") + y.prefix()[i].str();
  return s + "], tail " + y.tail().str();
}

ProbeResult run_probe(const Options& o, double lambda, const EvConstSeq& target) {
  if (o.dim < 1) throw UsageError("--dim must be >= 1");
  const ProbeMethod method = resolve_method(o);
  if (method == ProbeMethod::Exact && o.dim > kMaxExactDim) throw UsageError("exact probe supports --dim <= 12");
  if (method == ProbeMethod::Heuristic && o.dim > kMaxHeuristicDim) {
    throw UsageError("heuristic probe supports --dim <= 40");
  }
  if (method == ProbeMethod::Heuristic && o.budget < 1) throw UsageError("--budget must be >= 1");
  if (!(lambda > 0.0)) throw UsageError("--lambda must be > 0");
  ProbeResult r = method == ProbeMethod::Exact ? probe_exact(lambda, o.dim, target)
                                               : probe_heuristic(lambda, o.dim, target, o.budget, o.seed);
  r.seed = o.seed;
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_format(o.format, {"text"});
  return run_verify(verify::Config{o.seed, o.cases}, verify::OperatorTable{}, out);
}

int cmd_bound(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  const double lambda = *o.lambda;
  if (!(lambda > 0.0 && lambda <= 4.0)) throw UsageError("--lambda must lie in (0, 4]");
  const double d = distance_lower_bound(lambda);
  const double quarter = theorem_a_bound(lambda, 1.0);
  std::string text;
  if (o.format == "json") {
    text = json{{"lambda", lambda}, {"d", d}, {"quarter_lambda", quarter}}.dump(2) + "\n";
  } else {
    text = "lambda = " + format_float(lambda) + "\nd = " + format_float(d) +
           "\nquarter_lambda = " + format_float(quarter) + "\n";
  }
  emit(o, out, text);
  return kExitOk;
}

int cmd_probe(const Options& o, std::ostream& out, std::ostream& err) {
  check_format(o.format, {"text", "json"});
  const EvConstSeq target = load_target(o.target);
  const ProbeResult r = run_probe(o, *o.lambda, target);

  const bool check_theorem = target == neg_e_star();
  const bool consistent = !check_theorem || theorem_consistency_check(r);
  const double recheck = certificate_residual(r);
  const bool certified = std::abs(recheck - r.estimate) <= kCertificateTol;

  std::string text;
  if (o.format == "json") {
    text = json(r).dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "lambda            = " << format_float(r.lambda) << "\n"
      << "dim               = " << r.dim << "\n"
      << "method            = " << to_string(r.method) << "\n"
      << "estimate          = " << format_float(r.estimate) << "\n"
      << "lower_bound       = " << format_float(r.lower_bound) << "\n"
      << "patterns_explored = " << r.patterns_explored << "\n"
      << "seed              = " << r.seed << "\n"
      << "runtime_ms        = " << r.runtime_ms << "\n"
      << "pattern           = [";
    for (std::size_t i = 0; i < r.pattern.size(); ++i) s << (i ? ", " : "") << r.pattern[i];
    s << "]\n"
      << "certificate_x     = " << text_of(r.certificate_x) << "\n"
      << "selection         = " << text_of(r.certificate_selection) << "\n"
      << "recheck           = " << format_float(recheck) << "\n"
      << "consistency       = " << (check_theorem ? (consistent ? "pass" : "FAIL") : "n/a") << "\n";
    text = s.str();
  }
  emit(o, out, text);

  if (!consistent) {
    err << "error: estimate " << format_float(r.estimate) << " violates the distance bound "
        << format_float(r.lower_bound) << " at lambda " << format_float(r.lambda) << "\n";
    return kExitFailure;
  }
  if (!certified) {
    err << "error: certificate re-evaluates to " << format_float(recheck) << ", estimate "
        << format_float(r.estimate) << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  // "text" is the global default and means CSV here.
  if (o.format != "text") check_format(o.format, {"csv", "json"});
  if (o.steps < 2) throw UsageError("--steps must be >= 2");
  if (!(o.lambda_min > 0.0) || !(o.lambda_max <= 4.0) || o.lambda_min > o.lambda_max) {
    throw UsageError("lambda range must satisfy 0 < lambda-min <= lambda-max <= 4");
  }
  const EvConstSeq target = load_target(o.target);

  std::vector<ScanRow> rows;
  bool ok = true;
  for (std::size_t i = 0; i < o.steps; ++i) {
    const double lambda = i + 1 == o.steps
                              ? o.lambda_max
                              : o.lambda_min + (o.lambda_max - o.lambda_min) * static_cast<double>(i) /
                                                   static_cast<double>(o.steps - 1);
    const ProbeResult r = run_probe(o, lambda, target);
    rows.push_back({r.lambda, r.lower_bound, r.estimate, r.dim, r.method, r.patterns_explored, r.runtime_ms});
    if (r.estimate < r.lower_bound - kScanTol) {
      err << "error: estimate below lower bound at lambda " << format_float(lambda) << "\n";
      ok = false;
    }
  }

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"lambda", r.lambda},
                     {"lower_bound", r.lower_bound},
                     {"estimate", r.estimate},
                     {"dim", r.dim},
                     {"method", to_string(r.method)},
                     {"patterns_explored", r.patterns_explored},
                     {"runtime_ms", r.runtime_ms}});
    }
    emit(o, out, arr.dump(2) + "\n");
  } else {
    emit(o, out, write_scan_csv(rows));
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_apply(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  const std::string text = read_file(o.input);
  EvConstSeq image;
  if (o.op == "G") {
    image = gossez_apply(decode_json<SparseSeq>(text));
  } else if (o.op == "T") {
    image = t_apply(decode_json<SparseSeq>(text));
  } else if (o.op == "Gstar") {
    image = g_star_apply(decode_json<BidualElem>(text));
  } else {
    throw UsageError("--operator must be one of G, T, Gstar");
  }
  emit(o, out, o.format == "json" ? json(image).dump() + "\n" : text_of(image) + "\n");
  return kExitOk;
}

}  // namespace

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string write_scan_csv(const std::vector<ScanRow>& rows) {
  std::string s = std::string(kScanHeader) + "\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%zu,%s,%llu,%lld\n", r.lambda, r.lower_bound, r.estimate,
                  r.dim, to_string(r.method).c_str(), static_cast<unsigned long long>(r.patterns_explored),
                  static_cast<long long>(r.runtime_ms));
    s += buf;
  }
  return s;
}

std::vector<ScanRow> parse_scan_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kScanHeader) throw ParseError("scan CSV: missing or wrong header");
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) throw ParseError("scan CSV: expected 7 columns in \"" + line + "\"");
    try {
      ScanRow r;
      std::size_t used = 0;
      const auto whole = [&](const std::string& c) {
        if (used != c.size()) throw ParseError("scan CSV: bad number \"" + c + "\"");
      };
      r.lambda = std::stod(cells[0], &used);
      whole(cells[0]);
      r.lower_bound = std::stod(cells[1], &used);
      whole(cells[1]);
      r.estimate = std::stod(cells[2], &used);
      whole(cells[2]);
      r.dim = std::stoull(cells[3], &used);
      whole(cells[3]);
      r.method = parse_method(cells[4]);
      r.patterns_explored = std::stoull(cells[5], &used);
      whole(cells[5]);
      r.runtime_ms = std::stoll(cells[6], &used);
      whole(cells[6]);
      rows.push_back(r);
    } catch (const std::logic_error& e) {
      throw ParseError(std::string("scan CSV: ") + e.what());
    }
  }
  return rows;
}

int run_verify(const verify::Config& cfg, const verify::OperatorTable& ops, std::ostream& out) {
  const auto results = verify::run_all(cfg, ops);
  out << std::left << std::setw(16) << "suite" << std::setw(10) << "cases" << "status\n";
  const verify::SuiteResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << std::setw(16) << r.name << std::setw(10) << r.cases << (r.passed ? "pass" : "FAIL") << "\n";
    if (!r.passed && first_failure == nullptr) first_failure = &r;
  }
  out << results.size() << " suites, seed " << cfg.seed << ", " << cfg.cases << " cases\n";
  if (first_failure != nullptr) {
    out << "counterexample (" << first_failure->name << "): " << first_failure->counterexample.dump() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra of the Gossez operator and range-distance probes for G + lambda J", "gossez-lab"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run the exact identity and oracle suites");
  verify->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  verify->add_option("--cases", o.cases, "Random cases per suite")->capture_default_str()->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "Print the distance lower bound d(lambda) and lambda/4");
  bound->add_option("--lambda", o.lambda, "lambda in (0, 4]")->required();

  auto* probe = app.add_subcommand("probe", "Minimize the range residual over finitely supported x");
  auto* scan = app.add_subcommand("scan", "Probe over a lambda grid and write CSV");
  probe->add_option("--lambda", o.lambda, "lambda > 0")->required();
  for (auto* sub : {probe, scan}) {
    sub->add_option("--dim", o.dim, "Support dimension n")->capture_default_str();
    sub->add_option("--target", o.target, "neg-e-star or path to an EvConstSeq JSON file")->capture_default_str();
    sub->add_option("--method", o.method, "exact | heuristic (default: exact when dim <= 8)");
    sub->add_option("--budget", o.budget, "LP evaluations for the heuristic")->capture_default_str();
    sub->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  }
  scan->add_option("--lambda-min", o.lambda_min)->capture_default_str();
  scan->add_option("--lambda-max", o.lambda_max)->capture_default_str();
  scan->add_option("--steps", o.steps)->capture_default_str();

  auto* apply = app.add_subcommand("apply", "Apply G, T or Gstar to a serialized input");
  apply->add_option("--operator", o.op, "G | T | Gstar")->required();
  apply->add_option("--input", o.input, "JSON file (SparseSeq, or BidualElem for Gstar)")->required();

  for (auto* sub : {verify, bound, probe, scan, apply}) {
    sub->add_option("--output", o.output, "Write output here instead of stdout");
    sub->add_option("--format", o.format, "text | json | csv");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*probe) return cmd_probe(o, out, err);
    if (*scan) return cmd_scan(o, out, err);
    if (*apply) return cmd_apply(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gossez-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gossez::cli
