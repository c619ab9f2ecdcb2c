#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gossez/operators.hpp"
#include "gossez/sequence.hpp"

namespace gossez::verify {

/// Operators under test. Defaults to the library implementations; tests swap
/// in corrupted versions to check that the suites catch them.
struct OperatorTable {
  std::function<EvConstSeq(const SparseSeq&)> g = gossez_apply;
  std::function<EvConstSeq(const SparseSeq&)> t = t_apply;
  std::function<EvConstSeq(const BidualElem&)> g_star = g_star_apply;
};

struct Config {
  std::uint64_t seed = 42;
  std::size_t cases = 1000;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  nlohmann::json counterexample;  // null when passed
};

SuiteResult skewness(const Config& cfg, const OperatorTable& ops);
SuiteResult tail_law(const Config& cfg, const OperatorTable& ops);
SuiteResult boundedness(const Config& cfg, const OperatorTable& ops);
SuiteResult adjoint(const Config& cfg, const OperatorTable& ops);
SuiteResult trz_identities(const Config& cfg, const OperatorTable& ops);
SuiteResult w_identities(const Config& cfg, const OperatorTable& ops);
SuiteResult t_identity(const Config& cfg, const OperatorTable& ops);
SuiteResult prop3_membership(const Config& cfg, const OperatorTable& ops);
SuiteResult duality_map(const Config& cfg, const OperatorTable& ops);
SuiteResult lp_oracle(const Config& cfg, const OperatorTable& ops);

/// Every suite above, in a fixed order.
std::vector<SuiteResult> run_all(const Config& cfg, const OperatorTable& ops = {});

}  // namespace gossez::verify
