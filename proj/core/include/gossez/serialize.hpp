#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gossez/errors.hpp"
#include "gossez/operators.hpp"
#include "gossez/probe.hpp"
#include "gossez/rational.hpp"
#include "gossez/sequence.hpp"

// JSON encodings. Rationals are "p/q" strings (integers as "p"):
//   SparseSeq   {"entries": {"1": "3/2", "7": "-1/3"}}
//   EvConstSeq  {"prefix": ["1", "-3"], "tail": "0"}
//   BidualElem  {"w": <SparseSeq>, "alpha": "p/q"}
// Decoding failures throw ParseError.

namespace gossez {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const SparseSeq& x);
void from_json(const nlohmann::json& j, SparseSeq& x);

void to_json(nlohmann::json& j, const EvConstSeq& y);
void from_json(const nlohmann::json& j, EvConstSeq& y);

void to_json(nlohmann::json& j, const BidualElem& xss);
void from_json(const nlohmann::json& j, BidualElem& xss);

void to_json(nlohmann::json& j, const ProbeResult& r);
void from_json(const nlohmann::json& j, ProbeResult& r);

/// Parses text and decodes it as T, mapping every failure to ParseError.
template <class T>
T decode_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  T out;
  from_json(j, out);
  return out;
}

}  // namespace gossez
