#include "gossez/serialize.hpp"

#include <charconv>

#include "gossez/errors.hpp"

namespace gossez {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

Index parse_index(const std::string& key) {
  Index m = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), m);
  if (ec != std::errc{} || ptr != key.data() + key.size() || m < 1) {
    throw ParseError("invalid sequence index \"" + key + "\"");
  }
  return m;
}

template <class T>
T number(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number");
  return v.get<T>();
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const SparseSeq& x) {
  json entries = json::object();
  for (const auto& [m, v] : x.entries()) entries[std::to_string(m)] = v.str();
  j = json{{"entries", std::move(entries)}};
}

void from_json(const json& j, SparseSeq& x) {
  const json& entries = field(j, "entries");
  if (!entries.is_object()) throw ParseError("\"entries\" must be an object");
  SparseSeq out;
  for (const auto& [key, value] : entries.items()) {
    Rational v;
    from_json(value, v);
    out.set(parse_index(key), v);
  }
  x = std::move(out);
}

void to_json(json& j, const EvConstSeq& y) {
  json prefix = json::array();
  for (const auto& v : y.prefix()) prefix.push_back(v.str());
  j = json{{"prefix", std::move(prefix)}, {"tail", y.tail().str()}};
}

void from_json(const json& j, EvConstSeq& y) {
  const json& prefix = field(j, "prefix");
  if (!prefix.is_array()) throw ParseError("\"prefix\" must be an array");
  std::vector<Rational> values;
  for (const auto& item : prefix) {
    Rational v;
    from_json(item, v);
    values.push_back(std::move(v));
  }
  Rational tail;
  from_json(field(j, "tail"), tail);
  y = EvConstSeq(std::move(values), std::move(tail));
}

void to_json(json& j, const BidualElem& xss) {
  json w;
  to_json(w, xss.w);
  j = json{{"w", std::move(w)}, {"alpha", xss.alpha.str()}};
}

void from_json(const json& j, BidualElem& xss) {
  BidualElem out;
  from_json(field(j, "w"), out.w);
  from_json(field(j, "alpha"), out.alpha);
  xss = std::move(out);
}

void to_json(json& j, const ProbeResult& r) {
  json cert_x;
  json cert_sel;
  json target;
  to_json(cert_x, r.certificate_x);
  to_json(cert_sel, r.certificate_selection);
  to_json(target, r.target);
  j = json{{"lambda", r.lambda},
           {"dim", r.dim},
           {"estimate", r.estimate},
           {"certificate_x", std::move(cert_x)},
           {"certificate_selection", std::move(cert_sel)},
           {"lower_bound", r.lower_bound},
           {"method", to_string(r.method)},
           {"patterns_explored", r.patterns_explored},
           {"seed", r.seed},
           {"runtime_ms", r.runtime_ms},
           {"pattern", r.pattern},
           {"target", std::move(target)}};
}

void from_json(const json& j, ProbeResult& r) {
  ProbeResult out;
  try {
    out.lambda = number<double>(j, "lambda");
    out.dim = number<std::size_t>(j, "dim");
    out.estimate = number<double>(j, "estimate");
    from_json(field(j, "certificate_x"), out.certificate_x);
    from_json(field(j, "certificate_selection"), out.certificate_selection);
    out.lower_bound = number<double>(j, "lower_bound");
    const json& method = field(j, "method");
    if (!method.is_string()) throw ParseError("\"method\" must be a string");
    out.method = parse_method(method.get<std::string>());
    out.patterns_explored = number<std::uint64_t>(j, "patterns_explored");
    out.seed = number<std::uint64_t>(j, "seed");
    out.runtime_ms = number<std::int64_t>(j, "runtime_ms");
    out.pattern = field(j, "pattern").get<SignPattern>();
    from_json(field(j, "target"), out.target);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid ProbeResult: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  r = std::move(out);
}

}  // namespace gossez
