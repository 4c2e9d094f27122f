#include "recfilt/io.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <string>

#include "recfilt/error.hpp"

namespace recfilt::io {

namespace {

[[noreturn]] void bad(std::string_view field, std::string_view what) {
  throw Error(ErrorCode::InvalidArgument, std::string(field) + ": " + std::string(what));
}

std::string normalize_minus(std::string_view text) {
  std::string s(text);
  const std::string unicode_minus = "\xE2\x88\x92";
  for (auto pos = s.find(unicode_minus); pos != std::string::npos; pos = s.find(unicode_minus, pos)) {
    s.replace(pos, unicode_minus.size(), "-");
  }
  // Strip surrounding whitespace.
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view text, std::string_view field) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) bad(field, "not a number: '" + std::string(text) + "'");
  return v;
}

Index parse_index(std::string_view text, std::string_view field) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Index v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    bad(field, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(key, "missing");
  return j.at(key);
}

double number_from_json(const Json& j, std::string_view field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

ComplexVector complex_list_from_json(const Json& j, std::string_view field) {
  if (!j.is_array()) bad(field, "expected an array");
  ComplexVector v;
  for (const auto& e : j) v.push_back(complex_from_json(e, field));
  return v;
}

Json complex_list_to_json(std::span<const Complex> v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const FiniteSignal& s) { return Json{{"start", s.start()}, {"samples", complex_list_to_json(s.samples())}}; }

Json to_json(const GeometricTerm& t) {
  return Json{{"c", to_json(t.coefficient)},
              {"p", to_json(t.ratio)},
              {"side", t.side == Side::Causal ? "causal" : "anticausal"}};
}

Json to_json(const GeometricSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(to_json(t));
  return Json{{"terms", terms}, {"correction", to_json(s.correction)}};
}

Json to_json(const RecursiveFilter& f) { return Json{{"alpha", complex_list_to_json(f.coeffs())}}; }

Json to_json(const Initialization& init) { return Json{{"init", complex_list_to_json(init.values())}}; }

Json to_json(const FactReport& r) {
  return Json{{"fact", r.fact},
              {"ok", r.ok},
              {"max_residual", r.max_residual},
              {"counterexample_k", r.counterexample_k ? Json(*r.counterexample_k) : Json(nullptr)}};
}

std::string_view to_string(SupportClass s) noexcept {
  switch (s) {
    case SupportClass::Causal: return "causal";
    case SupportClass::Anticausal: return "anticausal";
    case SupportClass::TwoSided: return "two_sided";
  }
  return "causal";
}

Json to_json(const RocImpulseResponse& r) {
  Json terms = Json::array();
  for (const auto& t : r.h.terms) terms.push_back(to_json(t));
  return Json{{"inner", r.roc.inner()},
              {"outer", r.roc.unbounded() ? Json("inf") : Json(r.roc.outer())},
              {"support", std::string(to_string(r.support))},
              {"stable_on_unit_circle", r.stable_on_unit_circle},
              {"h_terms", terms},
              {"h_correction", to_json(r.h.correction)}};
}

Json to_json(const RocReport& r) {
  Json rocs = Json::array();
  for (const auto& roc : r.rocs) rocs.push_back(to_json(roc));
  return Json{{"poles", complex_list_to_json(r.poles)}, {"rocs", rocs}};
}

Complex complex_from_json(const Json& j, std::string_view field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  bad(field, "expected [re, im] or a number");
}

FiniteSignal signal_from_json(const Json& j) {
  const Json& start = member(j, "start");
  if (!start.is_number_integer()) bad("start", "expected an integer");
  return FiniteSignal(start.get<Index>(), complex_list_from_json(member(j, "samples"), "samples"));
}

GeometricSum geometric_sum_from_json(const Json& j) {
  GeometricSum s;
  const Json& terms = member(j, "terms");
  if (!terms.is_array()) bad("terms", "expected an array");
  for (const auto& t : terms) {
    const Json& side = member(t, "side");
    Side sd;
    if (side == "causal") {
      sd = Side::Causal;
    } else if (side == "anticausal") {
      sd = Side::Anticausal;
    } else {
      bad("side", "expected \"causal\" or \"anticausal\"");
    }
    s.terms.push_back({complex_from_json(member(t, "c"), "c"), complex_from_json(member(t, "p"), "p"), sd});
  }
  s.correction = signal_from_json(member(j, "correction"));
  return s;
}

RecursiveFilter filter_from_json(const Json& j) {
  ComplexVector alpha = complex_list_from_json(member(j, "alpha"), "alpha");
  if (alpha.empty()) bad("alpha", "needs at least one coefficient");
  return RecursiveFilter(std::move(alpha));
}

Initialization init_from_json(const Json& j) { return Initialization(complex_list_from_json(member(j, "init"), "init")); }

FactReport fact_report_from_json(const Json& j) {
  FactReport r;
  const Json& fact = member(j, "fact");
  if (!fact.is_number_integer()) bad("fact", "expected an integer");
  r.fact = fact.get<int>();
  const Json& ok = member(j, "ok");
  if (!ok.is_boolean()) bad("ok", "expected a boolean");
  r.ok = ok.get<bool>();
  r.max_residual = number_from_json(member(j, "max_residual"), "max_residual");
  const Json& ck = member(j, "counterexample_k");
  if (!ck.is_null()) {
    if (!ck.is_number_integer()) bad("counterexample_k", "expected an integer or null");
    r.counterexample_k = ck.get<Index>();
  }
  return r;
}

Complex parse_complex(std::string_view text) {
  const std::string s = normalize_minus(text);
  if (s.empty()) bad("value", "empty");
  if (s.back() != 'j' && s.back() != 'i') return {parse_double(s, "value"), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string re_part = split_at == std::string::npos ? "" : body.substr(0, split_at);
  std::string im_part = split_at == std::string::npos ? body : body.substr(split_at);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  const double re = re_part.empty() ? 0.0 : parse_double(re_part, "value");
  return {re, parse_double(im_part, "value")};
}

ComplexVector parse_complex_list(std::string_view text) {
  ComplexVector v;
  for (const auto& part : split(normalize_minus(text), ',')) v.push_back(parse_complex(part));
  return v;
}

FiniteSignal parse_inline_signal(std::string_view text) {
  const std::string s = normalize_minus(text);
  if (s.empty()) return {};
  std::map<Index, Complex> values;
  for (const auto& part : split(s, ',')) {
    const auto at = part.find('@');
    if (at == std::string::npos) bad("x", "expected value@index, got '" + part + "'");
    values[parse_index(normalize_minus(part.substr(at + 1)), "x")] += parse_complex(part.substr(0, at));
  }
  const Index lo = values.begin()->first;
  const Index hi = values.rbegin()->first;
  ComplexVector v(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [k, z] : values) v[static_cast<std::size_t>(k - lo)] = z;
  return FiniteSignal(lo, std::move(v));
}

Window parse_window(std::string_view text) {
  const std::string s = normalize_minus(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) bad("window", "expected a:b");
  const Index a = parse_index(s.substr(0, colon), "window");
  const Index b = parse_index(s.substr(colon + 1), "window");
  if (a > b) bad("window", "lower bound exceeds upper bound");
  return Window(a, b);
}

}  // namespace recfilt::io
