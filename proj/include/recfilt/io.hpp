#pragma once

#include <string_view>

#include <json.hpp>

#include "recfilt/associated_lti.hpp"
#include "recfilt/recursive_filter.hpp"
#include "recfilt/sequences.hpp"
#include "recfilt/ztransform.hpp"

namespace recfilt::io {

using Json = nlohmann::json;

// JSON records. Complex values are [re, im] pairs; plain numbers are read as
// real values. Malformed records raise Error(InvalidArgument) naming the
// offending field.

Json to_json(Complex z);
Json to_json(const FiniteSignal& s);
Json to_json(const GeometricTerm& t);
Json to_json(const GeometricSum& s);
Json to_json(const RecursiveFilter& f);
Json to_json(const Initialization& init);
Json to_json(const FactReport& r);
Json to_json(const RocImpulseResponse& r);
Json to_json(const RocReport& r);

Complex complex_from_json(const Json& j, std::string_view field);
FiniteSignal signal_from_json(const Json& j);
GeometricSum geometric_sum_from_json(const Json& j);
RecursiveFilter filter_from_json(const Json& j);
Initialization init_from_json(const Json& j);
FactReport fact_report_from_json(const Json& j);

std::string_view to_string(SupportClass s) noexcept;

// Inline syntax.

/// "2.5", "-1", "0.5+0.25j", "-2j". U+2212 is accepted as a minus sign.
Complex parse_complex(std::string_view text);
/// Comma-separated complex values.
ComplexVector parse_complex_list(std::string_view text);
/// "v@k,v@k,..." with repeated indices summed.
FiniteSignal parse_inline_signal(std::string_view text);
/// "a:b", inclusive.
Window parse_window(std::string_view text);

}  // namespace recfilt::io
