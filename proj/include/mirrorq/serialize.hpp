#pragma once

#include <json.hpp>

#include "mirrorq/bigfloat.hpp"
#include "mirrorq/report.hpp"
#include "mirrorq/series.hpp"

namespace mirrorq {

using json = nlohmann::json;

// {"var": "q"|"ztilde"|"eps", "order": N, "coeffs": ["p/q", ...]}
json series_to_json(const TruncSeries<>& s);
TruncSeries<> series_from_json(const json& j);

// {"re": "<decimal>", "im": "<decimal>", "prec_bits": n}
json complex_to_json(const BigComplex& z);

json report_to_json(const CheckReport& r);

// FNV-1a over the serialized payload; guards the on-disk cache.
std::string fnv1a_hex(const std::string& data);

}  // namespace mirrorq
