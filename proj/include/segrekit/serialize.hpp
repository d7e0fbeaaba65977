#pragma once

#include "segrekit/triseries.hpp"
#include "segrekit/ulaurent.hpp"

#include <json.hpp>

namespace segrekit {

using Json = nlohmann::ordered_json;

// {"re":{"num":"1","den":"2"},"im":{"num":"0","den":"1"}}
Json to_json(const GaussRational& x);
GaussRational scalar_from_json(const Json& j);

// {"var":"w","trunc":12,"terms":[{"deg":0,"coeff":...}]}; exact series use "trunc":null
Json to_json(const USeries& s);
USeries series_from_json(const Json& j);

// same layout, degrees may be negative, trunc is absolute
Json to_json(const ULaurent& s);
ULaurent laurent_from_json(const Json& j);

// {"var":["z","xib","etab"],"trunc":[..],"terms":[{"deg":[k,l,j],"coeff":...}]}
Json to_json(const TriSeries& s);
TriSeries triseries_from_json(const Json& j);

}  // namespace segrekit
