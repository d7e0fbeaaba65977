#pragma once

#include "segrekit/ulaurent.hpp"

#include <string>

namespace segrekit {

// Series literal, see docs/series-grammar.md:
//   "1,0,0,2i"           coefficient list, degree ascending
//   "2i*w^-4 - 4*w^-1"   monomial expression
// Throws ParseError.
ULaurent parse_laurent(const std::string& text, const std::string& var = "w", int trunc = kExact);
USeries parse_series(const std::string& text, const std::string& var = "w", int trunc = kExact);

}  // namespace segrekit
