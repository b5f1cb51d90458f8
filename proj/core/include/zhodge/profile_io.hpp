#pragma once

#include <string>
#include <string_view>

#include "zhodge/hodge.hpp"

namespace zhodge {

// Profile files are JSON documents of the form
//
//   { "name": "E", "dim": 2,
//     "hodge":   [[0, 0, 1], [1, 1, 10], [2, 2, 1]],
//     "torsion": { "2": [[2, 1, 1]], "3": [[2, 1, 1]] } }
//
// where each torsion entry is [prime, exponent, multiplicity]. "torsion" may
// be omitted; any other key is an error. Primes may be given as strings of
// digits when they do not fit in 64 bits.

/// Parses and validates one profile. Errors carry the 1-based line of the
/// offending value; `source` prefixes the message (usually the file path).
CohomologyProfile parse_profile(std::string_view text, std::string_view source = "<input>");

CohomologyProfile load_profile_file(const std::string& path);

/// Canonical JSON rendering, readable by parse_profile.
std::string profile_to_json(const CohomologyProfile& x);

}  // namespace zhodge
