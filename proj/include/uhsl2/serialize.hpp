#pragma once

#include <string>
#include <string_view>

#include "uhsl2/element.hpp"

namespace uhsl2 {

/// {"cap": N|null, "terms": [{"m": [a,b,c,d], "num": "...", "den": "..."}]}
/// with terms in increasing (a,b,c,d) order. Coefficients are decimal strings
/// in lowest terms with a positive denominator. `indent` < 0 gives one line.
std::string to_json(const Element& f, int indent = -1);

/// Inverse of to_json. Rejects anything that to_json could not have
/// produced for some Element (duplicate or out-of-cap monomials, zero or
/// unreduced coefficients, unknown keys) with a UsageError.
Element from_json(std::string_view text);

/// Human-readable form: each term as `c x^a y^b z^c h^d / (a! b! c! d!)`,
/// dropping exponent 1, zero exponents, 1! factors and unit coefficients.
/// Terms run from the lexicographically largest monomial down. The zero
/// element prints as "0".
std::string to_pretty(const Element& f);

}  // namespace uhsl2
