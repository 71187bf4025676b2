#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace pdd {

// Exact rational arithmetic for arc weights and viability thresholds.
// The viability test gamma_v(S) >= 1 sits on a hard boundary (1/2 + 1/2 = 1),
// so no floating point is used anywhere in feasibility decisions.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or a bare integer "p". Returns nullopt on malformed input
// (empty, junk characters, zero denominator). The result is normalized to
// lowest terms with a positive denominator.
std::optional<Rational> parse_rational(const std::string& text);

// Lowest terms; integers are printed without the "/1" suffix.
std::string format_rational(const Rational& r);

}  // namespace pdd
