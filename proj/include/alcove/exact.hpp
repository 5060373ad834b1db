#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace alcove {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational. cpp_rational keeps values in lowest terms
// with a positive denominator, which is exactly the canonical form the
// predicates rely on.
using ExactScalar = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sign_of(const ExactScalar& v) { return v.sign(); }

/// Parses "p/q" or a plain integer, with optional leading sign.
ExactScalar parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const ExactScalar& v);

double to_double(const ExactScalar& v);

/// Nearest rational with denominator max_den (round half away from zero).
ExactScalar rationalize(double x, long max_den);

}  // namespace alcove
