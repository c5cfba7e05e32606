#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gran {

/// Exact rational used for probabilities and measure values.
using Rational = boost::multiprecision::cpp_rational;

/// "3/4", or "1" / "0" for integers.
std::string to_fraction_string(const Rational &r);

double to_double(const Rational &r);

inline Rational ratio(long long num, long long den) { return Rational(num, den); }

} // namespace gran
