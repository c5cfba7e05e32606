#include "gran/rational.hpp"

namespace gran {

std::string to_fraction_string(const Rational &r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational &r) { return r.convert_to<double>(); }

} // namespace gran
