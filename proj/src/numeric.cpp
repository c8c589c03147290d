#include "cubeprobe/numeric.hpp"

#include <cmath>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw InvalidParameter("cannot convert a non-finite value to a rational");
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an integer for every finite double.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational out{BigInt(scaled)};
  if (exponent > 0) {
    out *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    out /= Rational(BigInt(1) << -exponent);
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace cubeprobe
