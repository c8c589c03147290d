#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cubeprobe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// The exact value of a finite double.
Rational exact_rational(double value);

double to_double(const Rational& value);

}  // namespace cubeprobe
