#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace hyperbessel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 50 significant digits; used wherever an error must be resolved below
// binary64 round-off.
using Extended = boost::multiprecision::cpp_bin_float_50;

namespace detail {
// Wide exponent range so that huge numerators/denominators do not overflow
// before the division, whatever the target type is.
using Wide = boost::multiprecision::cpp_bin_float_100;
}  // namespace detail

template <class Real>
Real to_real(const BigInt& value) {
  return static_cast<Real>(detail::Wide(value));
}

template <class Real>
Real to_real(const Rational& value) {
  const detail::Wide num(boost::multiprecision::numerator(value));
  const detail::Wide den(boost::multiprecision::denominator(value));
  return static_cast<Real>(num / den);
}

}  // namespace hyperbessel
