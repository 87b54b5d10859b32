#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace affdev {

/// Exact scalar for the rational evaluation backend (golden values, the
/// scaling law, and anything a test wants bit-for-bit).
using Rational = boost::multiprecision::cpp_rational;

}  // namespace affdev
