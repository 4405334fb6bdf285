#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bkp {

/// Exact integer used for puzzle counts and polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace bkp
