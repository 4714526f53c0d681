#ifndef CCALC_BIGINT_HPP
#define CCALC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ccalc {

// Exact integer coefficients of unbounded magnitude. Products of many factor
// series overflow 64 bits for adversarial inputs, so everything downstream of
// the series arithmetic uses this type.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace ccalc

#endif
