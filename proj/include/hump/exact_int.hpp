#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hump {

/// Arbitrary-precision signed integer used for every count in the library.
/// Expression templates are off so `auto` always holds a value.
using ExactInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                               boost::multiprecision::et_off>;

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

/// (-1)^e as an ExactInt.
inline ExactInt sign_power(long long e) { return (e % 2 == 0) ? ExactInt(1) : ExactInt(-1); }

}  // namespace hump
