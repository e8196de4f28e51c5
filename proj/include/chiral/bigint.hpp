#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace chiral {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << e;
}

}  // namespace chiral
