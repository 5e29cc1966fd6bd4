#ifndef GPF_BIGINT_HPP
#define GPF_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gpf {

// All counts are exact; they grow like 2^k/3 and overflow 64 bits near k = 63.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// 2^k as a BigInt, k >= 0.
inline BigInt pow2(int k) {
    BigInt one = 1;
    return one << k;
}

// (-3)^m as a BigInt, m >= 0.
inline BigInt pow_neg3(int m) {
    BigInt r = 1;
    for (int i = 0; i < m; i++) r *= -3;
    return r;
}

}  // namespace gpf

#endif
