#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace linsys {

using Bint = boost::multiprecision::cpp_int;

// Binomial coefficient C(top, bottom) under the convention that the result
// is 0 whenever top < bottom, in particular for every negative top.  This is
// the convention that makes the alternating dimension sums below come out
// right: a cycle term vanishes automatically once its shifted binomial has
// top < bottom.  Exact arbitrary-precision arithmetic.
inline Bint binom(long long top, long long bottom) {
    if (bottom < 0) throw std::invalid_argument("binom: bottom must be >= 0");
    if (top < bottom) return 0;
    long long k = bottom < top - bottom ? bottom : top - bottom;
    Bint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= top - k + i;
        r /= i;  // exact: r is a binomial of a prefix
    }
    return r;
}

// Number of degree-d monomials in n+1 homogeneous variables.
inline Bint monomial_count(int n, long long d) { return binom(n + d, n); }

inline long long to_int64(const Bint& v, const char* what = "value") {
    if (v > (std::numeric_limits<long long>::max)() ||
        v < (std::numeric_limits<long long>::min)())
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<long long>(v);
}

}  // namespace linsys
