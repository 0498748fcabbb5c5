// Exact arithmetic primitives shared across the library: arbitrary-precision
// integers, exact rationals, and binomial coefficients. No floating point
// anywhere; ranks and dimension counts must be certain.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cybundle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) for big n. Each intermediate quotient is itself a binomial
// coefficient, so the stepwise division is exact.
inline BigInt binomial(const BigInt& n, long long k) {
    if (k < 0) return 0;
    if (n >= 0 && n < k) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt binomial(long long n, long long k) { return binomial(BigInt(n), k); }

// Number of degree-d monomials in r variables: C(r + d - 1, d).
inline BigInt monomial_count(const BigInt& rank, long long d) {
    if (d < 0) throw std::invalid_argument("monomial_count: negative degree");
    if (rank == 0) return d == 0 ? 1 : 0;
    return binomial(rank + d - 1, d);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cybundle
