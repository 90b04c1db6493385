#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polyface {

/// Exact arbitrary-precision integer. Every bound and formula in this library
/// is evaluated in this type; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;

/**
 * Binomial coefficient with the vanishing convention:
 *
 *     binomial(n, k) = 0  whenever k < 0, n < 0, or k > n.
 *
 * Every closed-form bound in this library silently relies on this convention
 * (e.g. phi with s = d evaluates binomial(1, k+1)), so it is defined once here
 * and property-tested against a Pascal-triangle oracle.
 */
inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j; // exact: r is binomial(n-k+j, j) after this step
    }
    return r;
}

} // namespace polyface
