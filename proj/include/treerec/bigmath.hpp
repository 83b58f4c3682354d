#pragma once

// Exact arithmetic helpers shared by every module: arbitrary-precision
// integers/rationals plus the handful of combinatorial primitives (factorials,
// binomials, integer powers) that the counting formulas are built from.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace treerec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a requested computation exceeds a hard safety cap (brute-force
// enumeration size, series order, table size).
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal cross-check fails (e.g. a value that must be an
// integer has a nontrivial denominator). Indicates a bug, never bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

inline Integer int_pow(const Integer& base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer result = 1;
    Integer b = base;
    auto e = static_cast<std::uint64_t>(exp);
    while (e != 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

inline Integer factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step: product of i consecutive integers
    }
    return result;
}

// multinomial(n; parts) = n! / (parts[0]! * parts[1]! * ...).
// The parts must be non-negative and sum to n.
inline Integer multinomial(std::int64_t n, std::span<const int> parts) {
    std::int64_t total = 0;
    Integer result = 1;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
        result *= binomial(total, p);
    }
    if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    return result;
}

// Number of labelled unrooted trees on m vertices: m^(m-2), with the
// degenerate cases m = 1, 2 both giving 1.
inline Integer cayley_unrooted_count(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("cayley_unrooted_count: need m >= 1");
    if (m <= 2) return 1;
    return int_pow(m, m - 2);
}

// Number of labelled rooted trees on m vertices: m^(m-1).
inline Integer cayley_rooted_count(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("cayley_rooted_count: need m >= 0");
    if (m == 0) return 0;
    return int_pow(m, m - 1);
}

// Floor of sqrt(x) for non-negative x, exact.
inline std::int64_t isqrt_floor(std::int64_t x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    if (x < 2) return x;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Converts an exact rational known to be integral; throws ConsistencyError if
// the denominator is not 1. Used wherever a formula passes through rationals
// (division by n, by rising products) but must land on an integer.
inline Integer require_integer(const Rational& q, const char* context) {
    if (boost::multiprecision::denominator(q) != 1)
        throw ConsistencyError(std::string(context) + ": value is not an integer");
    return boost::multiprecision::numerator(q);
}

}  // namespace treerec
