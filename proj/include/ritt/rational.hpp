#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ritt {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Number of bits in |n|; bit_size(0) == 0.
inline std::size_t bit_size(const Integer& n) {
    return n.is_zero() ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(n)) + 1;
}

inline Integer ipow(Integer base, unsigned long long e) {
    Integer acc{1};
    while (e) {
        if (e & 1ull) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

inline Rational rpow(const Rational& base, long long e) {
    if (e >= 0)
        return Rational(ipow(numerator(base), static_cast<unsigned long long>(e)),
                        ipow(denominator(base), static_cast<unsigned long long>(e)));
    return Rational(ipow(denominator(base), static_cast<unsigned long long>(-e)),
                    ipow(numerator(base), static_cast<unsigned long long>(-e)));
}

// Largest r with r^k <= n; requires n >= 0, k >= 1.
inline Integer iroot(const Integer& n, unsigned k) {
    if (n < 0) throw std::domain_error("iroot: negative radicand");
    if (k == 0) throw std::domain_error("iroot: zero index");
    if (n <= 1 || k == 1) return n;
    Integer hi = Integer(1) << (bit_size(n) / k + 1);
    Integer lo{0};
    while (lo + 1 < hi) {
        Integer mid = (lo + hi) / 2;
        if (ipow(mid, k) <= n) lo = mid; else hi = mid;
    }
    return lo;
}

inline bool is_perfect_power(const Integer& n, unsigned k, Integer& root_out) {
    if (n < 0) return false;
    Integer r = iroot(n, k);
    if (ipow(r, k) == n) { root_out = r; return true; }
    return false;
}

} // namespace ritt
