#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ritt/errors.hpp"
#include "ritt/rational.hpp"

namespace ritt::bounds {

// Direction of a one-sided bound. Every tower operation takes the
// direction of the bound it must preserve: Up means the result is >= the
// true value whenever the operands are, Down symmetrically.
enum class Dir { Down, Up };

inline Dir flip(Dir d) { return d == Dir::Up ? Dir::Down : Dir::Up; }

inline Rational pow2_rational(long k) {
    Integer one = 1;
    if (k >= 0) return Rational(one << static_cast<unsigned>(k));
    return Rational(one, one << static_cast<unsigned>(-k));
}

inline long floor_log2(const Rational& x) {
    if (x <= 0) throw std::domain_error("floor_log2: non-positive argument");
    long e = static_cast<long>(bit_size(numerator(x))) - static_cast<long>(bit_size(denominator(x)));
    while (x < pow2_rational(e)) --e;
    while (x >= pow2_rational(e + 1)) ++e;
    return e;
}

// Exact binary logarithm when x is a power of two.
inline std::optional<long> exact_log2(const Rational& x) {
    if (x <= 0) return std::nullopt;
    long e = floor_log2(x);
    if (x == pow2_rational(e)) return e;
    return std::nullopt;
}

// Rigorous enclosure of log2(x) with width about 2^(1-prec), computed by
// fixed-point squaring with separate floor and ceiling bit streams.
inline std::pair<Rational, Rational> log2_bounds(const Rational& x, unsigned prec) {
    if (x <= 0) throw std::domain_error("log2_bounds: non-positive argument");
    if (auto e = exact_log2(x)) return {Rational(*e), Rational(*e)};
    long e = floor_log2(x);
    Rational f = x / pow2_rational(e); // f in [1, 2)
    unsigned P = prec + 8;
    Integer scale = Integer(1) << P;
    Integer num = numerator(f) << P;
    const Integer& den = denominator(f);
    Integer glo = num / den;
    Integer ghi = glo + (glo * den == num ? 0 : 1);
    Integer acc_lo = 0, acc_hi = 0;
    Integer two_scale = scale << 1;
    for (unsigned k = 0; k < prec; ++k) {
        glo = (glo * glo) >> P;
        acc_lo <<= 1;
        if (glo >= two_scale) { glo >>= 1; acc_lo += 1; }
        ghi = (ghi * ghi + scale - 1) >> P;
        acc_hi <<= 1;
        if (ghi >= two_scale) { ghi = (ghi + 1) >> 1; acc_hi += 1; }
    }
    Rational unit(Integer(1), Integer(1) << prec);
    Rational lo = Rational(e) + Rational(acc_lo) * unit;
    Rational hi = Rational(e) + Rational(acc_hi + 1) * unit;
    return {lo, hi};
}

inline Rational log2_dir(const Rational& x, Dir dir, unsigned prec) {
    auto [lo, hi] = log2_bounds(x, prec);
    return dir == Dir::Up ? hi : lo;
}

// Iterated-exponential normal form: value = E_depth(top) with E_0(t) = t
// and E_{k+1}(t) = 2^{E_k(t)}. Tops at depth >= 1 are non-negative;
// depth-0 tops may be negative (they appear as exponent corrections).
struct TowerForm {
    unsigned depth = 0;
    Rational top = Rational(0);
};

inline std::string to_string(const TowerForm& t) {
    std::string s;
    for (unsigned i = 0; i < t.depth; ++i) s += "2^";
    if (t.depth > 0) s += "(";
    s += numerator(t.top).str();
    if (denominator(t.top) != 1) s += "/" + denominator(t.top).str();
    if (t.depth > 0) s += ")";
    return s;
}

constexpr std::size_t tower_top_bit_cap = 4096;

namespace detail {
inline std::size_t top_bits(const Rational& r) {
    return bit_size(numerator(r)) + bit_size(denominator(r));
}
}

// Replaces oversized exact tops by a one-level lift through log2. Keeps
// exactness whenever the top is small enough for direct arithmetic.
inline TowerForm tf_lift(TowerForm t, Dir dir, unsigned prec) {
    while (detail::top_bits(t.top) > tower_top_bit_cap) {
        if (t.top < 0)
            throw undecided_error("tower form: oversized negative component");
        t = TowerForm{t.depth + 1, log2_dir(t.top, dir, prec)};
    }
    return t;
}

inline TowerForm tf_from_rational(const Rational& r, Dir dir, unsigned prec) {
    return tf_lift(TowerForm{0, r}, dir, prec);
}

// Exact three-way comparison of tower values, or nullopt when the
// depth-0 versus deeper case cannot be separated at this precision.
inline std::optional<int> tf_compare(const TowerForm& a, const TowerForm& b, unsigned prec) {
    if (a.depth == 0 && b.depth == 0) {
        if (a.top == b.top) return 0;
        return a.top < b.top ? -1 : 1;
    }
    if (a.depth >= 1 && b.depth >= 1)
        return tf_compare(TowerForm{a.depth - 1, a.top}, TowerForm{b.depth - 1, b.top}, prec);
    if (a.depth == 0) {
        // b = E_k(t) with k >= 1 has value >= 1.
        if (a.top < 1) return -1;
        if (a.top == 1) return (b.depth == 1 && b.top == 0) ? 0 : -1;
        TowerForm blog{b.depth - 1, b.top};
        if (auto e = exact_log2(a.top)) return tf_compare(TowerForm{0, Rational(*e)}, blog, prec);
        auto [lo, hi] = log2_bounds(a.top, prec);
        auto chi = tf_compare(TowerForm{0, hi}, blog, prec);
        if (chi && *chi < 0) return -1;
        auto clo = tf_compare(TowerForm{0, lo}, blog, prec);
        if (clo && *clo > 0) return 1;
        return std::nullopt;
    }
    auto c = tf_compare(b, a, prec);
    if (!c) return std::nullopt;
    return -*c;
}

inline std::optional<bool> tf_leq(const TowerForm& a, const TowerForm& b, unsigned prec) {
    auto c = tf_compare(a, b, prec);
    if (!c) return std::nullopt;
    return *c <= 0;
}

inline TowerForm tf_exp2(const TowerForm& x, Dir dir, unsigned prec) {
    if (x.depth == 0) {
        if (denominator(x.top) == 1 && numerator(x.top) <= Integer(tower_top_bit_cap) &&
            numerator(x.top) >= -Integer(tower_top_bit_cap)) {
            long k = static_cast<long>(numerator(x.top));
            return TowerForm{0, pow2_rational(k)};
        }
        if (x.top < 0) throw undecided_error("tower form: 2^x with irrational negative x");
        return tf_lift(TowerForm{1, x.top}, dir, prec);
    }
    return TowerForm{x.depth + 1, x.top};
}

inline TowerForm tf_log2(const TowerForm& x, Dir dir, unsigned prec) {
    if (x.depth >= 1) return TowerForm{x.depth - 1, x.top};
    if (x.top <= 0) throw std::domain_error("tower form: log2 of non-positive value");
    if (auto e = exact_log2(x.top)) return TowerForm{0, Rational(*e)};
    return TowerForm{0, log2_dir(x.top, dir, prec)};
}

inline TowerForm tf_add(TowerForm x, TowerForm y, Dir dir, unsigned prec);

// x * 2^k with integer k.
inline TowerForm tf_scale2(const TowerForm& x, long k, Dir dir, unsigned prec) {
    if (k == 0) return x;
    if (x.depth == 0) return tf_lift(TowerForm{0, x.top * pow2_rational(k)}, dir, prec);
    return tf_exp2(tf_add(tf_log2(x, dir, prec), TowerForm{0, Rational(k)}, dir, prec), dir, prec);
}

namespace detail {

inline bool tf_is_zero(const TowerForm& t) { return t.depth == 0 && t.top == 0; }

inline TowerForm tf_abs(const TowerForm& t) {
    if (t.depth == 0 && t.top < 0) return TowerForm{0, -t.top};
    return t;
}

// Largest certified shift g with |y| * 2^g <= x, searched over a graded
// ladder. Returns nullopt when even g = 0 fails to certify.
inline std::optional<int> absorption_grade(const TowerForm& x, const TowerForm& y_abs,
                                           Dir, unsigned prec) {
    // Coarse-to-fine ladder. The top rung tracks the working precision so
    // that per-addition slack (a factor 1 +- 2^-g) stays below the interval
    // width the caller can resolve; a fixed cap would flatten distinct
    // values together once prec exceeds it.
    std::vector<int> grades;
    int top = prec > 16 ? static_cast<int>(prec) - 8 : 8;
    if (top > 65536) top = 65536;
    for (int g = top; g > 64; g /= 2) grades.push_back(g);
    for (int g : {64, 48, 32, 24, 16, 12, 8, 6, 4, 3, 2, 1, 0})
        if (g <= top) grades.push_back(g);
    for (int g : grades) {
        TowerForm shifted = tf_scale2(y_abs, g, Dir::Up, prec);
        auto ok = tf_leq(shifted, x, prec);
        if (ok && *ok) return g;
    }
    return std::nullopt;
}

} // namespace detail

// Directed addition. The dominant operand is kept in tower form and the
// other is absorbed: an upper bound multiplies by 1 + 2^-g where g is the
// largest certified shift with |y|*2^g <= x, a lower bound either keeps x
// (y >= 0) or multiplies by 1 - 2^-g (y < 0). This keeps the per-addition
// slack near 2^-g instead of a full doubling.
inline TowerForm tf_add(TowerForm x, TowerForm y, Dir dir, unsigned prec) {
    if (x.depth == 0 && y.depth == 0)
        return tf_lift(TowerForm{0, x.top + y.top}, dir, prec);
    if (detail::tf_is_zero(y)) return x;
    if (detail::tf_is_zero(x)) return y;
    bool y_negative = y.depth == 0 && y.top < 0;
    bool x_negative = x.depth == 0 && x.top < 0;
    if (x_negative && !y_negative) return tf_add(y, x, dir, prec);
    if (x_negative && y_negative)
        return tf_lift(TowerForm{0, x.top + y.top}, dir, prec); // both depth 0
    if (!y_negative) {
        // Put the larger value first; an undecidable comparison just
        // costs absorption quality, not soundness.
        auto c = tf_compare(x, y, prec);
        if (c && *c < 0) std::swap(x, y);
        if (dir == Dir::Down) return x;
    } else if (dir == Dir::Up) {
        return x;
    }
    auto g = detail::absorption_grade(x, detail::tf_abs(y), dir, prec);
    if (!g) throw undecided_error("tower form: addition with no certified dominant term");
    Rational factor = y_negative ? Rational(1) - pow2_rational(-*g)
                                 : Rational(1) + pow2_rational(-*g);
    if (factor <= 0) throw undecided_error("tower form: cancellation too strong");
    Rational c = log2_dir(factor, dir, prec);
    if (x.depth == 0)
        return tf_lift(TowerForm{0, x.top * factor}, dir, prec);
    return tf_exp2(tf_add(tf_log2(x, dir, prec), TowerForm{0, c}, dir, prec), dir, prec);
}

inline TowerForm tf_mul(const TowerForm& x, const TowerForm& y, Dir dir, unsigned prec) {
    if (detail::tf_is_zero(x) || detail::tf_is_zero(y)) return TowerForm{0, Rational(0)};
    if (x.depth == 0 && y.depth == 0)
        return tf_lift(TowerForm{0, x.top * y.top}, dir, prec);
    if ((x.depth == 0 && x.top < 0) || (y.depth == 0 && y.top < 0))
        throw undecided_error("tower form: product with negative factor");
    TowerForm lx = tf_log2(x, dir, prec);
    TowerForm ly = tf_log2(y, dir, prec);
    return tf_exp2(tf_add(lx, ly, dir, prec), dir, prec);
}

// x^e for e >= 0. Requires the base to be >= 1 or the power to be exactly
// computable; bases in (0, 1) with huge exponents have no sound one-sided
// tower here and raise undecided.
inline TowerForm tf_pow(const TowerForm& base, const TowerForm& expo, Dir dir, unsigned prec) {
    if (expo.depth == 0 && expo.top == 0) return TowerForm{0, Rational(1)};
    if (expo.depth == 0 && expo.top < 0)
        throw undecided_error("tower form: negative exponent");
    if (base.depth == 0) {
        if (base.top == 0) return TowerForm{0, Rational(0)};
        if (base.top == 1) return TowerForm{0, Rational(1)};
        if (base.top < 0) throw undecided_error("tower form: negative base");
        if (expo.depth == 0 && denominator(expo.top) == 1) {
            Integer n = numerator(expo.top);
            std::size_t bits = detail::top_bits(base.top);
            if (Integer(bits) * n <= Integer(tower_top_bit_cap))
                return TowerForm{0, rpow(base.top, static_cast<long>(n))};
        }
        if (base.top < 1)
            throw undecided_error("tower form: base below one with inexact exponent");
    }
    TowerForm lb = tf_log2(base, dir, prec);
    return tf_exp2(tf_mul(expo, lb, dir, prec), dir, prec);
}

} // namespace ritt::bounds
