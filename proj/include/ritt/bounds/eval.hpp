#pragma once

#include <cstdlib>
#include <optional>
#include <string>

#include "ritt/bounds/expr.hpp"
#include "ritt/errors.hpp"
#include "ritt/rational.hpp"

namespace ritt::bounds {

namespace detail {

// cpp_rational funnels every operation through full gcd canonicalization,
// and this Boost's binary gcd degenerates on huge-versus-small operands,
// so plain rational arithmetic costs seconds at chain scale even for
// integer values. The evaluator works on raw numerator and denominator
// pairs instead: denominator 1 skips reduction entirely, and a nontrivial
// denominator reduces against the residue n mod d, which keeps both gcd
// operands no larger than d.
struct Frac {
    Integer num;
    Integer den; // always positive

    static Frac whole(Integer n) { return {std::move(n), Integer(1)}; }
};

inline Frac fr(const Rational& r) { return {numerator(r), denominator(r)}; }

inline Rational fr_rational(const Frac& f) {
    return f.den == 1 ? Rational(f.num) : Rational(f.num) / Rational(f.den);
}

inline Frac fr_reduce(Integer n, Integer d) {
    if (d < 0) { d = -d; n = -n; }
    if (n == 0) return {Integer(0), Integer(1)};
    if (d != 1) {
        Integer g = boost::multiprecision::gcd(Integer(n % d), d);
        if (g > 1) { n /= g; d /= g; }
    }
    return {std::move(n), std::move(d)};
}

inline Frac fr_add(const Frac& a, const Frac& b) {
    if (a.den == 1 && b.den == 1) return {a.num + b.num, Integer(1)};
    return fr_reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline Frac fr_sub(const Frac& a, const Frac& b) {
    if (a.den == 1 && b.den == 1) return {a.num - b.num, Integer(1)};
    return fr_reduce(a.num * b.den - b.num * a.den, a.den * b.den);
}

inline Frac fr_mul(const Frac& a, const Frac& b) {
    if (a.den == 1 && b.den == 1) return {a.num * b.num, Integer(1)};
    return fr_reduce(a.num * b.num, a.den * b.den);
}

inline int fr_sign(const Frac& f) { return f.num == 0 ? 0 : (f.num < 0 ? -1 : 1); }

inline int fr_cmp(const Frac& a, const Frac& b) {
    Integer lhs = a.den == b.den ? a.num : Integer(a.num * b.den);
    Integer rhs = a.den == b.den ? b.num : Integer(b.num * a.den);
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
}

inline bool fr_is(const Frac& f, long v) { return f.den == 1 && f.num == v; }

inline std::size_t fr_bits(const Frac& f) { return bit_size(f.num) + bit_size(f.den); }

} // namespace detail

// Evaluation works in Q(sqrt(m)): values u + v*sqrt(m) with a common
// non-square radicand per arithmetic combination. Mixed nonzero radicands
// make a node inexact (nullopt) rather than an error; the interval
// machinery still handles it.
struct QuadValue {
    detail::Frac u;
    detail::Frac v;
    Integer m; // 0 when the value is rational

    bool is_rational() const { return v.num == 0 || m == 0; }
};

namespace detail {

inline QuadValue qv(const Rational& r) {
    return QuadValue{fr(r), Frac::whole(Integer(0)), Integer(0)};
}

inline QuadValue qv(Frac f) {
    return QuadValue{std::move(f), Frac::whole(Integer(0)), Integer(0)};
}

inline QuadValue qv_normalize(QuadValue x) {
    if (x.v.num == 0 || x.m == 0)
        return QuadValue{std::move(x.u), Frac::whole(Integer(0)), Integer(0)};
    Integer root;
    if (is_perfect_power(x.m, 2, root))
        return QuadValue{fr_add(x.u, fr_mul(x.v, Frac::whole(root))), Frac::whole(Integer(0)),
                         Integer(0)};
    return x;
}

inline std::optional<Integer> qv_merge_radicand(const QuadValue& a, const QuadValue& b) {
    if (a.is_rational()) return b.is_rational() ? Integer(0) : b.m;
    if (b.is_rational() || a.m == b.m) return a.m;
    return std::nullopt;
}

inline std::optional<QuadValue> qv_add(const QuadValue& a, const QuadValue& b) {
    auto m = qv_merge_radicand(a, b);
    if (!m) return std::nullopt;
    return qv_normalize(QuadValue{fr_add(a.u, b.u), fr_add(a.v, b.v), *m});
}

inline std::optional<QuadValue> qv_sub(const QuadValue& a, const QuadValue& b) {
    auto m = qv_merge_radicand(a, b);
    if (!m) return std::nullopt;
    return qv_normalize(QuadValue{fr_sub(a.u, b.u), fr_sub(a.v, b.v), *m});
}

inline std::optional<QuadValue> qv_mul(const QuadValue& a, const QuadValue& b) {
    auto m = qv_merge_radicand(a, b);
    if (!m) return std::nullopt;
    return qv_normalize(QuadValue{fr_add(fr_mul(a.u, b.u), fr_mul(fr_mul(a.v, b.v), Frac::whole(*m))),
                                  fr_add(fr_mul(a.u, b.v), fr_mul(a.v, b.u)), *m});
}

// Sign of u + v*sqrt(m); exact.
inline int qv_sign(const QuadValue& x) {
    if (x.is_rational()) return fr_sign(x.u);
    int su = fr_sign(x.u);
    int sv = fr_sign(x.v);
    if (su == 0) return sv;
    if (su == sv) return su;
    // Opposite signs: compare u^2 with v^2*m; the sign of the larger
    // magnitude side wins.
    Frac uu = fr_mul(x.u, x.u);
    Frac vv = fr_mul(fr_mul(x.v, x.v), Frac::whole(x.m));
    int c = fr_cmp(uu, vv);
    if (c == 0) return 0;
    return c > 0 ? su : sv;
}

inline std::size_t qv_bits(const QuadValue& x) {
    return fr_bits(x.u) + fr_bits(x.v) + bit_size(x.m);
}

} // namespace detail

inline std::size_t default_digit_limit() {
    if (const char* env = std::getenv("RITT_DIGIT_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

namespace detail {

// Evaluator with a hard cap on intermediate size. Sizes are predicted
// before large operations run so an over-limit request costs nothing.
struct QvEvaluator {
    std::size_t max_bits;

    std::optional<QuadValue> eval(const BoundExpr& e) const {
        using K = BoundExpr::Kind;
        switch (e.kind()) {
        case K::Constant: return qv(e.value());
        case K::EulerE: return std::nullopt;
        case K::Sum: {
            QuadValue acc = qv(Rational(0));
            for (const auto& k : e.children()) {
                auto x = eval(k);
                if (!x) return std::nullopt;
                auto s = qv_add(acc, *x);
                if (!s) return std::nullopt;
                acc = *s;
                if (qv_bits(acc) > max_bits) return std::nullopt;
            }
            return acc;
        }
        case K::Difference: {
            auto a = eval(e.child(0));
            auto b = eval(e.child(1));
            if (!a || !b) return std::nullopt;
            auto d = qv_sub(*a, *b);
            if (!d) return std::nullopt;
            if (qv_sign(*d) < 0)
                throw std::domain_error("bound evaluation: subtraction obligation violated");
            return d;
        }
        case K::Product: {
            QuadValue acc = qv(Rational(1));
            for (const auto& k : e.children()) {
                auto x = eval(k);
                if (!x) return std::nullopt;
                if (qv_bits(acc) + qv_bits(*x) > max_bits) return std::nullopt;
                auto p = qv_mul(acc, *x);
                if (!p) return std::nullopt;
                acc = *p;
            }
            return acc;
        }
        case K::Power: return eval_power(e);
        case K::Binomial: return eval_binomial(e);
        case K::CentralBinomialMax: return eval_central(e);
        case K::SqrtSurd: {
            auto u = eval(e.child(0));
            auto v = eval(e.child(1));
            auto m = eval(e.child(2));
            if (!u || !v || !m) return std::nullopt;
            if (!u->is_rational() || !v->is_rational() || !m->is_rational()) return std::nullopt;
            if (m->u.den != 1) return std::nullopt;
            Integer rad = m->u.num;
            if (rad < 0) throw std::domain_error("bound evaluation: negative radicand");
            return qv_normalize(QuadValue{u->u, v->u, rad});
        }
        case K::Maximum: {
            std::optional<QuadValue> best;
            for (const auto& k : e.children()) {
                auto x = eval(k);
                if (!x) return std::nullopt;
                if (!best) { best = x; continue; }
                auto d = qv_sub(*x, *best);
                if (!d) return std::nullopt;
                if (qv_sign(*d) > 0) best = x;
            }
            return best;
        }
        }
        return std::nullopt;
    }

    std::optional<QuadValue> eval_power(const BoundExpr& e) const {
        auto b = eval(e.child(0));
        auto x = eval(e.child(1));
        if (!b || !x) return std::nullopt;
        Integer n;
        if (x->is_rational() && x->u.den == 1) {
            n = x->u.num;
        } else if (x->is_rational() && x->u.num >= 0 && x->u.den <= 64 && b->is_rational() &&
                   fr_sign(b->u) > 0) {
            // Exponent p/q stays exact when the base is a perfect q-th
            // power: rewrite as root^p.
            unsigned q = static_cast<unsigned>(x->u.den);
            Integer rn, rd;
            if (!is_perfect_power(b->u.num, q, rn) || !is_perfect_power(b->u.den, q, rd))
                return std::nullopt;
            b = qv(Frac{rn, rd});
            n = x->u.num;
        } else {
            // Irrational exponent: exact only for 1^t and 0^t.
            if (b->is_rational() && fr_is(b->u, 1)) return qv(Rational(1));
            if (b->is_rational() && fr_is(b->u, 0) && qv_sign(*x) > 0) return qv(Rational(0));
            return std::nullopt;
        }
        if (n < 0) throw std::domain_error("bound evaluation: negative exponent");
        if (n == 0) return qv(Rational(1));
        if (b->is_rational() && fr_is(b->u, 0)) return qv(Rational(0));
        if (b->is_rational() && fr_is(b->u, 1)) return qv(Rational(1));
        std::size_t base_bits = qv_bits(*b);
        if (Integer(base_bits) * n > Integer(max_bits)) return std::nullopt;
        unsigned long long k = static_cast<unsigned long long>(n);
        QuadValue acc = qv(Rational(1));
        QuadValue sq = *b;
        while (k > 0) {
            if (k & 1ULL) {
                auto p = qv_mul(acc, sq);
                if (!p) return std::nullopt;
                acc = *p;
            }
            k >>= 1;
            if (k) {
                auto p = qv_mul(sq, sq);
                if (!p) return std::nullopt;
                sq = *p;
            }
            if (qv_bits(acc) > max_bits || qv_bits(sq) > max_bits) return std::nullopt;
        }
        return acc;
    }

    std::optional<Integer> integer_of(const BoundExpr& e) const {
        auto x = eval(e);
        if (!x || !x->is_rational() || x->u.den != 1) return std::nullopt;
        return x->u.num;
    }

    std::optional<QuadValue> eval_binomial(const BoundExpr& e) const {
        auto a = integer_of(e.child(0));
        auto b = integer_of(e.child(1));
        if (!a || !b) return std::nullopt;
        if (*a < 0 || *b < 0) throw std::domain_error("bound evaluation: negative binomial argument");
        if (*b > *a) return qv(Rational(0));
        Integer side = (*a - *b) < *b ? (*a - *b) : *b;
        if (side > 1000000) return std::nullopt;
        if (Integer(bit_size(*a) + 1) * side > Integer(max_bits)) return std::nullopt;
        Integer num = 1, den = 1;
        for (Integer i = 0; i < side; ++i) {
            num *= *a - i;
            den *= i + 1;
            if (bit_size(num) > max_bits) return std::nullopt;
        }
        return qv(Frac::whole(num / den));
    }

    std::optional<QuadValue> eval_central(const BoundExpr& e) const {
        auto m = integer_of(e.child(0));
        if (!m) return std::nullopt;
        if (*m < 0) throw std::domain_error("bound evaluation: negative binomial argument");
        Integer half = *m / 2;
        if (half > 1000000) return std::nullopt;
        // C(m, floor(m/2)) has about m bits.
        if (*m > Integer(max_bits)) return std::nullopt;
        Integer num = 1, den = 1;
        for (Integer i = 0; i < half; ++i) {
            num *= *m - i;
            den *= i + 1;
        }
        return qv(Frac::whole(num / den));
    }
};

} // namespace detail

// Exact rational value when it exists and fits the digit budget.
inline std::optional<Rational> eval_rational(const BoundExpr& e,
                                             std::size_t digit_limit = default_digit_limit()) {
    std::size_t max_bits = digit_limit < (SIZE_MAX / 4) ? (digit_limit * 10) / 3 + 16 : SIZE_MAX;
    detail::QvEvaluator ev{max_bits};
    auto x = ev.eval(e);
    if (!x || !x->is_rational()) return std::nullopt;
    return detail::fr_rational(x->u);
}

// Exact integer value when the expression denotes one within budget.
inline std::optional<Integer> eval_exact(const BoundExpr& e,
                                         std::size_t digit_limit = default_digit_limit()) {
    auto r = eval_rational(e, digit_limit);
    if (!r || denominator(*r) != 1) return std::nullopt;
    return numerator(*r);
}

} // namespace ritt::bounds
