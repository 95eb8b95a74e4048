#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ritt/bounds/eval.hpp"
#include "ritt/bounds/expr.hpp"
#include "ritt/bounds/normalize.hpp"
#include "ritt/bounds/tower.hpp"
#include "ritt/errors.hpp"

namespace ritt::bounds {

namespace detail {

// Directed evaluation of a canonical expression into a tower bound.
// Every case preserves the invariant: Up results are >= the true value,
// Down results are <=.
class TfEvaluator {
public:
    explicit TfEvaluator(unsigned prec) : prec_(prec) {}

    TowerForm eval(const BoundExpr& e, Dir dir) {
        auto key = std::make_pair(e.node_id(), dir);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        TowerForm t = compute(e, dir);
        memo_.emplace(key, t);
        return t;
    }

private:
    unsigned prec_;
    std::map<std::pair<const void*, Dir>, TowerForm> memo_;

    TowerForm compute(const BoundExpr& e, Dir dir) {
        using K = BoundExpr::Kind;
        switch (e.kind()) {
        case K::Constant: return tf_from_rational(e.value(), dir, prec_);
        case K::EulerE:
            return TowerForm{0, dir == Dir::Up ? Rational(2718282, 1000000)
                                               : Rational(2718281, 1000000)};
        case K::Sum: {
            TowerForm acc{0, Rational(0)};
            for (const auto& k : e.children()) acc = tf_add(acc, eval(k, dir), dir, prec_);
            return acc;
        }
        case K::Product: {
            TowerForm acc{0, Rational(1)};
            for (const auto& k : e.children()) acc = tf_mul(acc, eval(k, dir), dir, prec_);
            return acc;
        }
        case K::Power: return tf_pow(eval(e.child(0), dir), eval(e.child(1), dir), dir, prec_);
        case K::Binomial: return compute_binomial(e, dir);
        case K::CentralBinomialMax: return compute_central(e, dir);
        case K::SqrtSurd: return compute_surd(e, dir);
        case K::Maximum: return compute_maximum(e, dir);
        case K::Difference: return compute_difference(e, dir);
        }
        throw std::logic_error("tower evaluation: unreachable");
    }

    static std::optional<Integer> small_integer(const BoundExpr& e) {
        if (e.kind() != BoundExpr::Kind::Constant) return std::nullopt;
        const Rational& v = e.value();
        if (denominator(v) != 1 || numerator(v) < 0 || numerator(v) > 4096) return std::nullopt;
        return numerator(v);
    }

    // C(a, b) with a small side s: a^s/s! from above, (a/s)^s from below.
    TowerForm compute_binomial(const BoundExpr& e, Dir dir) {
        BoundExpr top = e.child(0);
        BoundExpr side = e.child(1);
        auto s = small_integer(side);
        if (!s) {
            // Symmetry: when the top is (x + side), the other side x may
            // be small; C(x + side, side) = C(x + side, x).
            if (top.kind() == BoundExpr::Kind::Sum) {
                std::vector<BoundExpr> kept;
                bool found = false;
                for (const auto& k : top.children()) {
                    if (!found && structural_equal(k, side)) { found = true; continue; }
                    kept.push_back(k);
                }
                if (found) {
                    BoundExpr other = kept.size() == 1 ? kept.front() : BoundExpr::sum(std::move(kept));
                    if (auto s2 = small_integer(other)) { side = other; s = s2; }
                }
            }
        }
        if (!s) {
            if (dir == Dir::Up) return tf_exp2(eval(top, Dir::Up), Dir::Up, prec_);
            return TowerForm{0, Rational(0)};
        }
        if (*s == 0) return TowerForm{0, Rational(1)};
        unsigned long long k = static_cast<unsigned long long>(*s);
        Integer fact = 1;
        for (unsigned long long i = 2; i <= k; ++i) fact *= i;
        TowerForm a = eval(top, dir);
        TowerForm ak = tf_pow(a, TowerForm{0, Rational(Integer(k))}, dir, prec_);
        if (dir == Dir::Up)
            return tf_mul(ak, TowerForm{0, Rational(Integer(1), fact)}, Dir::Up, prec_);
        // (a/k)^k = a^k / k^k; requires a >= k, certified before use.
        TowerForm kk = TowerForm{0, rpow(Rational(Integer(k)), static_cast<long long>(k))};
        auto ok = tf_leq(TowerForm{0, Rational(Integer(k))}, a, prec_);
        if (!ok || !*ok) return TowerForm{0, Rational(0)};
        return tf_mul(ak, TowerForm{0, Rational(1) / kk.top}, Dir::Down, prec_);
    }

    // 2^M / (M+1) <= maxC(M) <= 2^M; the lower bound is relaxed to
    // 2^(M/2), valid once M >= 6 (2^(M/2) >= M+1 there).
    TowerForm compute_central(const BoundExpr& e, Dir dir) {
        TowerForm m = eval(e.child(0), dir);
        if (dir == Dir::Up) return tf_exp2(m, Dir::Up, prec_);
        auto big = tf_leq(TowerForm{0, Rational(6)}, m, prec_);
        if (big && *big) return tf_exp2(tf_scale2(m, -1, Dir::Down, prec_), Dir::Down, prec_);
        return TowerForm{0, Rational(1)};
    }

    TowerForm compute_surd(const BoundExpr& e, Dir dir) {
        TowerForm u = eval(e.child(0), dir);
        TowerForm v = eval(e.child(1), dir);
        TowerForm m = eval(e.child(2), dir);
        TowerForm root{0, Rational(0)};
        if (!(m.depth == 0 && m.top == 0)) {
            if (m.depth == 0 && m.top > 0) {
                Integer rn, rd;
                if (denominator(m.top) == 1 && is_perfect_power(numerator(m.top), 2, rn)) {
                    root = TowerForm{0, Rational(rn)};
                } else if (is_perfect_power(numerator(m.top), 2, rn) &&
                           is_perfect_power(denominator(m.top), 2, rd)) {
                    root = TowerForm{0, Rational(rn, rd)};
                } else {
                    root = tf_exp2(tf_scale2(tf_log2(m, dir, prec_), -1, dir, prec_), dir, prec_);
                }
            } else {
                root = tf_exp2(tf_scale2(tf_log2(m, dir, prec_), -1, dir, prec_), dir, prec_);
            }
        }
        return tf_add(u, tf_mul(v, root, dir, prec_), dir, prec_);
    }

    TowerForm compute_maximum(const BoundExpr& e, Dir dir) {
        std::optional<TowerForm> best;
        for (const auto& k : e.children()) {
            TowerForm t = eval(k, dir);
            if (!best) { best = t; continue; }
            auto c = tf_compare(t, *best, prec_);
            if (c) {
                if (*c > 0) best = t;
            } else if (dir == Dir::Up) {
                // An upper bound for the maximum must dominate every
                // member; an undecided comparison breaks that.
                throw undecided_error("tower evaluation: maximum with incomparable members");
            }
        }
        return *best;
    }

    TowerForm compute_difference(const BoundExpr& e, Dir dir) {
        // Exact narrow path first: catches surd cancellations.
        {
            detail::QvEvaluator qe{16384};
            auto q = qe.eval(e);
            if (q && q->is_rational()) return tf_from_rational(detail::fr_rational(q->u), dir, prec_);
        }
        // (A+c)^e - (A-c)^e: between 2ec*A^{e-1} and 2ec*(A+c)^{e-1}
        // (binomial expansion below, mean value theorem above).
        if (auto shape = detail::match_schur_shape(e)) {
            Rational em1 = shape->exponent - 1;
            TowerForm coeff{0, 2 * shape->exponent * shape->offset};
            if (dir == Dir::Down) {
                TowerForm a = eval(shape->scale, Dir::Down);
                return tf_mul(coeff, tf_pow(a, TowerForm{0, em1}, Dir::Down, prec_), Dir::Down, prec_);
            }
            TowerForm a = eval(shape->scale, Dir::Up);
            TowerForm ac = tf_add(a, TowerForm{0, shape->offset}, Dir::Up, prec_);
            return tf_mul(coeff, tf_pow(ac, TowerForm{0, em1}, Dir::Up, prec_), Dir::Up, prec_);
        }
        const BoundExpr& x = e.child(0);
        const BoundExpr& y = e.child(1);
        if (dir == Dir::Up) {
            // Discharge the obligation x >= y, then drop the subtrahend.
            if (!certify_le(y, x)) {
                TowerForm yu = eval(y, Dir::Up);
                TowerForm xd = eval(x, Dir::Down);
                auto ok = tf_leq(yu, xd, prec_);
                if (!ok || !*ok)
                    throw undecided_error("tower evaluation: undischarged subtraction obligation");
            }
            return eval(x, Dir::Up);
        }
        TowerForm yu = eval(y, Dir::Up);
        TowerForm xd = eval(x, Dir::Down);
        auto g = detail::absorption_grade(xd, yu, Dir::Down, prec_);
        if (!g) throw undecided_error("tower evaluation: subtraction with no certified margin");
        Rational factor = Rational(1) - pow2_rational(-*g);
        if (factor <= 0) throw undecided_error("tower evaluation: subtraction cancels to zero");
        if (xd.depth == 0) return tf_lift(TowerForm{0, xd.top * factor}, Dir::Down, prec_);
        Rational c = log2_dir(factor, Dir::Down, prec_);
        return tf_exp2(tf_add(tf_log2(xd, Dir::Down, prec_), TowerForm{0, c}, Dir::Down, prec_),
                       Dir::Down, prec_);
    }
};

} // namespace detail

// Depth-aligned two-sided enclosure: value in [E_depth(lo), E_depth(hi)].
struct LogProfile {
    unsigned depth = 0;
    Rational lo = Rational(0);
    Rational hi = Rational(0);
};

inline LogProfile log_profile(const BoundExpr& e, unsigned prec = 64) {
    BoundExpr n = normalize(e);
    detail::TfEvaluator ev(prec);
    TowerForm lo = ev.eval(n, Dir::Down);
    TowerForm hi = ev.eval(n, Dir::Up);
    while (lo.depth < hi.depth) {
        if (lo.top <= 0) { lo = TowerForm{lo.depth + 1, Rational(0)}; continue; }
        lo = TowerForm{lo.depth + 1, log2_dir(lo.top, Dir::Down, prec)};
    }
    while (hi.depth < lo.depth) {
        if (hi.top <= 0) { hi = TowerForm{hi.depth + 1, Rational(0)}; continue; }
        hi = TowerForm{hi.depth + 1, log2_dir(hi.top, Dir::Up, prec)};
    }
    return LogProfile{lo.depth, lo.top, hi.top};
}

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o) {
    switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Equal: return "=";
    case Ordering::Greater: return ">";
    }
    return "?";
}

namespace detail {

inline constexpr unsigned compare_precisions[] = {64, 256, 1024, 4096};

inline std::optional<int> exact_sign_difference(const BoundExpr& a, const BoundExpr& b,
                                                std::size_t digit_limit) {
    std::size_t max_bits = digit_limit < (SIZE_MAX / 4) ? (digit_limit * 10) / 3 + 16 : SIZE_MAX;
    QvEvaluator ev{max_bits};
    auto qa = ev.eval(a);
    if (!qa) return std::nullopt;
    auto qb = ev.eval(b);
    if (!qb) return std::nullopt;
    auto d = qv_sub(*qa, *qb);
    if (!d) return std::nullopt;
    return qv_sign(*d);
}

} // namespace detail

// Total exact ordering: exact evaluation when both sides fit the digit
// budget, otherwise canonical structural equality, one-sided structural
// certificates, and directed tower intervals under escalating precision.
inline Ordering compare(const BoundExpr& a, const BoundExpr& b,
                        std::size_t digit_limit = default_digit_limit()) {
    if (auto s = detail::exact_sign_difference(a, b, digit_limit))
        return *s < 0 ? Ordering::Less : (*s > 0 ? Ordering::Greater : Ordering::Equal);
    BoundExpr na = normalize(a);
    BoundExpr nb = normalize(b);
    if (structural_equal(na, nb)) return Ordering::Equal;
    for (unsigned prec : detail::compare_precisions) {
        try {
            detail::TfEvaluator ev(prec);
            TowerForm a_up = ev.eval(na, Dir::Up);
            TowerForm b_down = ev.eval(nb, Dir::Down);
            auto c = tf_compare(a_up, b_down, prec);
            if (c && *c < 0) return Ordering::Less;
            TowerForm b_up = ev.eval(nb, Dir::Up);
            TowerForm a_down = ev.eval(na, Dir::Down);
            c = tf_compare(b_up, a_down, prec);
            if (c && *c < 0) return Ordering::Greater;
        } catch (const undecided_error&) {
            // escalate
        }
    }
    if (certify_le(na, nb) && certify_le(nb, na)) return Ordering::Equal;
    throw undecided_error("comparison undecided at precision cap");
}

// Verified non-strict inequality a <= b; false only when a > b is proven.
inline bool check_le(const BoundExpr& a, const BoundExpr& b,
                     std::size_t digit_limit = default_digit_limit()) {
    if (auto s = detail::exact_sign_difference(a, b, digit_limit)) return *s <= 0;
    BoundExpr na = normalize(a);
    BoundExpr nb = normalize(b);
    if (structural_equal(na, nb)) return true;
    if (certify_le(na, nb)) return true;
    for (unsigned prec : detail::compare_precisions) {
        try {
            detail::TfEvaluator ev(prec);
            TowerForm a_up = ev.eval(na, Dir::Up);
            TowerForm b_down = ev.eval(nb, Dir::Down);
            auto c = tf_compare(a_up, b_down, prec);
            if (c && *c <= 0) return true;
            TowerForm b_up = ev.eval(nb, Dir::Up);
            TowerForm a_down = ev.eval(na, Dir::Down);
            c = tf_compare(b_up, a_down, prec);
            if (c && *c < 0) return false;
        } catch (const undecided_error&) {
            // escalate
        }
    }
    throw undecided_error("comparison undecided at precision cap");
}

inline bool check_lt(const BoundExpr& a, const BoundExpr& b,
                     std::size_t digit_limit = default_digit_limit()) {
    return compare(a, b, digit_limit) == Ordering::Less;
}

// One-sided iterated-exponential estimate with a printable top: the tower
// is lifted until its top drops below `top_cap` and then rounded toward
// the requested side, so the returned form still bounds the value.
inline TowerForm tower_estimate(const BoundExpr& e, Dir dir, unsigned prec = 64,
                                unsigned long top_cap = 65536) {
    detail::TfEvaluator ev(prec);
    TowerForm t = ev.eval(normalize(e), dir);
    while (t.top >= Rational(top_cap))
        t = TowerForm{t.depth + 1, log2_dir(t.top, dir, prec)};
    if (denominator(t.top) != 1) {
        Integer q = numerator(t.top) / denominator(t.top); // truncates toward zero
        if (dir == Dir::Up && t.top > 0) q += 1;
        if (dir == Dir::Down && t.top < 0) q -= 1;
        t.top = Rational(q);
    }
    return t;
}

} // namespace ritt::bounds
