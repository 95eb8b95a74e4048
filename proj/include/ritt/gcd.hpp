#pragma once

#include <optional>

#include "ritt/pseudo_division.hpp"

namespace ritt {

// Exact multivariate division under the global monomial order; nullopt when
// the divisor does not divide exactly.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    Polynomial rem = f;
    Polynomial quot(f.order());
    const auto& [dm, dc] = d.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        Monomial q(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            q[i] = rm[i] - dm[i];
        }
        Polynomial t = Polynomial::term(f.order(), std::move(q), rc / dc);
        quot = quot + t;
        rem = rem - t * d;
    }
    return quot;
}

namespace detail {

Polynomial gcd_poly(const Polynomial& a, const Polynomial& b);

// Content of f viewed univariately in var: gcd of the coefficient
// polynomials over the remaining variables.
inline Polynomial content_wrt(const Polynomial& f, std::size_t var) {
    Polynomial acc(f.order());
    for (unsigned k = 0; k <= f.degree_in(var); ++k) {
        Polynomial c = f.coefficient_wrt(var, k);
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c.normalized_primitive() : gcd_poly(acc, c);
        if (acc.is_constant()) break;
    }
    return acc;
}

inline Polynomial primitive_part_wrt(const Polynomial& f, std::size_t var,
                                     const Polynomial& content) {
    auto q = exact_divide(f, content);
    if (!q) throw std::logic_error("primitive part: content does not divide");
    return q->normalized_primitive();
    (void)var;
}

// Primitive pseudo-remainder sequence; returns a gcd up to a rational unit.
inline Polynomial gcd_poly(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.normalized_primitive();
    if (b.is_zero()) return a.normalized_primitive();
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.order(), Rational(1));
    auto ca = a.class_index(), cb = b.class_index();
    if (*ca != *cb) {
        // gcd divides the lower-class input and the content of the other.
        const Polynomial& low = *ca < *cb ? a : b;
        const Polynomial& high = *ca < *cb ? b : a;
        return gcd_poly(low, content_wrt(high, *high.class_index()));
    }
    const std::size_t v = *ca;
    Polynomial cont_a = content_wrt(a, v);
    Polynomial cont_b = content_wrt(b, v);
    Polynomial r0 = primitive_part_wrt(a, v, cont_a);
    Polynomial r1 = primitive_part_wrt(b, v, cont_b);
    if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
    while (!r1.is_zero() && r1.degree_in(v) > 0) {
        Polynomial r2 = pseudo_divide_univariate(r0, r1, v, false, nullptr).remainder;
        r0 = std::move(r1);
        if (r2.is_zero()) {
            r1 = Polynomial(a.order());
        } else {
            Polynomial c = content_wrt(r2, v);
            r1 = primitive_part_wrt(r2, v, c);
        }
    }
    Polynomial pp_gcd = r1.is_zero() ? r0 : Polynomial::constant(a.order(), Rational(1));
    return (gcd_poly(cont_a, cont_b) * pp_gcd).normalized_primitive();
}

} // namespace detail

inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    return detail::gcd_poly(a, b);
}

// Content of f in (k[lower vars])[class(f)]; constants for constant f.
inline Polynomial content(const Polynomial& f) {
    auto cls = f.class_index();
    if (!cls) return f.normalized_primitive();
    return detail::content_wrt(f, *cls);
}

inline Polynomial primitive_part(const Polynomial& f) {
    auto cls = f.class_index();
    if (!cls) return f.normalized_primitive();
    return detail::primitive_part_wrt(f, *cls, detail::content_wrt(f, *cls));
}

// Squarefree part with respect to the class variable: f / gcd(f, df/dv),
// same zero set with multiplicities stripped.
inline Polynomial squarefree_part(const Polynomial& f) {
    auto cls = f.class_index();
    if (!cls) return f.normalized_primitive();
    Polynomial der = f.derivative(*cls);
    Polynomial g = gcd(f, der);
    if (g.is_constant()) return f.normalized_primitive();
    auto q = exact_divide(f, g);
    if (!q) throw std::logic_error("squarefree part: gcd does not divide input");
    return q->normalized_primitive();
}

} // namespace ritt
