#pragma once

#include <vector>

#include "ritt/errors.hpp"
#include "ritt/polynomial.hpp"

namespace ritt {

// Shared resource meter for reduction-heavy algorithms. A step is one
// single-variable pseudo-reduction; the degree cap applies to every
// intermediate polynomial.
struct ReductionBudget {
    unsigned long long steps = 100000;
    unsigned max_degree = 512;

    void charge_step() {
        if (steps == 0) throw budget_error("reduction budget exhausted (step cap)");
        --steps;
    }
    void charge_polynomial(const Polynomial& p) const {
        if (p.total_degree() > max_degree)
            throw budget_error("reduction budget exhausted (degree cap)");
    }
};

namespace detail {

// One pseudo-division pass of f by g viewed univariately in var.
// Multiplies by initial(g) once per reduction step, so the returned
// exponent is minimal for this reduction sequence.
struct UniStep {
    Polynomial quotient;
    Polynomial remainder;
    unsigned initial_exponent;
};

inline UniStep pseudo_divide_univariate(const Polynomial& f, const Polynomial& g,
                                        std::size_t var, bool want_quotient,
                                        ReductionBudget* budget) {
    const unsigned dg = g.degree_in(var);
    if (dg == 0) throw std::invalid_argument("pseudo-division: divisor has degree 0 in its class");
    const Polynomial init = g.coefficient_wrt(var, dg);
    Polynomial q(f.order());
    Polynomial r = f;
    unsigned alpha = 0;
    while (!r.is_zero()) {
        const unsigned dr = r.degree_in(var);
        if (dr < dg) break;
        if (budget) budget->charge_step();
        Polynomial lead = r.coefficient_wrt(var, dr);
        Monomial shift(f.order()->size(), 0u);
        shift[var] = dr - dg;
        Polynomial t = Polynomial::term(f.order(), std::move(shift), Rational(1)) * lead;
        if (want_quotient) q = init * q + t;
        r = init * r - t * g;
        ++alpha;
        if (budget) budget->charge_polynomial(r);
    }
    return UniStep{std::move(q), std::move(r), alpha};
}

inline bool strictly_increasing_classes(const std::vector<Polynomial>& polys) {
    long prev = -1;
    for (const auto& g : polys) {
        auto cls = g.class_index();
        if (!cls) return false; // constants are not triangular members
        if (static_cast<long>(*cls) <= prev) return false;
        prev = static_cast<long>(*cls);
    }
    return true;
}

} // namespace detail

// Full pseudo-division data witnessing
//   lc(g_1)^a_1 ... lc(g_m)^a_m * f = sum_i quotients[i] * g_i + remainder
// with deg_{class(g_i)}(remainder) < deg_{class(g_i)}(g_i) for every i.
struct PseudoDivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
    std::vector<unsigned> initial_exponents;
};

// Reduces by the member of highest class first, then descends; divisors of
// lower class cannot reintroduce degree in the higher class variables, so
// the final remainder is reduced with respect to every member.
inline PseudoDivisionResult pseudo_divide(const Polynomial& f,
                                          const std::vector<Polynomial>& divisors,
                                          ReductionBudget* budget = nullptr) {
    if (!detail::strictly_increasing_classes(divisors))
        throw std::invalid_argument("pseudo-division: divisor set is not triangular");
    const std::size_t m = divisors.size();
    PseudoDivisionResult out{std::vector<Polynomial>(m, Polynomial(f.order())), f,
                             std::vector<unsigned>(m, 0u)};
    for (std::size_t i = m; i-- > 0;) {
        const auto cls = divisors[i].class_index();
        auto step =
            detail::pseudo_divide_univariate(out.remainder, divisors[i], *cls, true, budget);
        if (step.initial_exponent > 0) {
            Polynomial scale = divisors[i].initial().pow(step.initial_exponent);
            for (std::size_t j = i + 1; j < m; ++j)
                out.quotients[j] = out.quotients[j] * scale;
        }
        out.quotients[i] = std::move(step.quotient);
        out.remainder = std::move(step.remainder);
        out.initial_exponents[i] = step.initial_exponent;
    }
    return out;
}

inline PseudoDivisionResult pseudo_divide(const Polynomial& f, const Polynomial& g,
                                          ReductionBudget* budget = nullptr) {
    return pseudo_divide(f, std::vector<Polynomial>{g}, budget);
}

// Remainder-only fast path.
inline Polynomial prem(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       ReductionBudget* budget = nullptr) {
    if (!detail::strictly_increasing_classes(divisors))
        throw std::invalid_argument("prem: divisor set is not triangular");
    Polynomial r = f;
    for (std::size_t i = divisors.size(); i-- > 0;) {
        const auto cls = divisors[i].class_index();
        r = detail::pseudo_divide_univariate(r, divisors[i], *cls, false, budget).remainder;
    }
    return r;
}

inline Polynomial prem(const Polynomial& f, const Polynomial& g,
                       ReductionBudget* budget = nullptr) {
    return prem(f, std::vector<Polynomial>{g}, budget);
}

} // namespace ritt
