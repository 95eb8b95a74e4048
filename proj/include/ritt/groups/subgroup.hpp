#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ritt/decompose.hpp"

namespace ritt::groups {

using ritt::OrderHandle;
using ritt::Polynomial;
using ritt::Rational;

// Row-major matrix-entry variables prefix11, prefix12, ..., prefixnn.
// Single-digit indices keep names unambiguous, so n <= 9.
inline OrderHandle matrix_entry_order(unsigned n, const std::string& prefix = "x") {
    if (n == 0 || n > 9) throw std::invalid_argument("matrix order: size must be in 1..9");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            names.push_back(prefix + std::to_string(i) + std::to_string(j));
    return ritt::make_order(std::move(names));
}

// The (i,j) entry variable of the row-major matrix block starting at
// `base` in the order (0-based i, j).
inline Polynomial entry_variable(const OrderHandle& order, unsigned n, unsigned i, unsigned j,
                                 std::size_t base = 0) {
    return Polynomial::variable(order, base + static_cast<std::size_t>(i) * n + j);
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline PolyMatrix identity_poly_matrix(const OrderHandle& order, unsigned n) {
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial::zero(order)));
    for (unsigned i = 0; i < n; ++i) m[i][i] = Polynomial::constant(order, Rational(1));
    return m;
}

inline PolyMatrix poly_matrix_product(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw std::invalid_argument("matrix product: size mismatch");
    const OrderHandle& order = a[0][0].order();
    PolyMatrix out(n, std::vector<Polynomial>(n, Polynomial::zero(order)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
    return out;
}

// Laplace expansion along the first row; exact and fine at desk sizes.
inline Polynomial poly_matrix_determinant(const PolyMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    if (n == 1) return m[0][0];
    const OrderHandle& order = m[0][0].order();
    Polynomial det = Polynomial::zero(order);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor(n - 1, std::vector<Polynomial>(n - 1, Polynomial::zero(order)));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t col = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor[i - 1][col++] = m[i][k];
            }
        }
        Polynomial term = m[0][j] * poly_matrix_determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// det as a polynomial in the n x n entry variables of `order` at `base`.
inline Polynomial determinant_polynomial(const OrderHandle& order, unsigned n,
                                         std::size_t base = 0) {
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial::zero(order)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m[i][j] = entry_variable(order, n, i, j, base);
    return poly_matrix_determinant(m);
}

inline std::vector<Rational> identity_point(unsigned n) {
    std::vector<Rational> p(static_cast<std::size_t>(n) * n, Rational(0));
    for (unsigned i = 0; i < n; ++i) p[static_cast<std::size_t>(i) * n + i] = 1;
    return p;
}

inline Rational determinant_at(const std::vector<Rational>& point, unsigned n) {
    // Fraction-free would be overkill here: Gaussian elimination over Q.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m[i][j] = point[static_cast<std::size_t>(i) * n + j];
    Rational det(1);
    for (unsigned c = 0; c < n; ++c) {
        unsigned pivot = c;
        while (pivot < n && m[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != c) { std::swap(m[pivot], m[c]); det = -det; }
        det *= m[c][c];
        for (unsigned r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rational factor = m[r][c] / m[c][c];
            for (unsigned j = c; j < n; ++j) m[r][j] -= factor * m[c][j];
        }
    }
    return det;
}

// Zero set of polynomial equations in the n^2 entry variables, intersected
// with the invertible locus det != 0. The identity matrix must satisfy the
// equations. The triangular representation of the equations is computed on
// first use and cached.
class SubgroupPresentation {
public:
    SubgroupPresentation(unsigned n, std::vector<Polynomial> equations,
                         std::string prefix = "x")
        : n_(n), order_(matrix_entry_order(n, prefix)), equations_(std::move(equations)) {
        std::vector<Rational> id = identity_point(n_);
        for (auto& e : equations_) {
            e = e.reindex(order_); // accept equations over any same-named order
            if (!e.evaluate(id).is_zero())
                throw std::invalid_argument(
                    "subgroup: identity matrix does not satisfy the equations");
        }
        det_ = determinant_polynomial(order_, n_);
    }

    unsigned n() const { return n_; }
    const OrderHandle& order() const { return order_; }
    const std::vector<Polynomial>& equations() const { return equations_; }
    const Polynomial& det_inequation() const { return det_; }

    // Point membership: equations vanish and the matrix is invertible.
    bool satisfies(const std::vector<Rational>& point) const {
        for (const auto& e : equations_)
            if (!e.evaluate(point).is_zero()) return false;
        return !det_.evaluate(point).is_zero();
    }

    const ritt::TriangularRepresentation& representation(DecomposeLimits limits = {}) const {
        if (!rep_) {
            DecompositionTask task{order_, equations_, {}, limits};
            rep_.emplace(decompose(task));
        }
        return *rep_;
    }

private:
    unsigned n_;
    OrderHandle order_;
    std::vector<Polynomial> equations_;
    Polynomial det_ = Polynomial::zero(order_);
    mutable std::optional<ritt::TriangularRepresentation> rep_;
};

inline SubgroupPresentation presentation_GL(unsigned n) { return {n, {}}; }

inline SubgroupPresentation presentation_SL(unsigned n) {
    OrderHandle order = matrix_entry_order(n);
    Polynomial det = determinant_polynomial(order, n);
    return {n, {det - Polynomial::constant(order, Rational(1))}};
}

inline SubgroupPresentation presentation_unipotent_upper(unsigned n) {
    OrderHandle order = matrix_entry_order(n);
    std::vector<Polynomial> eqs;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j)
                eqs.push_back(entry_variable(order, n, i, j) -
                              Polynomial::constant(order, Rational(1)));
            else if (i > j)
                eqs.push_back(entry_variable(order, n, i, j));
        }
    return {n, std::move(eqs)};
}

inline SubgroupPresentation presentation_borel(unsigned n) {
    OrderHandle order = matrix_entry_order(n);
    std::vector<Polynomial> eqs;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < i; ++j) eqs.push_back(entry_variable(order, n, i, j));
    return {n, std::move(eqs)};
}

inline SubgroupPresentation presentation_diagonal_torus(unsigned n) {
    OrderHandle order = matrix_entry_order(n);
    std::vector<Polynomial> eqs;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j) eqs.push_back(entry_variable(order, n, i, j));
    return {n, std::move(eqs)};
}

// Matrix map g -> (P_ij(g)/Q(g)) from n x n to l x l matrices, entries
// given by numerator polynomials over a common denominator.
struct RationalHomomorphism {
    unsigned source_n = 0;
    unsigned target_l = 0;
    std::vector<std::vector<Polynomial>> numerators; // l x l, in source entries
    Polynomial denominator;

    RationalHomomorphism(unsigned source, unsigned target,
                         std::vector<std::vector<Polynomial>> nums, Polynomial den)
        : source_n(source), target_l(target), numerators(std::move(nums)),
          denominator(std::move(den)) {
        if (numerators.size() != target_l)
            throw std::invalid_argument("homomorphism: numerator row count");
        for (const auto& row : numerators) {
            if (row.size() != target_l)
                throw std::invalid_argument("homomorphism: numerator column count");
            for (const auto& p : row)
                if (!same_order(p.order(), denominator.order()))
                    throw std::invalid_argument("homomorphism: mixed orders");
        }
        if (denominator.is_zero())
            throw std::invalid_argument("homomorphism: zero denominator");
    }
};

inline RationalHomomorphism det_homomorphism(unsigned n) {
    OrderHandle order = matrix_entry_order(n);
    return RationalHomomorphism(n, 1, {{determinant_polynomial(order, n)}},
                                Polynomial::constant(order, Rational(1)));
}

// Image point (P_ij(g)/Q(g)); requires Q(g) != 0.
inline std::vector<Rational> apply_homomorphism(const RationalHomomorphism& tau,
                                                const std::vector<Rational>& point) {
    Rational q = tau.denominator.evaluate(point);
    if (q.is_zero()) throw std::domain_error("homomorphism: denominator vanishes at point");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(tau.target_l) * tau.target_l);
    for (const auto& row : tau.numerators)
        for (const auto& p : row) out.push_back(p.evaluate(point) / q);
    return out;
}

// Denominator-cleared composition Q^deg(f) * f(P/Q): each term c*y^a of f
// contributes c * prod P_ij^{a_ij} * Q^{deg f - |a|}.
inline Polynomial cleared_composition(const Polynomial& f,
                                      const std::vector<Polynomial>& numerators_flat,
                                      const Polynomial& q) {
    unsigned e = f.total_degree();
    const OrderHandle& order = q.order();
    Polynomial out = Polynomial::zero(order);
    for (const auto& [mono, coeff] : f.terms()) {
        Polynomial term = Polynomial::constant(order, coeff);
        unsigned used = 0;
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (mono[k] == 0) continue;
            if (k >= numerators_flat.size())
                throw std::invalid_argument("composition: variable count mismatch");
            term = term * numerators_flat[k].pow(mono[k]);
            used += mono[k];
        }
        out = out + term * q.pow(e - used);
    }
    return out;
}

// Triangular representation of the preimage tau^{-1}(H' ∩ tau(H)) inside H:
// for every component of H' compose its members with tau and clear
// denominators, adjoin them to each component of H, and decompose with the
// source determinant as a side inequation. Components multiply out as the
// family union.
inline ritt::TriangularRepresentation
preimage_intersection(const SubgroupPresentation& h, const SubgroupPresentation& hp,
                      const RationalHomomorphism& tau, DecomposeLimits limits = {}) {
    if (tau.source_n != h.n())
        throw std::invalid_argument("preimage: homomorphism source size mismatch");
    if (tau.target_l != hp.n())
        throw std::invalid_argument("preimage: homomorphism target size mismatch");
    if (!same_order(tau.denominator.order(), h.order()))
        throw std::invalid_argument("preimage: homomorphism must use the source variables");

    const auto& source_rep = h.representation(limits);
    const auto& target_rep = hp.representation(limits);
    if (source_rep.is_unit() || target_rep.is_unit())
        return ritt::TriangularRepresentation::unit(h.order());

    // Component member lists; the empty family stands for the whole space.
    std::vector<std::vector<Polynomial>> source_parts;
    if (source_rep.empty_family()) source_parts.push_back({});
    for (const auto& c : source_rep.components()) {
        if (prem(tau.denominator, c.set).is_zero())
            throw std::invalid_argument(
                "preimage: denominator vanishes identically on a source component");
        source_parts.push_back(c.set.members());
    }

    std::vector<Polynomial> numerators_flat;
    for (const auto& row : tau.numerators)
        for (const auto& p : row) numerators_flat.push_back(p);

    std::vector<std::vector<Polynomial>> pulled_parts;
    if (target_rep.empty_family()) pulled_parts.push_back({});
    for (const auto& c : target_rep.components()) {
        std::vector<Polynomial> pulled;
        for (const auto& f : c.set.members())
            pulled.push_back(cleared_composition(f, numerators_flat, tau.denominator));
        pulled_parts.push_back(std::move(pulled));
    }

    ritt::TriangularRepresentation acc = ritt::TriangularRepresentation::unit(h.order());
    for (const auto& src : source_parts) {
        for (const auto& pull : pulled_parts) {
            std::vector<Polynomial> gens = src;
            gens.insert(gens.end(), pull.begin(), pull.end());
            DecompositionTask task{h.order(), std::move(gens), {h.det_inequation()}, limits};
            acc = representation_product(acc, decompose(task));
        }
    }
    return acc;
}

} // namespace ritt::groups
