#pragma once

#include <vector>

#include "ritt/groups/subgroup.hpp"

namespace ritt::groups {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix rational_matrix_product(const RationalMatrix& a, const RationalMatrix& b) {
    std::size_t n = a.size();
    RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Generator of the one-parameter group I + Mx + M^2 x^2/2! + ...; the
// series is a polynomial because M^n = 0, which is checked at construction.
class OneParameterUnipotent {
public:
    explicit OneParameterUnipotent(RationalMatrix m) : m_(std::move(m)) {
        n_ = static_cast<unsigned>(m_.size());
        if (n_ == 0) throw std::invalid_argument("unipotent generator: empty matrix");
        for (const auto& row : m_)
            if (row.size() != n_)
                throw std::invalid_argument("unipotent generator: matrix is not square");
        RationalMatrix power = m_;
        for (unsigned k = 1; k < n_; ++k) power = rational_matrix_product(power, m_);
        for (const auto& row : power)
            for (const auto& v : row)
                if (!v.is_zero())
                    throw std::invalid_argument("unipotent generator: matrix is not nilpotent");
    }

    unsigned n() const { return n_; }
    const RationalMatrix& matrix() const { return m_; }

private:
    unsigned n_;
    RationalMatrix m_;
};

// Exponential series truncated by nilpotency: entry (i,j) is
// sum_{k<n} (M^k)_{ij} x^k / k! in the order's variable `var_index`.
inline PolyMatrix one_param_subgroup(const OneParameterUnipotent& u, const OrderHandle& order,
                                     std::size_t var_index) {
    unsigned n = u.n();
    PolyMatrix out(n, std::vector<Polynomial>(n, Polynomial::zero(order)));
    RationalMatrix power(n, std::vector<Rational>(n, Rational(0)));
    for (unsigned i = 0; i < n; ++i) power[i][i] = 1;
    Rational factorial(1);
    for (unsigned k = 0; k < n; ++k) {
        if (k > 0) {
            power = rational_matrix_product(power, u.matrix());
            factorial *= k;
        }
        ritt::Monomial mono(order->size(), 0u);
        mono[var_index] = k;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                if (power[i][j].is_zero()) continue;
                out[i][j] = out[i][j] +
                            Polynomial::term(order, mono, power[i][j] / factorial);
            }
    }
    return out;
}

// Single-parameter convenience form over the order {x}.
inline PolyMatrix one_param_subgroup(const OneParameterUnipotent& u) {
    return one_param_subgroup(u, ritt::make_order({"x"}), 0);
}

// The parametric product of the generators' one-parameter groups, one
// fresh parameter per factor, parameters at indices param_base onward.
inline PolyMatrix unipotent_product(const std::vector<OneParameterUnipotent>& gens,
                                    const OrderHandle& order, std::size_t param_base) {
    unsigned n = gens.front().n();
    PolyMatrix prod = identity_poly_matrix(order, n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        prod = poly_matrix_product(prod, one_param_subgroup(gens[i], order, param_base + i));
    return prod;
}

// Implicitization of the product of one-parameter unipotent groups: the
// graph ideal <y_ij - p_ij(t_1..t_s)> is decomposed with the matrix
// entries below the parameters, restricted to the entry block (its class
// prefix) and projected onto the entry variables. The result describes
// the Zariski closure of the product image.
inline ritt::TriangularRepresentation
unipotent_group_equations(const std::vector<OneParameterUnipotent>& gens,
                          DecomposeLimits limits = {}) {
    if (gens.empty()) throw std::invalid_argument("unipotent group: no generators");
    unsigned n = gens.front().n();
    for (const auto& g : gens)
        if (g.n() != n)
            throw std::invalid_argument("unipotent group: generators of mixed sizes");
    std::size_t s = gens.size();
    std::size_t entries = static_cast<std::size_t>(n) * n;
    if (s > 2 * entries)
        throw std::invalid_argument("unipotent group: product length exceeds 2n^2");

    std::vector<std::string> names;
    names.reserve(entries + s);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            names.push_back("y" + std::to_string(i) + std::to_string(j));
    for (std::size_t i = 1; i <= s; ++i) names.push_back("t" + std::to_string(i));
    OrderHandle order = ritt::make_order(std::move(names));

    PolyMatrix prod = unipotent_product(gens, order, entries);

    std::vector<Polynomial> graph;
    graph.reserve(entries);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            graph.push_back(entry_variable(order, n, i, j) - prod[i][j]);

    DecompositionTask task{order, std::move(graph), {}, limits};
    ritt::TriangularRepresentation rep = decompose(task);
    return project_order(representation_restrict(rep, entries), entries);
}

} // namespace ritt::groups
