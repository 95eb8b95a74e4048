#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ritt/bounds/expr.hpp"
#include "ritt/rational.hpp"

namespace ritt::bounds {

namespace detail {

inline void require_matrix_dimension(unsigned n) {
    if (n <= 1) throw std::domain_error("degree bounds: matrix dimension must exceed 1");
}

inline BoundExpr bc(unsigned long long v) { return BoundExpr::constant(v); }
inline BoundExpr bc(const Integer& v) { return BoundExpr::constant(Rational(v)); }
inline BoundExpr bc(const Rational& v) { return BoundExpr::constant(v); }

inline Integer npow(unsigned n, unsigned k) { return ipow(Integer(n), k); }

} // namespace detail

// D = 3n^2 * (2n^2(n-1))^(148.5 n^6): the degree carried by one
// elimination round on the n x n matrix variety.
inline BoundExpr bound_D(unsigned n) {
    detail::require_matrix_dimension(n);
    Integer n2 = detail::npow(n, 2);
    BoundExpr base = detail::bc(Integer(2 * n2 * (n - 1)));
    BoundExpr expo = detail::bc(Rational(297 * detail::npow(n, 6), 2));
    return BoundExpr::product({detail::bc(Integer(3 * n2)), BoundExpr::power(base, expo)});
}

// C(n^2 + D, D): the coefficient-space dimension entering d1 and d2.
inline BoundExpr binom_nD(unsigned n) {
    detail::require_matrix_dimension(n);
    BoundExpr D = bound_D(n);
    return BoundExpr::binomial(
        BoundExpr::sum({detail::bc(Integer(detail::npow(n, 2))), D}), D);
}

// d1 = (max_i C(C(n^2+D, D), i))^2.
inline BoundExpr bound_d1(unsigned n) {
    return BoundExpr::power(BoundExpr::central_binomial_max(binom_nD(n)), detail::bc(2ULL));
}

// d2 = d1 * D * C(n^2+D, D), kept in exactly this factor order.
inline BoundExpr bound_d2(unsigned n) {
    return BoundExpr::product({bound_d1(n), bound_D(n), binom_nD(n)});
}

// d3 = n * (d2 * (d1^2+1) * (max_i C(d1^2+1, i))^2)^(5.5 n^3).
inline BoundExpr bound_d3(unsigned n) {
    detail::require_matrix_dimension(n);
    BoundExpr d1 = bound_d1(n);
    BoundExpr g = BoundExpr::sum({BoundExpr::power(d1, detail::bc(2ULL)), detail::bc(1ULL)});
    BoundExpr inner = BoundExpr::product(
        {bound_d2(n), g,
         BoundExpr::power(BoundExpr::central_binomial_max(g), detail::bc(2ULL))});
    BoundExpr expo = detail::bc(Rational(11 * detail::npow(n, 3), 2));
    return BoundExpr::product({detail::bc(Integer(n)), BoundExpr::power(inner, expo)});
}

// Index-escape bound J(m) = (sqrt(8m)+1)^(2n^2) - (sqrt(8m)-1)^(2n^2);
// the exponent carries the ambient matrix dimension, the argument is free.
inline BoundExpr schur_J(const BoundExpr& m, unsigned n) {
    if (n < 1) throw std::domain_error("index escape bound: dimension must be positive");
    BoundExpr eight_m = BoundExpr::product({detail::bc(8ULL), m});
    BoundExpr expo = detail::bc(Integer(2 * detail::npow(n, 2)));
    BoundExpr plus = BoundExpr::sqrt_surd(detail::bc(1ULL), detail::bc(1ULL), eight_m);
    BoundExpr minus = BoundExpr::difference(
        BoundExpr::sqrt_surd(detail::bc(0ULL), detail::bc(1ULL), eight_m), detail::bc(1ULL));
    return BoundExpr::difference(BoundExpr::power(plus, expo), BoundExpr::power(minus, expo));
}

// dbar = J((max_i C(d1^2+1, i))^2).
inline BoundExpr bound_dbar(unsigned n) {
    detail::require_matrix_dimension(n);
    BoundExpr d1 = bound_d1(n);
    BoundExpr g = BoundExpr::sum({BoundExpr::power(d1, detail::bc(2ULL)), detail::bc(1ULL)});
    BoundExpr m = BoundExpr::power(BoundExpr::central_binomial_max(g), detail::bc(2ULL));
    return schur_J(m, n);
}

// Output degree and component count of one group-closure step at input
// degree d: d* = (max_i C(C(n^2+d, d), i))^2, n* = d* * d * C(n^2+d, d).
inline std::pair<BoundExpr, BoundExpr> dstar_nstar(unsigned n, const Integer& d) {
    detail::require_matrix_dimension(n);
    if (d < 1) throw std::domain_error("output degree bound: input degree must be at least 1");
    BoundExpr dd = detail::bc(d);
    BoundExpr binom = BoundExpr::binomial(
        BoundExpr::sum({detail::bc(Integer(detail::npow(n, 2))), dd}), dd);
    BoundExpr dstar =
        BoundExpr::power(BoundExpr::central_binomial_max(binom), detail::bc(2ULL));
    BoundExpr nstar = BoundExpr::product({dstar, dd, binom});
    return {std::move(dstar), std::move(nstar)};
}

// Triangular-representation degree bound n * d^(5.5 n^3) for the
// decomposition audit.
inline BoundExpr bound_representation_degree(unsigned n, const Integer& d) {
    detail::require_matrix_dimension(n);
    if (d < 1) throw std::domain_error("representation degree bound: degree must be at least 1");
    BoundExpr expo = detail::bc(Rational(11 * detail::npow(n, 3), 2));
    return BoundExpr::product(
        {detail::bc(Integer(n)), BoundExpr::power(detail::bc(d), expo)});
}

// The Groebner-route reference towers this library's bounds are compared
// against: dtilde <= 32^(2^(2^(2^((2n)^(2^(24 n^2)))))) and
// I(n) <= 4^(2^(2^((2n)^(2^(12 n^2))))).
inline std::pair<BoundExpr, BoundExpr> reference_towers(unsigned n) {
    detail::require_matrix_dimension(n);
    BoundExpr two_n = detail::bc(Integer(2 * Integer(n)));
    BoundExpr core_d = BoundExpr::power(
        two_n, BoundExpr::power(detail::bc(2ULL), detail::bc(Integer(24 * detail::npow(n, 2)))));
    BoundExpr dtilde = BoundExpr::power(
        detail::bc(32ULL),
        BoundExpr::power(detail::bc(2ULL),
                         BoundExpr::power(detail::bc(2ULL),
                                          BoundExpr::power(detail::bc(2ULL), core_d))));
    BoundExpr core_i = BoundExpr::power(
        two_n, BoundExpr::power(detail::bc(2ULL), detail::bc(Integer(12 * detail::npow(n, 2)))));
    BoundExpr count = BoundExpr::power(
        detail::bc(4ULL),
        BoundExpr::power(detail::bc(2ULL), BoundExpr::power(detail::bc(2ULL), core_i)));
    return {std::move(dtilde), std::move(count)};
}

// E_0(t) = t and E_{k+1}(t) = 2^(E_k(t)): the yardstick towers of the
// comparison report.
inline BoundExpr iterated_exp2(unsigned depth, const Rational& top) {
    BoundExpr e = BoundExpr::constant(top);
    for (unsigned i = 0; i < depth; ++i)
        e = BoundExpr::power(BoundExpr::constant(Rational(2)), std::move(e));
    return e;
}

} // namespace ritt::bounds
