#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ritt/bounds/compare.hpp"
#include "ritt/bounds/formulas.hpp"

namespace ritt::bounds {

// One checked inequality of the bound derivation.
struct ChainStep {
    std::string label;
    std::string verdict; // "holds", "fails", or "undecided: <reason>"
    bool ok = false;
};

namespace detail {

inline ChainStep run_le_step(std::string label, const BoundExpr& a, const BoundExpr& b,
                             std::size_t digit_limit) {
    ChainStep s{std::move(label), "", false};
    try {
        s.ok = check_le(a, b, digit_limit);
        s.verdict = s.ok ? "holds" : "fails";
    } catch (const undecided_error& ex) {
        s.verdict = std::string("undecided: ") + ex.what();
    }
    return s;
}

inline ChainStep run_eq_step(std::string label, const BoundExpr& a, const BoundExpr& b,
                             std::size_t digit_limit) {
    ChainStep s{std::move(label), "", false};
    try {
        s.ok = compare(a, b, digit_limit) == Ordering::Equal;
        s.verdict = s.ok ? "holds" : "fails";
    } catch (const undecided_error& ex) {
        s.verdict = std::string("undecided: ") + ex.what();
    }
    return s;
}

} // namespace detail

// Replays the printed derivation of D, d1, d2, d3, dbar one inequality at
// a time, each step decided by the comparator. In the labels X stands for
// (2n^3)^(149*n^8), Q for 3n^2*18^(n^2)*(2n^3)^(148.5*(n^8+n^6)), and R
// for (2n^3)^(149*(n^8+n^6)).
inline std::vector<ChainStep> verify_chain(unsigned n,
                                           std::size_t digit_limit = default_digit_limit()) {
    detail::require_matrix_dimension(n);
    using detail::bc;
    const Integer n2 = detail::npow(n, 2);
    const Integer n3 = detail::npow(n, 3);
    const Integer n6 = detail::npow(n, 6);
    const Integer n8 = detail::npow(n, 8);
    const Rational h6(297 * n6, 2);  // 148.5 n^6
    const Rational h8(297 * n8, 2);  // 148.5 n^8
    const Rational hs(297 * (n8 + n6), 2);
    const Rational p53(11 * n3, 2);  // 5.5 n^3

    BoundExpr e = BoundExpr::euler_e();
    BoundExpr two = bc(2ULL);
    BoundExpr four = bc(4ULL);
    BoundExpr cn = bc(Integer(n));
    BoundExpr cn2 = bc(n2);
    BoundExpr twoN3 = bc(Integer(2 * n3));

    // The defined quantities, shared across steps.
    BoundExpr D = bound_D(n);
    BoundExpr B = BoundExpr::binomial(BoundExpr::sum({cn2, D}), D);
    BoundExpr d1e = BoundExpr::power(BoundExpr::central_binomial_max(B), bc(2ULL));
    BoundExpr d2e = BoundExpr::product({d1e, D, B});
    BoundExpr g = BoundExpr::sum({BoundExpr::power(d1e, bc(2ULL)), bc(1ULL)});
    BoundExpr maxCg2 = BoundExpr::power(BoundExpr::central_binomial_max(g), bc(2ULL));
    BoundExpr d3e =
        BoundExpr::product({cn, BoundExpr::power(BoundExpr::product({d2e, g, maxCg2}), bc(p53))});
    BoundExpr dbar_e = schur_J(maxCg2, n);

    // Right-hand building blocks.
    BoundExpr X = BoundExpr::power(twoN3, bc(Integer(149 * n8)));
    BoundExpr f4x = BoundExpr::power(four, X);
    BoundExpr t16 = BoundExpr::power(bc(16ULL), X);
    BoundExpr t16p1 = BoundExpr::sum({t16, bc(1ULL)});
    BoundExpr f4t1 = BoundExpr::power(four, t16p1);
    BoundExpr f4t = BoundExpr::power(four, t16);
    BoundExpr p18 = BoundExpr::power(bc(18ULL), cn2);
    BoundExpr Q = BoundExpr::product({bc(Integer(3 * n2)), p18, BoundExpr::power(twoN3, bc(hs))});
    BoundExpr R = BoundExpr::power(twoN3, bc(Integer(149 * (n8 + n6))));
    BoundExpr e8x = BoundExpr::power(bc(8ULL), X);
    BoundExpr surd32 = BoundExpr::sqrt_surd(bc(0ULL), bc(1ULL), bc(32ULL));
    BoundExpr scale32 = BoundExpr::product({surd32, BoundExpr::power(two, e8x)});
    BoundExpr c2n2 = bc(Integer(2 * n2));

    BoundExpr s1_rhs = BoundExpr::product({bc(Integer(3 * n2)), BoundExpr::power(twoN3, bc(h6))});
    BoundExpr s2a_rhs = BoundExpr::power(
        BoundExpr::product({e, BoundExpr::sum({cn2, D}), bc(Rational(1, n2))}), cn2);
    BoundExpr s2b_rhs = BoundExpr::power(
        BoundExpr::sum({e, BoundExpr::product({bc(3ULL), e, BoundExpr::power(twoN3, bc(h6))})}),
        cn2);
    BoundExpr s2c_rhs = BoundExpr::product({p18, BoundExpr::power(twoN3, bc(h8))});
    BoundExpr s3a_rhs = BoundExpr::power(BoundExpr::power(two, B), bc(2ULL));
    BoundExpr s3b_rhs = BoundExpr::power(BoundExpr::power(two, s2c_rhs), bc(2ULL));
    BoundExpr s3c_rhs = BoundExpr::power(BoundExpr::power(two, X), bc(2ULL));
    BoundExpr s4_rhs = BoundExpr::product({f4x, bc(Integer(3 * n2)),
                                           BoundExpr::power(twoN3, bc(h6)), p18,
                                           BoundExpr::power(twoN3, bc(h8))});
    BoundExpr s4b_rhs = BoundExpr::product({Q, f4x});
    BoundExpr s5a_rhs =
        BoundExpr::product({cn, BoundExpr::power(BoundExpr::product({Q, f4x, t16p1, f4t1}),
                                                 bc(p53))});
    BoundExpr s5b_rhs =
        BoundExpr::product({cn, BoundExpr::power(BoundExpr::product({R, f4x, t16p1, f4t1}),
                                                 bc(p53))});
    BoundExpr s5c_rhs = BoundExpr::product(
        {cn, BoundExpr::power(BoundExpr::product({bc(2ULL), R, f4x, t16, f4t1}), bc(p53))});
    BoundExpr s5d_rhs = BoundExpr::product(
        {cn, BoundExpr::power(BoundExpr::product({bc(8ULL), R, f4x, t16, f4t}), bc(p53))});
    BoundExpr s5e_rhs =
        BoundExpr::product({cn, BoundExpr::power(BoundExpr::power(bc(8ULL), t16), bc(p53))});
    BoundExpr s5f_rhs = BoundExpr::product(
        {cn, BoundExpr::power(bc(8ULL), BoundExpr::product({bc(p53), t16}))});
    BoundExpr s6a_rhs = schur_J(BoundExpr::power(four, g), n);
    BoundExpr s6b_rhs = BoundExpr::difference(
        BoundExpr::power(BoundExpr::sum({scale32, bc(1ULL)}), c2n2),
        BoundExpr::power(BoundExpr::difference(scale32, bc(1ULL)), c2n2));
    BoundExpr s6c_rhs =
        BoundExpr::power(BoundExpr::product({two, surd32, BoundExpr::power(two, e8x)}), c2n2);
    BoundExpr s6d_rhs = BoundExpr::product(
        {BoundExpr::power(two, bc(Integer(10 * n2))),
         BoundExpr::power(four, BoundExpr::product({cn2, e8x}))});

    std::vector<ChainStep> steps;
    auto le = [&](const char* label, const BoundExpr& a, const BoundExpr& b) {
        steps.push_back(detail::run_le_step(label, a, b, digit_limit));
    };
    auto eq = [&](const char* label, const BoundExpr& a, const BoundExpr& b) {
        steps.push_back(detail::run_eq_step(label, a, b, digit_limit));
    };

    le("D <= 3n^2*(2n^3)^(148.5*n^6)", D, s1_rhs);
    le("C(n^2+D, D) <= (e*(n^2+D)/n^2)^(n^2)", B, s2a_rhs);
    le("(e*(n^2+D)/n^2)^(n^2) <= (e + 3e*(2n^3)^(148.5*n^6))^(n^2)", s2a_rhs, s2b_rhs);
    le("(e + 3e*(2n^3)^(148.5*n^6))^(n^2) <= 18^(n^2)*(2n^3)^(148.5*n^8)", s2b_rhs, s2c_rhs);
    le("d1 <= (2^C(n^2+D, D))^2", d1e, s3a_rhs);
    le("(2^C(n^2+D, D))^2 <= (2^(18^(n^2)*(2n^3)^(148.5*n^8)))^2", s3a_rhs, s3b_rhs);
    le("(2^(18^(n^2)*(2n^3)^(148.5*n^8)))^2 <= (2^X)^2", s3b_rhs, s3c_rhs);
    eq("(2^X)^2 = 4^X", s3c_rhs, f4x);
    le("d2 <= 4^X*3n^2*(2n^3)^(148.5*n^6)*18^(n^2)*(2n^3)^(148.5*n^8)", d2e, s4_rhs);
    eq("4^X*3n^2*(2n^3)^(148.5*n^6)*18^(n^2)*(2n^3)^(148.5*n^8) = Q*4^X", s4_rhs, s4b_rhs);
    le("d3 <= n*(Q*4^X*(16^X+1)*4^(16^X+1))^(5.5*n^3)", d3e, s5a_rhs);
    le("n*(Q*4^X*(16^X+1)*4^(16^X+1))^(5.5*n^3) <= n*(R*4^X*(16^X+1)*4^(16^X+1))^(5.5*n^3)",
       s5a_rhs, s5b_rhs);
    le("n*(R*4^X*(16^X+1)*4^(16^X+1))^(5.5*n^3) <= n*(2*R*4^X*16^X*4^(16^X+1))^(5.5*n^3)",
       s5b_rhs, s5c_rhs);
    eq("n*(2*R*4^X*16^X*4^(16^X+1))^(5.5*n^3) = n*(8*R*4^X*16^X*4^(16^X))^(5.5*n^3)",
       s5c_rhs, s5d_rhs);
    le("n*(8*R*4^X*16^X*4^(16^X))^(5.5*n^3) <= n*(8^(16^X))^(5.5*n^3)", s5d_rhs, s5e_rhs);
    eq("n*(8^(16^X))^(5.5*n^3) = n*8^(5.5*n^3*16^X)", s5e_rhs, s5f_rhs);
    le("d3 <= n*8^(5.5*n^3*16^X)", d3e, s5f_rhs);
    le("dbar <= (sqrt(8*4^(d1^2+1))+1)^(2*n^2) - (sqrt(8*4^(d1^2+1))-1)^(2*n^2)", dbar_e,
       s6a_rhs);
    le("(sqrt(8*4^(d1^2+1))+1)^(2*n^2) - (sqrt(8*4^(d1^2+1))-1)^(2*n^2) <= "
       "(sqrt(32)*2^(8^X)+1)^(2*n^2) - (sqrt(32)*2^(8^X)-1)^(2*n^2)",
       s6a_rhs, s6b_rhs);
    le("(sqrt(32)*2^(8^X)+1)^(2*n^2) - (sqrt(32)*2^(8^X)-1)^(2*n^2) <= "
       "(2*sqrt(32)*2^(8^X))^(2*n^2)",
       s6b_rhs, s6c_rhs);
    le("(2*sqrt(32)*2^(8^X))^(2*n^2) <= 2^(10*n^2)*4^(n^2*8^X)", s6c_rhs, s6d_rhs);
    le("dbar <= 2^(10*n^2)*4^(n^2*8^X)", dbar_e, s6d_rhs);

    return steps;
}

// The headline comparisons at n = 2: this derivation's towers against
// their depth-4 yardstick, the reference towers against theirs, and the
// cross comparisons showing the improvement.
inline std::vector<ChainStep> section4_report(std::size_t digit_limit = default_digit_limit()) {
    const unsigned n = 2;
    auto [dtilde, count] = reference_towers(n);
    BoundExpr d3 = bound_d3(n);
    BoundExpr dbar = bound_dbar(n);

    std::vector<ChainStep> rows;
    rows.push_back(detail::run_le_step("d3(2) <= 2^2^2^2^18", d3, iterated_exp2(4, Rational(18)),
                                       digit_limit));
    rows.push_back(detail::run_le_step("dbar(2) <= 2^2^2^2^18", dbar,
                                       iterated_exp2(4, Rational(18)), digit_limit));
    rows.push_back(detail::run_le_step("I(2) <= 2^2^2^2^2^96", count,
                                       iterated_exp2(5, Rational(96)), digit_limit));
    rows.push_back(detail::run_le_step("dtilde(2) <= 2^2^2^2^2^2^194", dtilde,
                                       iterated_exp2(6, Rational(194)), digit_limit));

    auto lt = [&](const char* label, const BoundExpr& a, const BoundExpr& b) {
        ChainStep s{label, "", false};
        try {
            s.ok = compare(a, b, digit_limit) == Ordering::Less;
            s.verdict = s.ok ? "holds" : "fails";
        } catch (const undecided_error& ex) {
            s.verdict = std::string("undecided: ") + ex.what();
        }
        rows.push_back(std::move(s));
    };
    lt("d3(2) < dtilde(2)", d3, dtilde);
    lt("dbar(2) < I(2)", dbar, count);
    return rows;
}

} // namespace ritt::bounds
