#include <catch_amalgamated.hpp>

#include <random>

#include "ritt/bounds/chain.hpp"
#include "ritt/bounds/compare.hpp"
#include "ritt/bounds/formulas.hpp"

using namespace ritt;
using namespace ritt::bounds;

namespace {

BoundExpr bc(long long v) { return BoundExpr::constant(Rational(v)); }

// Random expressions guaranteed to evaluate exactly: constants combined by
// sum, product, small powers and small binomials.
class ExactExprGenerator {
public:
    explicit ExactExprGenerator(unsigned long long seed) : rng_(seed) {}

    BoundExpr make(unsigned depth) {
        std::uniform_int_distribution<int> kind(0, depth == 0 ? 0 : 4);
        switch (kind(rng_)) {
        case 1: return BoundExpr::sum({make(depth - 1), make(depth - 1)});
        case 2: return BoundExpr::product({make(depth - 1), make(depth - 1)});
        case 3: {
            std::uniform_int_distribution<int> ex(0, 5);
            return BoundExpr::power(small(), bc(ex(rng_)));
        }
        case 4: {
            std::uniform_int_distribution<int> top(0, 10);
            int t = top(rng_);
            std::uniform_int_distribution<int> bot(0, t);
            return BoundExpr::binomial(bc(t), bc(bot(rng_)));
        }
        default: return small();
        }
    }

    Rational value_of(const BoundExpr& e) {
        auto v = eval_rational(e);
        REQUIRE(v.has_value());
        return *v;
    }

private:
    BoundExpr small() {
        std::uniform_int_distribution<long long> c(0, 1u << 16);
        return bc(c(rng_));
    }
    std::mt19937_64 rng_;
};

// exact arithmetic in Z[sqrt(m)] for the surd-difference oracle
struct SurdPair {
    Integer a, b; // a + b*sqrt(m)
};
SurdPair surd_mul(const SurdPair& x, const SurdPair& y, long m) {
    return {x.a * y.a + x.b * y.b * m, x.a * y.b + x.b * y.a};
}
SurdPair surd_pow(SurdPair base, unsigned e, long m) {
    SurdPair acc{1, 0};
    for (; e; e >>= 1) {
        if (e & 1) acc = surd_mul(acc, base, m);
        base = surd_mul(base, base, m);
    }
    return acc;
}

} // namespace

TEST_CASE("flagship exact values") {
    REQUIRE(eval_exact(schur_J(bc(2), 2)) == Integer(384064));
    REQUIRE(eval_exact(BoundExpr::power(bc(2), bc(10))) == Integer(1024));

    auto d2 = eval_exact(bound_D(2));
    REQUIRE(d2.has_value());
    REQUIRE(*d2 == Integer(12) * (Integer(1) << 28512));
    REQUIRE(d2->str().size() == 8585);

    auto [dstar, nstar] = dstar_nstar(2, 1);
    REQUIRE(eval_exact(dstar) == Integer(100));
    REQUIRE(eval_exact(nstar) == Integer(500));
    REQUIRE_THROWS_AS(dstar_nstar(2, 0), std::domain_error);
    REQUIRE_THROWS_AS(bound_D(1), std::domain_error);
}

TEST_CASE("exact evaluation respects the digit budget") {
    REQUIRE_FALSE(eval_exact(bound_D(2), 100).has_value());
    REQUIRE(eval_exact(bound_D(2), 10000).has_value());
    REQUIRE_FALSE(eval_exact(bound_d1(2)).has_value());
    // surds evaluate exactly only for perfect squares
    REQUIRE(eval_exact(BoundExpr::sqrt_surd(bc(1), bc(2), bc(9))) == Integer(7));
    REQUIRE_FALSE(eval_exact(BoundExpr::sqrt_surd(bc(1), bc(2), bc(8))).has_value());
}

TEST_CASE("structural composition of the second published formula") {
    for (unsigned n : {2u, 3u}) {
        BoundExpr composed = BoundExpr::product({bound_d1(n), bound_D(n), binom_nD(n)});
        REQUIRE(structural_equal(normalize(bound_d2(n)), normalize(composed)));
        REQUIRE(compare(bound_d2(n), composed) == Ordering::Equal);
    }
}

TEST_CASE("tower comparisons") {
    REQUIRE(compare(iterated_exp2(4, Rational(18)), iterated_exp2(5, Rational(96))) ==
            Ordering::Less);
    REQUIRE(compare(BoundExpr::power(bc(2), bc(10)), bc(1024)) == Ordering::Equal);
    REQUIRE(check_le(bound_dbar(2), iterated_exp2(4, Rational(18))));
    REQUIRE(check_le(bound_d3(2), iterated_exp2(4, Rational(18))));
    auto [dtilde, count] = reference_towers(2);
    REQUIRE(check_le(count, iterated_exp2(5, Rational(96))));
    REQUIRE(check_le(dtilde, iterated_exp2(6, Rational(194))));
    REQUIRE(compare(bound_d3(2), dtilde) == Ordering::Less);
    REQUIRE(compare(bound_dbar(2), count) == Ordering::Less);
}

TEST_CASE("comparator agrees with exact evaluation") {
    ExactExprGenerator gen(51);
    for (int i = 0; i < 2000; ++i) {
        BoundExpr a = gen.make(3), b = gen.make(3);
        Rational va = gen.value_of(a), vb = gen.value_of(b);
        Ordering got = compare(a, b);
        if (va < vb) REQUIRE(got == Ordering::Less);
        else if (va == vb) REQUIRE(got == Ordering::Equal);
        else REQUIRE(got == Ordering::Greater);
    }
}

TEST_CASE("comparator order axioms") {
    ExactExprGenerator gen(52);
    for (int i = 0; i < 400; ++i) {
        BoundExpr a = gen.make(2), b = gen.make(2), c = gen.make(2);
        Ordering ab = compare(a, b), ba = compare(b, a);
        if (ab == Ordering::Less) REQUIRE(ba == Ordering::Greater);
        if (ab == Ordering::Equal) REQUIRE(ba == Ordering::Equal);
        if (ab == Ordering::Less && compare(b, c) == Ordering::Less)
            REQUIRE(compare(a, c) == Ordering::Less);
    }
}

TEST_CASE("exponentiation is monotone in the exponent") {
    ExactExprGenerator gen(53);
    std::mt19937_64 rng(54);
    std::uniform_int_distribution<int> base(2, 9);
    for (int i = 0; i < 100; ++i) {
        BoundExpr a = gen.make(2), b = gen.make(2);
        if (compare(a, b) != Ordering::Less) continue;
        BoundExpr c = bc(base(rng));
        REQUIRE(compare(BoundExpr::power(c, a), BoundExpr::power(c, b)) == Ordering::Less);
    }
}

TEST_CASE("power rewrites never change verdicts") {
    ExactExprGenerator gen(55);
    std::mt19937_64 rng(56);
    std::uniform_int_distribution<int> small(1, 6);
    for (int i = 0; i < 150; ++i) {
        BoundExpr x = bc(small(rng) + 1);
        BoundExpr a = bc(small(rng)), b = bc(small(rng));
        BoundExpr merged = BoundExpr::power(x, BoundExpr::sum({a, b}));
        BoundExpr split = BoundExpr::product(
            {BoundExpr::power(x, a), BoundExpr::power(x, b)});
        REQUIRE(compare(merged, split) == Ordering::Equal);
        BoundExpr nested = BoundExpr::power(BoundExpr::power(x, a), b);
        BoundExpr flat = BoundExpr::power(x, BoundExpr::product({a, b}));
        REQUIRE(compare(nested, flat) == Ordering::Equal);
        BoundExpr probe = gen.make(2);
        REQUIRE(check_le(probe, merged) == check_le(probe, split));
    }
}

TEST_CASE("surd powers expand to integer pairs") {
    for (long m : {2L, 3L, 5L, 9L, 16L}) {
        for (unsigned k : {1u, 2u, 3u, 5u}) {
            SurdPair plus = surd_pow({1, 1}, 2 * k, m);
            SurdPair minus = surd_pow({1, -1}, 2 * k, m);
            Integer u = plus.a - minus.a;
            Integer v = plus.b - minus.b;
            REQUIRE(u == 0); // (s+1)^2k - (s-1)^2k is an odd function of s
            BoundExpr direct = BoundExpr::difference(
                BoundExpr::power(BoundExpr::sqrt_surd(bc(1), bc(1), bc(m)), bc(2 * k)),
                BoundExpr::power(
                    BoundExpr::difference(BoundExpr::sqrt_surd(bc(1), bc(1), bc(m)), bc(2)),
                    bc(2 * k)));
            BoundExpr pair = BoundExpr::sqrt_surd(bc(0), BoundExpr::constant(Rational(v)),
                                                  bc(m));
            REQUIRE(compare(direct, pair) == Ordering::Equal);
            Integer root;
            if (is_perfect_power(Integer(m), 2, root)) {
                auto exact = eval_exact(direct);
                REQUIRE(exact.has_value());
                SurdPair p2 = surd_pow({root + 1, 0}, 2 * k, m);
                SurdPair m2 = surd_pow({root - 1, 0}, 2 * k, m);
                REQUIRE(*exact == p2.a - m2.a);
            }
        }
    }
}

TEST_CASE("the full derivation holds step by step") {
    auto steps = verify_chain(2);
    REQUIRE_FALSE(steps.empty());
    for (const auto& s : steps) {
        INFO(s.label << " -> " << s.verdict);
        REQUIRE(s.ok);
    }
    for (const auto& s : section4_report()) {
        INFO(s.label << " -> " << s.verdict);
        REQUIRE(s.ok);
    }
}

TEST_CASE("euler constant is pinned to a rational interval") {
    BoundExpr e = BoundExpr::euler_e();
    REQUIRE(check_le(e, BoundExpr::constant(Rational(2718282, 1000000))));
    REQUIRE(check_le(BoundExpr::constant(Rational(2718281, 1000000)), e));
    REQUIRE_THROWS_AS(compare(e, BoundExpr::constant(Rational(27182815, 10000000))),
                      undecided_error);
}

TEST_CASE("printable tower estimates stay on the bounding side") {
    REQUIRE(to_string(tower_estimate(iterated_exp2(4, Rational(18)), Dir::Up)) ==
            "2^2^2^2^(18)");
    BoundExpr d = bound_D(2);
    TowerForm up = tower_estimate(d, Dir::Up);
    REQUIRE(up.depth == 1);
    REQUIRE(up.top == Rational(28516));
    TowerForm down = tower_estimate(d, Dir::Down);
    REQUIRE(down.depth == 1);
    REQUIRE(down.top <= Rational(28516));
    REQUIRE(check_le(d, iterated_exp2(up.depth, up.top)));
    REQUIRE(check_le(iterated_exp2(down.depth, down.top), d));
}
