#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "ritt/groups/catalog.hpp"
#include "ritt/groups/subgroup.hpp"
#include "ritt/groups/unipotent.hpp"
#include "ritt/io.hpp"

using namespace ritt;
using namespace ritt::groups;
using testsupport::pp;

namespace {

RationalMatrix mat2(long a, long b, long c, long d) {
    return {{Rational(a), Rational(b)}, {Rational(c), Rational(d)}};
}

// invertible 2x2 rational samples, det forced to or away from 1
struct MatrixSampler {
    std::mt19937_64 rng;
    explicit MatrixSampler(unsigned long long seed) : rng(seed) {}

    Rational entry() {
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 3);
        return Rational(num(rng), den(rng));
    }

    std::vector<Rational> special_linear() {
        while (true) {
            Rational a = entry(), b = entry(), c = entry();
            if (a.is_zero()) continue;
            Rational d = (Rational(1) + b * c) / a;
            return {a, b, c, d};
        }
    }

    std::vector<Rational> general_not_special() {
        while (true) {
            Rational a = entry(), b = entry(), c = entry(), d = entry();
            Rational det = a * d - b * c;
            if (det.is_zero() || det == Rational(1)) continue;
            return {a, b, c, d};
        }
    }
};

} // namespace

TEST_CASE("catalog rule tables") {
    REQUIRE(identity_component(SL(2)) == SL(2));
    REQUIRE(identity_component(finite_cyclic(3)) == trivial());
    REQUIRE(identity_component(scalars()) == scalars());

    REQUIRE(character_kernel_intersection(GL(2)) == SL(2));
    REQUIRE(character_kernel_intersection(SL(2)) == SL(2));
    REQUIRE(character_kernel_intersection(scalars()) == trivial());
    REQUIRE(character_kernel_intersection(borel(2)) == unipotent_upper(2));
    REQUIRE(character_kernel_intersection(diagonal_torus(2)) == trivial(2));
    REQUIRE_THROWS_AS(character_kernel_intersection(finite_cyclic(3)), std::domain_error);

    REQUIRE(parse_group("GL(2)") == GL(2));
    REQUIRE(parse_group("FiniteCyclic(3)") == finite_cyclic(3));
    REQUIRE(to_string(borel(3)) == "Borel(3)");
    REQUIRE_THROWS_AS(parse_group("GL"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_group("Sp(4)"), std::invalid_argument);

    // size-1 ambient collapses
    REQUIRE(GL(1) == scalars());
    REQUIRE(SL(1) == trivial());
}

TEST_CASE("proto check reproduces the catalog verdicts") {
    struct Row {
        CatalogGroup candidate;
        CatalogGroup galois;
        bool pass;
        int clause;
    };
    const Row rows[] = {
        {scalars(), finite_cyclic(3), true, 0},
        {finite_cyclic(3), finite_cyclic(3), true, 0},
        {GL(2), SL(2), true, 0},
        {SL(2), SL(2), true, 0},
        {GL(2), unipotent_upper(2), false, 2},
        {SL(2), unipotent_upper(2), false, 2},
        {GL(2), borel(2), false, 2},
        {SL(2), borel(2), false, 1},
    };
    for (const auto& row : rows) {
        auto res = proto_check(row.candidate, row.galois);
        INFO(to_string(row.candidate) << " vs " << to_string(row.galois));
        REQUIRE(res.pass == row.pass);
        REQUIRE(res.failing_clause == row.clause);
        REQUIRE(res.trace.size() >= 1);
    }
}

TEST_CASE("enlarging the candidate never breaks the containment clause") {
    const CatalogGroup chain[] = {unipotent_upper(2), borel(2), GL(2)};
    const CatalogGroup galois_choices[] = {unipotent_upper(2), borel(2), SL(2), GL(2)};
    for (const auto& galois : galois_choices) {
        bool seen_pass = false;
        for (const auto& candidate : chain) {
            bool clause1 = group_contains(galois, candidate);
            if (seen_pass) REQUIRE(clause1);
            if (clause1) seen_pass = true;
        }
    }
}

TEST_CASE("subgroup presentations require the identity matrix") {
    REQUIRE(presentation_SL(2).n() == 2);
    OrderHandle order = matrix_entry_order(2);
    REQUIRE_THROWS_AS(SubgroupPresentation(2, {pp("x11", order)}), std::invalid_argument);
}

TEST_CASE("determinant preimage of the identity subgroup is the special linear group") {
    auto source = presentation_GL(2);
    OrderHandle target_order = matrix_entry_order(1);
    SubgroupPresentation target(1, {pp("x11 - 1", target_order)});
    auto rep = preimage_intersection(source, target, det_homomorphism(2));

    MatrixSampler sampler(41);
    for (int i = 0; i < 50; ++i) {
        REQUIRE(rep.on_zero_set(sampler.special_linear()));
        REQUIRE_FALSE(rep.on_zero_set(sampler.general_not_special()));
    }
    // det - 1 generates the preimage's ideal
    REQUIRE(rep.contains(pp("x11*x22 - x12*x21 - 1", rep.order())));
}

TEST_CASE("preimage with a special linear source changes nothing") {
    auto source = presentation_SL(2);
    OrderHandle target_order = matrix_entry_order(1);
    SubgroupPresentation target(1, {pp("x11 - 1", target_order)});
    auto rep = preimage_intersection(source, target, det_homomorphism(2));
    MatrixSampler sampler(42);
    for (int i = 0; i < 30; ++i) {
        REQUIRE(rep.on_zero_set(sampler.special_linear()));
        REQUIRE_FALSE(rep.on_zero_set(sampler.general_not_special()));
    }
}

TEST_CASE("preimage of the whole target pulls back to the source") {
    auto source = presentation_SL(2);
    SubgroupPresentation target(1, {});
    auto rep = preimage_intersection(source, target, det_homomorphism(2));
    MatrixSampler sampler(43);
    for (int i = 0; i < 30; ++i) REQUIRE(rep.on_zero_set(sampler.special_linear()));
}

TEST_CASE("one-parameter subgroups exponentiate nilpotents") {
    OneParameterUnipotent shift2(mat2(0, 1, 0, 0));
    PolyMatrix m = one_param_subgroup(shift2);
    const OrderHandle& order = m[0][0].order();
    REQUIRE((m[0][0] - pp("1", order)).is_zero());
    REQUIRE((m[0][1] - pp("x", order)).is_zero());
    REQUIRE(m[1][0].is_zero());
    REQUIRE((m[1][1] - pp("1", order)).is_zero());

    OneParameterUnipotent zero2(mat2(0, 0, 0, 0));
    PolyMatrix id = one_param_subgroup(zero2);
    REQUIRE(id[0][1].is_zero());
    REQUIRE((id[0][0] - pp("1", order)).is_zero());

    RationalMatrix shift3{{Rational(0), Rational(1), Rational(0)},
                          {Rational(0), Rational(0), Rational(1)},
                          {Rational(0), Rational(0), Rational(0)}};
    PolyMatrix m3 = one_param_subgroup(OneParameterUnipotent(shift3));
    REQUIRE((m3[0][2] - pp("1/2 * x^2", m3[0][0].order())).is_zero());

    REQUIRE_THROWS_AS(OneParameterUnipotent(mat2(1, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("one-parameter subgroups are unimodular as polynomial matrices") {
    for (const auto& m : {mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(0, 3, 0, 0)}) {
        PolyMatrix p = one_param_subgroup(OneParameterUnipotent(m));
        Polynomial det = poly_matrix_determinant(p);
        REQUIRE((det - Polynomial::constant(det.order(), Rational(1))).is_zero());
    }
}

TEST_CASE("implicitization of the upper unitriangular group") {
    auto rep = unipotent_group_equations({OneParameterUnipotent(mat2(0, 1, 0, 0))});
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> coin(-6, 6);
    for (int i = 0; i < 100; ++i) {
        Rational t(coin(rng));
        REQUIRE(rep.on_zero_set({Rational(1), t, Rational(0), Rational(1)}));
        // perturb one pinned entry to leave the group
        std::vector<Rational> off{Rational(1), t, Rational(0), Rational(1)};
        int which = i % 3;
        Rational bump(coin(rng) * 2 + 1);
        if (which == 0) off[0] = off[0] + bump;
        else if (which == 1) off[2] = off[2] + bump;
        else off[3] = off[3] + bump;
        REQUIRE_FALSE(rep.on_zero_set(off));
    }
}

TEST_CASE("implicitization of the identity point") {
    auto rep = unipotent_group_equations({OneParameterUnipotent(mat2(0, 0, 0, 0))});
    REQUIRE(rep.on_zero_set({Rational(1), Rational(0), Rational(0), Rational(1)}));
    REQUIRE_FALSE(rep.on_zero_set({Rational(1), Rational(1), Rational(0), Rational(1)}));
}

TEST_CASE("products of opposite unipotents satisfy their implicitization") {
    std::vector<OneParameterUnipotent> gens{OneParameterUnipotent(mat2(0, 1, 0, 0)),
                                            OneParameterUnipotent(mat2(0, 0, 1, 0))};
    auto rep = unipotent_group_equations(gens);
    REQUIRE(rep.contains(pp("y11*y22 - y12*y21 - 1", rep.order())));

    std::mt19937_64 rng(45);
    std::uniform_int_distribution<int> coin(-5, 5);
    for (int i = 0; i < 100; ++i) {
        Rational a(coin(rng)), b(coin(rng));
        // u(a) * l(b) = [[1 + a b, a], [b, 1]]
        REQUIRE(rep.on_zero_set({Rational(1) + a * b, a, b, Rational(1)}));
        REQUIRE_FALSE(rep.on_zero_set({Rational(1) + a * b, a, b, Rational(3)}));
    }
}
