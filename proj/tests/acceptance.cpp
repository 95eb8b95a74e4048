// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Budgets and tolerances are pinned here, not configurable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ritt/bounds/chain.hpp"
#include "ritt/bounds/compare.hpp"
#include "ritt/bounds/formulas.hpp"
#include "ritt/decompose.hpp"
#include "ritt/degree_audit.hpp"
#include "ritt/groups/catalog.hpp"
#include "ritt/groups/subgroup.hpp"
#include "ritt/groups/unipotent.hpp"
#include "ritt/io.hpp"

using namespace ritt;
using namespace ritt::groups;
using namespace ritt::bounds;
using testsupport::pp;

namespace {

struct Check {
    bool ok = true;
    std::string reason;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            reason = why;
        }
    }
};

// expressions guaranteed to evaluate exactly, mirrored by a plain
// rational evaluation oracle
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
            return BoundExpr::power(small(), BoundExpr::constant(Rational(ex(rng_))));
        }
        case 4: {
            std::uniform_int_distribution<int> top(0, 10);
            int t = top(rng_);
            std::uniform_int_distribution<int> bot(0, t);
            return BoundExpr::binomial(BoundExpr::constant(Rational(t)),
                                       BoundExpr::constant(Rational(bot(rng_))));
        }
        default: return small();
        }
    }

private:
    BoundExpr small() {
        std::uniform_int_distribution<long long> c(0, 1u << 16);
        return BoundExpr::constant(Rational(c(rng_)));
    }
    std::mt19937_64 rng_;
};

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

void criterion_1(Check& c) {
    OrderHandle order = make_order({"x", "y"});
    c.require(prem(pp("y", order), TriangularSet(order, {pp("x*y", order)})).is_zero(),
              "prem(y, {xy}) != 0");
    Polynomial xy = pp("x*y", order);
    std::vector<Rational> point{Rational(0), Rational(-2)};
    c.require(xy.evaluate(point).is_zero(), "(0,-2) not a zero of xy");
    c.require(pp("y", order).evaluate(point) == Rational(-2), "y(0,-2) != -2");

    TriangularSet two(order, {pp("x", order), pp("x*y", order)});
    c.require(prem(pp("y", order), two).is_zero(), "prem(y, {x,xy}) != 0");
    c.require(prem(pp("y+1", order), two).is_zero(), "prem(y+1, {x,xy}) != 0");
    c.require((prem(pp("-1", order), two) - pp("-1", order)).is_zero(),
              "prem(-1, {x,xy}) != -1");
}

void criterion_2(Check& c) {
    testsupport::QueryGenerator gen(101);
    OrderHandle order = make_order({"x", "y", "z"});
    std::mt19937_64& rng = gen.engine();
    std::uniform_int_distribution<int> member_count(1, 3);
    int built = 0;
    while (built < 1000 && c.ok) {
        std::vector<Polynomial> members;
        int want = member_count(rng);
        for (std::size_t v = 0; v < static_cast<std::size_t>(want); ++v) {
            Polynomial m = gen.random_polynomial(order, 4, 3);
            Polynomial shaped = m + Polynomial::variable(order, v).pow(1 + (built % 3));
            if (shaped.class_index() && *shaped.class_index() == v) members.push_back(shaped);
        }
        if (members.empty() || !is_triangular(members)) continue;
        ++built;
        Polynomial f = gen.random_polynomial(order, 5, 4);
        auto res = pseudo_divide(f, members);
        Polynomial lhs = f;
        for (std::size_t i = 0; i < members.size(); ++i)
            lhs = lhs * members[i].initial().pow(res.initial_exponents[i]);
        Polynomial rhs = res.remainder;
        for (std::size_t i = 0; i < members.size(); ++i)
            rhs = rhs + res.quotients[i] * members[i];
        c.require((lhs - rhs).is_zero(), "identity broke on instance " + std::to_string(built));
        for (const auto& m : members)
            c.require(res.remainder.degree_in(*m.class_index()) < m.degree_in(*m.class_index()),
                      "remainder not reduced on instance " + std::to_string(built));
    }
}

void criterion_3(Check& c) {
    auto oracle = testsupport::curated_oracle();
    c.require(oracle.systems().size() >= 20, "corpus smaller than 20 systems");
    testsupport::QueryGenerator gen(103);
    for (const auto& sys : oracle.systems()) {
        auto rep = decompose({sys.order, sys.generators, {}, DecomposeLimits{}});
        for (const auto& f : gen.query_panel(sys, 200, 4)) {
            bool ours = membership_radical(rep, f);
            bool truth = oracle_membership(oracle, f, sys.order, sys.generators);
            c.require(ours == truth, "membership mismatch in " + sys.name + " on " + to_string(f));
            if (!c.ok) return;
        }
        if (sys.order->size() >= 2) {
            unsigned d = 1;
            for (const auto& g : sys.generators)
                d = std::max(d, g.total_degree());
            auto audit = degree_audit(rep, static_cast<unsigned>(sys.order->size()), d);
            c.require(audit.within, "degree ceiling exceeded in " + sys.name);
        }
    }
}

void criterion_4(Check& c) {
    auto oracle = testsupport::curated_oracle();
    testsupport::QueryGenerator gen(104);
    for (const auto& sys : oracle.systems()) {
        if (sys.order->size() < 2) continue;
        auto rep = decompose({sys.order, sys.generators, {}, DecomposeLimits{}});
        std::size_t per_r = 100 / (sys.order->size() - 1) + 1;
        for (std::size_t r = 1; r < sys.order->size(); ++r) {
            auto low = representation_restrict(rep, r);
            OrderHandle low_order = make_order(std::vector<std::string>(
                sys.order->names().begin(), sys.order->names().begin() + static_cast<long>(r)));
            for (std::size_t i = 0; i < per_r; ++i) {
                Polynomial p = gen.random_polynomial(low_order, 4, 3).reindex(sys.order);
                c.require(rep.contains(p) == low.contains(p),
                          "restriction membership mismatch in " + sys.name);
                if (!c.ok) return;
            }
        }
    }
}

void criterion_5(Check& c) {
    auto source = presentation_GL(2);
    OrderHandle target_order = matrix_entry_order(1);
    SubgroupPresentation target(1, {pp("x11 - 1", target_order)});
    auto rep = preimage_intersection(source, target, det_homomorphism(2));
    MatrixSampler sampler(105);
    for (int i = 0; i < 50; ++i) {
        c.require(rep.on_zero_set(sampler.special_linear()), "special linear sample rejected");
        c.require(!rep.on_zero_set(sampler.general_not_special()),
                  "non special sample accepted");
    }
    c.require(rep.contains(pp("x11*x22 - x12*x21 - 1", rep.order())),
              "det - 1 not in the preimage representation");
}

void criterion_6(Check& c) {
    auto rep = unipotent_group_equations(
        {OneParameterUnipotent({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}})});
    std::mt19937_64 rng(106);
    std::uniform_int_distribution<int> coin(-6, 6);
    for (int i = 0; i < 100; ++i) {
        Rational t(coin(rng));
        c.require(rep.on_zero_set({Rational(1), t, Rational(0), Rational(1)}),
                  "unitriangular sample rejected");
        std::vector<Rational> off{Rational(1), t, Rational(0), Rational(1)};
        Rational bump(coin(rng) * 2 + 1);
        int which = i % 3;
        if (which == 0) off[0] = off[0] + bump;
        else if (which == 1) off[2] = off[2] + bump;
        else off[3] = off[3] + bump;
        c.require(!rep.on_zero_set(off), "non member accepted");
    }
}

void criterion_7(Check& c) {
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
        std::string label = to_string(row.candidate) + " vs " + to_string(row.galois);
        c.require(res.pass == row.pass, "verdict flipped for " + label);
        c.require(res.failing_clause == row.clause, "wrong failing clause for " + label);
    }
}

void criterion_8(Check& c) {
    c.require(check_le(bound_dbar(2), iterated_exp2(4, Rational(18))), "dbar(2) cert failed");
    c.require(check_le(bound_d3(2), iterated_exp2(4, Rational(18))), "d3(2) cert failed");
    auto [dtilde, count] = reference_towers(2);
    c.require(check_le(count, iterated_exp2(5, Rational(96))), "I(2) cert failed");
    c.require(check_le(dtilde, iterated_exp2(6, Rational(194))), "dtilde(2) cert failed");
    c.require(compare(bound_d3(2), dtilde) == Ordering::Less, "d3(2) < dtilde(2) failed");
    c.require(compare(bound_dbar(2), count) == Ordering::Less, "dbar(2) < I(2) failed");

    for (unsigned n : {2u, 3u, 4u})
        for (const auto& step : verify_chain(n))
            c.require(step.ok, "chain step failed at n=" + std::to_string(n) + ": " + step.label);

    auto j = eval_exact(schur_J(BoundExpr::constant(Rational(2)), 2));
    c.require(j.has_value() && *j == Integer(384064), "J spot value wrong");

    Integer independent = Integer(12) * (Integer(1) << 28512);
    auto d = eval_exact(bound_D(2));
    c.require(d.has_value() && *d == independent, "D(2) exact value wrong");
    c.require(d.has_value() && d->str().size() == independent.str().size(),
              "D(2) digit count mismatch");
}

void criterion_9(Check& c) {
    ExactExprGenerator gen(109);
    for (int i = 0; i < 10000 && c.ok; ++i) {
        BoundExpr a = gen.make(3), b = gen.make(3);
        auto va = eval_rational(a), vb = eval_rational(b);
        c.require(va.has_value() && vb.has_value(), "generated pair not exactly evaluable");
        if (!c.ok) break;
        Ordering want =
            *va < *vb ? Ordering::Less : (*va == *vb ? Ordering::Equal : Ordering::Greater);
        c.require(compare(a, b) == want, "comparator disagreed with exact evaluation");
    }
    for (unsigned n : {2u, 3u, 4u})
        for (const auto& step : verify_chain(n))
            c.require(step.verdict.rfind("undecided", 0) != 0,
                      "undecided verdict in chain at n=" + std::to_string(n));
    for (const auto& step : section4_report())
        c.require(step.verdict.rfind("undecided", 0) != 0, "undecided verdict in report");
}

} // namespace

int main() {
    struct Entry {
        int id;
        double budget_seconds;
        void (*fn)(Check&);
    };
    const Entry entries[] = {
        {1, 1.0, criterion_1},   {2, 30.0, criterion_2}, {3, 300.0, criterion_3},
        {4, 300.0, criterion_4}, {5, 60.0, criterion_5}, {6, 60.0, criterion_6},
        {7, 1.0, criterion_7},   {8, 60.0, criterion_8}, {9, 120.0, criterion_9},
    };
    int failures = 0;
    for (const auto& entry : entries) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            entry.fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(elapsed < entry.budget_seconds,
                  "runtime " + std::to_string(elapsed) + "s over budget");
        if (c.ok) {
            std::printf("criterion %d: pass (%.2fs)\n", entry.id, elapsed);
        } else {
            std::printf("criterion %d: fail (%s)\n", entry.id, c.reason.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
