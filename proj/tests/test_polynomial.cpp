#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "ritt/io.hpp"
#include "ritt/pseudo_division.hpp"
#include "ritt/triangular.hpp"

using namespace ritt;
using testsupport::pp;

namespace {
OrderHandle xy() { return make_order({"x", "y"}); }
OrderHandle xyz() { return make_order({"x", "y", "z"}); }
} // namespace

TEST_CASE("parsing and printing round trip") {
    OrderHandle order = xyz();
    for (const char* text : {"2*x^2*y - 1/3", "x", "-x + y - z", "0", "5", "x*y*z",
                             "3/4*x^4 - 2*y^2 + 7", "x^2 - 2*x*y + y^2"}) {
        Polynomial f = pp(text, order);
        Polynomial again = pp(to_string(f), order);
        REQUIRE(to_string(again) == to_string(f));
        REQUIRE((again - f).is_zero());
    }
}

TEST_CASE("parser accepts implicit multiplication spacing and comments") {
    PolynomialSystem sys = parse_system("# heading\nvars: x, y\n2x^2y - 1 # inline\n!= y\n");
    REQUIRE(sys.order->size() == 2);
    REQUIRE(sys.equations.size() == 1);
    REQUIRE(sys.inequations.size() == 1);
    REQUIRE((sys.equations[0] - pp("2*x^2*y - 1", sys.order)).is_zero());
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_system("vars: x\nx^^2\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        REQUIRE(e.line() == 2);
        REQUIRE(e.column() > 0);
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_system("x + 1\n"), parse_error);
    REQUIRE_THROWS_AS(parse_system("vars: x\ny\n"), parse_error);
    REQUIRE_THROWS_AS(parse_system(""), parse_error);
}

TEST_CASE("ring axioms hold exactly on random triples") {
    testsupport::QueryGenerator gen(11);
    OrderHandle order = xyz();
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = gen.random_polynomial(order, 3, 3);
        Polynomial b = gen.random_polynomial(order, 3, 3);
        Polynomial c = gen.random_polynomial(order, 3, 3);
        REQUIRE(((a + b) - (b + a)).is_zero());
        REQUIRE((a * b - b * a).is_zero());
        REQUIRE(((a + b) + c - (a + (b + c))).is_zero());
        REQUIRE(((a * b) * c - (a * (b * c))).is_zero());
        REQUIRE((a * (b + c) - (a * b + a * c)).is_zero());
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    testsupport::QueryGenerator gen(12);
    OrderHandle order = xyz();
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = gen.random_polynomial(order, 3, 3);
        Polynomial b = gen.random_polynomial(order, 3, 3);
        std::vector<Rational> point{gen.small_rational(), gen.small_rational(),
                                    gen.small_rational()};
        REQUIRE((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
        REQUIRE((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
    }
}

TEST_CASE("the zero of x*y that x*y's rep misses") {
    OrderHandle order = xy();
    Polynomial g = pp("x*y", order);
    std::vector<Rational> point{Rational(0), Rational(-2)};
    REQUIRE(g.evaluate(point).is_zero());
    REQUIRE(pp("y", order).evaluate(point) == Rational(-2));
}

TEST_CASE("simple sums collapse") {
    OrderHandle order = xy();
    REQUIRE((pp("x+y", order) + pp("x-y", order) - pp("2*x", order)).is_zero());
}

TEST_CASE("pseudo remainder flagship values") {
    OrderHandle order = xy();
    Polynomial y = pp("y", order);
    REQUIRE(prem(y, {pp("x*y", order)}).is_zero());
    REQUIRE((prem(y, std::vector<Polynomial>{}) - y).is_zero());
    std::vector<Polynomial> g{pp("x", order), pp("x*y", order)};
    REQUIRE(prem(pp("y+1", order), g).is_zero());
    REQUIRE((prem(pp("-1", order), g) - pp("-1", order)).is_zero());
}

TEST_CASE("pseudo division worked examples") {
    OrderHandle order = xy();
    auto r1 = pseudo_divide(pp("y", order), {pp("x*y", order)});
    REQUIRE(r1.remainder.is_zero());
    REQUIRE(r1.quotients.size() == 1);
    REQUIRE(r1.initial_exponents == std::vector<unsigned>{1});

    OrderHandle just_x = make_order({"x"});
    auto r2 = pseudo_divide(pp("x^3", just_x), {pp("x^2 - 1", just_x)});
    REQUIRE((r2.remainder - pp("x", just_x)).is_zero());
    REQUIRE((r2.quotients[0] - pp("x", just_x)).is_zero());

    auto r3 = pseudo_divide(pp("7", order), {pp("x^2 - 1", order), pp("x*y", order)});
    REQUIRE((r3.remainder - pp("7", order)).is_zero());
}

TEST_CASE("pseudo division identity on random instances") {
    testsupport::QueryGenerator gen(13);
    OrderHandle order = xyz();
    std::mt19937_64& rng = gen.engine();
    std::uniform_int_distribution<int> member_count(1, 3);
    int built = 0;
    while (built < 300) {
        std::vector<Polynomial> members;
        int want = member_count(rng);
        for (std::size_t v = 0; v < static_cast<std::size_t>(want); ++v) {
            Polynomial m = gen.random_polynomial(order, 4, 3);
            // force class v so the set is triangular
            Polynomial shaped =
                m + Polynomial::variable(order, v).pow(1 + (built % 3));
            if (shaped.class_index() && *shaped.class_index() == v) members.push_back(shaped);
        }
        if (members.empty() || !is_triangular(members)) continue;
        ++built;
        Polynomial f = gen.random_polynomial(order, 5, 4);
        auto res = pseudo_divide(f, members);
        // re-expand: prod(initial^alpha) * f == sum quotient*member + remainder
        Polynomial lhs = f;
        for (std::size_t i = 0; i < members.size(); ++i)
            lhs = lhs * members[i].initial().pow(res.initial_exponents[i]);
        Polynomial rhs = res.remainder;
        for (std::size_t i = 0; i < members.size(); ++i)
            rhs = rhs + res.quotients[i] * members[i];
        REQUIRE((lhs - rhs).is_zero());
        // remainder is reduced and prem is idempotent
        for (const auto& m : members) {
            auto cls = m.class_index();
            REQUIRE(res.remainder.degree_in(*cls) < m.degree_in(*cls));
        }
        REQUIRE((prem(res.remainder, members) - res.remainder).is_zero());
    }
}

TEST_CASE("triangularity recognizer") {
    OrderHandle order = xy();
    REQUIRE(is_triangular({pp("x", order), pp("x*y", order)}));
    REQUIRE_FALSE(is_triangular({pp("x*y", order), pp("x", order)}));
    OrderHandle just_x = make_order({"x"});
    REQUIRE_FALSE(is_triangular({pp("x^2 - 1", just_x), pp("x^3", just_x)}));
    REQUIRE_FALSE(is_triangular({pp("5", order)}));
    REQUIRE(is_triangular({}));
}

TEST_CASE("non-triangular divisor lists are rejected") {
    OrderHandle order = xy();
    REQUIRE_THROWS_AS(prem(pp("y", order), {pp("x*y", order), pp("x", order)}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(TriangularSet(order, {pp("3", order)}), std::invalid_argument);
}
