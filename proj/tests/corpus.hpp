// Curated polynomial systems with complete, hand-declared zero sets, plus
// the deterministic generators the tests draw queries from. Every system
// keeps to at most 3 variables and degree at most 4 so the declared
// points and sheets really are the whole zero set over the closure.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "ritt/io.hpp"
#include "ritt/zero_oracle.hpp"

namespace testsupport {

using ritt::CuratedSystem;
using ritt::OracleSheet;
using ritt::OrderHandle;
using ritt::Polynomial;
using ritt::QuadExt;
using ritt::Rational;
using ritt::ZeroOracle;

inline Polynomial pp(const std::string& text, const OrderHandle& order) {
    return ritt::parse_polynomial(text, order, 1);
}

inline std::vector<Polynomial> pps(std::initializer_list<const char*> texts,
                                   const OrderHandle& order) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(pp(t, order));
    return out;
}

inline QuadExt q(long v) { return QuadExt(Rational(v)); }
inline QuadExt surd(long b, long m) { return QuadExt(Rational(0), Rational(b), ritt::Integer(m)); }

// Sheets are declared over their own parameter variables; one for curves,
// two for surfaces.
inline OracleSheet sheet(std::initializer_list<const char*> coords,
                         std::initializer_list<const char*> params) {
    OrderHandle order = ritt::make_order(std::vector<std::string>(params.begin(), params.end()));
    OracleSheet s;
    for (const char* c : coords) s.coordinates.push_back(pp(c, order));
    return s;
}

inline ZeroOracle curated_oracle() {
    ZeroOracle oracle;
    auto add = [&](const char* name, std::initializer_list<const char*> vars,
                   std::initializer_list<const char*> gens,
                   std::vector<std::vector<QuadExt>> points, std::vector<OracleSheet> sheets) {
        CuratedSystem sys;
        sys.name = name;
        sys.order = ritt::make_order(vars);
        sys.generators = pps(gens, sys.order);
        sys.points = std::move(points);
        sys.sheets = std::move(sheets);
        oracle.register_system(std::move(sys));
    };

    add("two-rational-roots", {"x"}, {"(x-1)*(x+2)"}, {{q(1)}, {q(-2)}}, {});
    add("surd-pair", {"x"}, {"x^2 - 2"}, {{surd(1, 2)}, {surd(-1, 2)}}, {});
    add("triple-root", {"x"}, {"x^3"}, {{q(0)}}, {});
    add("cubic-mixed-roots", {"x"}, {"(x^2-2)*(x-3)"}, {{surd(1, 2)}, {surd(-1, 2)}, {q(3)}}, {});
    add("quartic-two-pairs", {"x"}, {"x^4 - 5*x^2 + 4"}, {{q(1)}, {q(-1)}, {q(2)}, {q(-2)}}, {});
    add("quartic-surd-pairs", {"x"}, {"(x^2-2)*(x^2-9)"},
        {{surd(1, 2)}, {surd(-1, 2)}, {q(3)}, {q(-3)}}, {});
    add("coordinate-axes", {"x", "y"}, {"x*y"}, {}, {sheet({"0", "t"}, {"t"}), sheet({"t", "0"}, {"t"})});
    add("parabola", {"x", "y"}, {"y - x^2"}, {}, {sheet({"t", "t^2"}, {"t"})});
    add("shifted-parabola", {"x", "y"}, {"y - x^2 - 1"}, {}, {sheet({"t", "t^2 + 1"}, {"t"})});
    add("line-and-point", {"x", "y"}, {"x*(y-1)", "x*(x-2)"}, {{q(2), q(1)}},
        {sheet({"0", "t"}, {"t"})});
    add("crossing-lines", {"x", "y"}, {"(y-x)*(y+x)"}, {},
        {sheet({"t", "t"}, {"t"}), sheet({"t", "0 - t"}, {"t"})});
    add("cuspidal-cubic", {"x", "y"}, {"y^2 - x^3"}, {}, {sheet({"t^2", "t^3"}, {"t"})});
    add("double-line", {"x", "y"}, {"(y-x)^2"}, {}, {sheet({"t", "t"}, {"t"})});
    add("parabola-or-line", {"x", "y"}, {"(y - x^2)*(y - 1)"}, {},
        {sheet({"t", "t^2"}, {"t"}), sheet({"t", "1"}, {"t"})});
    add("finite-grid", {"x", "y"}, {"(x-1)*(x+1)", "(y-2)*(y+2)"},
        {{q(1), q(2)}, {q(1), q(-2)}, {q(-1), q(2)}, {q(-1), q(-2)}}, {});
    add("surd-diagonal", {"x", "y"}, {"x^2 - 3", "y - x"},
        {{surd(1, 3), surd(1, 3)}, {surd(-1, 3), surd(-1, 3)}}, {});
    add("opposite-parabolas", {"x", "y"}, {"(y - x^2)*(y + x^2)"}, {},
        {sheet({"t", "t^2"}, {"t"}), sheet({"t", "0 - t^2"}, {"t"})});
    add("diagonal-pair", {"x", "y"}, {"x^2 - 1", "y - x"}, {{q(1), q(1)}, {q(-1), q(-1)}}, {});
    add("twisted-cubic", {"x", "y", "z"}, {"y - x^2", "z - x^3"}, {},
        {sheet({"t", "t^2", "t^3"}, {"t"})});
    add("plane-in-space", {"x", "y", "z"}, {"z"}, {}, {sheet({"s", "t", "0"}, {"s", "t"})});
    add("line-in-space", {"x", "y", "z"}, {"y - x", "z - 2*x"}, {},
        {sheet({"t", "t", "2*t"}, {"t"})});
    add("plane-or-point", {"x", "y", "z"}, {"x*(x-1)", "x*y", "x*z"}, {{q(1), q(0), q(0)}},
        {sheet({"0", "s", "t"}, {"s", "t"})});
    add("graph-surface-curve", {"x", "y", "z"}, {"y - x^2", "z - x*y"}, {},
        {sheet({"t", "t^2", "t^3"}, {"t"})});
    add("three-axes", {"x", "y", "z"}, {"x*y", "x*z", "y*z"}, {},
        {sheet({"t", "0", "0"}, {"t"}), sheet({"0", "t", "0"}, {"t"}),
         sheet({"0", "0", "t"}, {"t"})});
    add("origin-only", {"x", "y", "z"}, {"x", "y", "z"}, {{q(0), q(0), q(0)}}, {});
    add("inconsistent-pair", {"x"}, {"x", "x - 1"}, {}, {});
    return oracle;
}

// Deterministic low-degree query polynomials; the panel mixes products of
// the system's own generators (members by construction) with free terms.
class QueryGenerator {
public:
    explicit QueryGenerator(unsigned long long seed) : rng_(seed) {}

    Rational small_rational() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        return Rational(num(rng_), den(rng_));
    }

    Polynomial random_polynomial(const OrderHandle& order, unsigned max_degree,
                                 unsigned max_terms) {
        std::uniform_int_distribution<unsigned> nterms(1, max_terms);
        std::uniform_int_distribution<unsigned> expo(0, max_degree);
        Polynomial out = Polynomial::zero(order);
        unsigned t = nterms(rng_);
        for (unsigned k = 0; k < t; ++k) {
            Polynomial term = Polynomial::constant(order, small_rational());
            unsigned budget = max_degree;
            for (std::size_t v = 0; v < order->size(); ++v) {
                unsigned e = expo(rng_) % (budget + 1);
                budget -= e;
                if (e) term = term * Polynomial::variable(order, v).pow(e);
            }
            out = out + term;
        }
        return out;
    }

    // Half the panel vanishes on the zero set by construction: a generator
    // scaled by a random polynomial. The other half is unconstrained.
    std::vector<Polynomial> query_panel(const CuratedSystem& sys, std::size_t count,
                                        unsigned max_degree) {
        std::vector<Polynomial> panel;
        std::uniform_int_distribution<std::size_t> pick(0, sys.generators.size() - 1);
        for (std::size_t i = 0; i < count; ++i) {
            if (i % 2 == 0 && !sys.generators.empty()) {
                Polynomial f = sys.generators[pick(rng_)];
                unsigned slack = f.total_degree() < max_degree
                                     ? max_degree - f.total_degree()
                                     : 0;
                panel.push_back(f * random_polynomial(sys.order, slack, 2));
            } else {
                panel.push_back(random_polynomial(sys.order, max_degree, 4));
            }
        }
        return panel;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace testsupport
