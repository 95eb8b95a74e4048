#pragma once

#include <stdexcept>

#include "ritt/bounds/compare.hpp"
#include "ritt/bounds/formulas.hpp"
#include "ritt/representation.hpp"

namespace ritt {

// Compares the largest total degree in a decomposition output against the
// symbolic ceiling n*d^(5.5*n^3). `within` is an observation, not a proof:
// an audit that fails flags the instance for inspection.
struct DegreeAudit {
    unsigned n;
    unsigned d;
    unsigned observed_max;
    bounds::BoundExpr bound;
    bool within;
};

inline DegreeAudit degree_audit(const TriangularRepresentation& rep, unsigned n, unsigned d) {
    if (n <= 1) throw std::domain_error("degree audit: requires more than one variable");
    unsigned observed = 0;
    for (const auto& comp : rep.components()) {
        for (const auto& f : comp.set.members())
            observed = std::max(observed, f.total_degree());
        for (const auto& q : comp.inequations)
            observed = std::max(observed, q.total_degree());
    }
    bounds::BoundExpr bound =
        bounds::bound_representation_degree(n, Integer(std::max(d, 1u)));
    bool within = bounds::check_le(bounds::BoundExpr::constant(Rational(observed)), bound);
    return DegreeAudit{n, d, observed, std::move(bound), within};
}

} // namespace ritt
