#pragma once

#include <algorithm>
#include <vector>

#include "ritt/triangular.hpp"

namespace ritt {

// Triangular set with side conditions asserting the listed polynomials are
// nonzero on the component (initials of members, denominators, task
// inequations). The membership predicate of a representation ignores the
// inequations; they describe the quasi-component's zero set.
struct QuasiComponent {
    TriangularSet set;
    std::vector<Polynomial> inequations;

    QuasiComponent(TriangularSet s, std::vector<Polynomial> ineqs = {})
        : set(std::move(s)), inequations(std::move(ineqs)) {
        for (const auto& q : inequations)
            if (!same_order(q.order(), set.order()))
                throw std::invalid_argument("quasi-component: inequation has foreign order");
    }

    friend bool operator==(const QuasiComponent& a, const QuasiComponent& b) {
        return a.set == b.set && a.inequations == b.inequations;
    }
};

inline int compare_components(const QuasiComponent& a, const QuasiComponent& b) {
    const auto& ma = a.set.members();
    const auto& mb = b.set.members();
    for (std::size_t i = 0; i < std::min(ma.size(), mb.size()); ++i) {
        if (int c = compare_rank(ma[i], mb[i])) return c;
    }
    if (ma.size() != mb.size()) return ma.size() < mb.size() ? -1 : 1;
    for (std::size_t i = 0; i < std::min(a.inequations.size(), b.inequations.size()); ++i) {
        if (int c = compare_rank(a.inequations[i], b.inequations[i])) return c;
    }
    if (a.inequations.size() != b.inequations.size())
        return a.inequations.size() < b.inequations.size() ? -1 : 1;
    return 0;
}

// Finite family of quasi-components describing the radical of an ideal as
// the intersection of the components' reps. Conventions:
//   - the empty family denotes the radical of <0>: membership holds only
//     for the zero polynomial, and the zero set is the whole space;
//   - the unit flag denotes the unit ideal (inconsistent system): every
//     polynomial is a member and the zero set is empty.
class TriangularRepresentation {
public:
    explicit TriangularRepresentation(OrderHandle order)
        : order_(std::move(order)) {
        if (!order_) throw std::invalid_argument("representation: null order");
    }

    TriangularRepresentation(OrderHandle order, std::vector<QuasiComponent> components)
        : order_(std::move(order)), components_(std::move(components)) {
        if (!order_) throw std::invalid_argument("representation: null order");
        for (const auto& c : components_)
            if (!same_order(c.set.order(), order_))
                throw std::invalid_argument("representation: component has foreign order");
    }

    static TriangularRepresentation unit(OrderHandle order) {
        TriangularRepresentation r(std::move(order));
        r.unit_ = true;
        return r;
    }

    const OrderHandle& order() const { return order_; }
    const std::vector<QuasiComponent>& components() const { return components_; }
    bool is_unit() const { return unit_; }
    bool empty_family() const { return !unit_ && components_.empty(); }

    // f lies in the represented radical ideal.
    bool contains(const Polynomial& f) const {
        if (!same_order(f.order(), order_))
            throw std::invalid_argument("representation: query has foreign order");
        if (unit_) return true;
        if (components_.empty()) return f.is_zero();
        for (const auto& c : components_)
            if (!prem(f, c.set).is_zero()) return false;
        return true;
    }

    // The point lies on the represented zero set: on some quasi-component,
    // all members vanish and all side conditions hold.
    bool on_zero_set(const std::vector<Rational>& point) const {
        if (unit_) return false;
        if (components_.empty()) return true;
        for (const auto& c : components_) {
            bool ok = true;
            for (const auto& g : c.set.members())
                if (!g.evaluate(point).is_zero()) { ok = false; break; }
            if (!ok) continue;
            for (const auto& q : c.inequations)
                if (q.evaluate(point).is_zero()) { ok = false; break; }
            if (ok) return true;
        }
        return false;
    }

    void sort_and_dedupe() {
        std::sort(components_.begin(), components_.end(),
                  [](const QuasiComponent& a, const QuasiComponent& b) {
                      return compare_components(a, b) < 0;
                  });
        components_.erase(std::unique(components_.begin(), components_.end()),
                          components_.end());
    }

    friend bool operator==(const TriangularRepresentation& a,
                           const TriangularRepresentation& b) {
        return same_order(a.order_, b.order_) && a.unit_ == b.unit_ &&
               a.components_ == b.components_;
    }

private:
    OrderHandle order_;
    std::vector<QuasiComponent> components_;
    bool unit_ = false;
};

// Componentwise restriction to the variables x_1..x_r. Inequations are kept
// only when they involve no variable above x_r. The unit representation
// restricts to itself.
inline TriangularRepresentation representation_restrict(const TriangularRepresentation& rep,
                                                        std::size_t r) {
    if (rep.is_unit()) return rep;
    std::vector<QuasiComponent> out;
    out.reserve(rep.components().size());
    for (const auto& c : rep.components()) {
        std::vector<Polynomial> ineqs;
        for (const auto& q : c.inequations) {
            auto cls = q.class_index();
            if (!cls || *cls < r) ineqs.push_back(q);
        }
        out.emplace_back(restrict(c.set, r), std::move(ineqs));
    }
    return TriangularRepresentation(rep.order(), std::move(out));
}

// Representation of sqrt(I*J) as the concatenation of the two families:
// membership in the product is the conjunction of the factors' memberships
// whenever both families are nonempty. The empty family and the unit
// representation both act as identities.
inline TriangularRepresentation representation_product(const TriangularRepresentation& a,
                                                       const TriangularRepresentation& b) {
    if (!same_order(a.order(), b.order()))
        throw std::invalid_argument("representation product: mixed orders");
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<QuasiComponent> all = a.components();
    all.insert(all.end(), b.components().begin(), b.components().end());
    TriangularRepresentation out(a.order(), std::move(all));
    out.sort_and_dedupe();
    return out;
}

// Drops trailing unused variables from the ambient order, producing an
// equal representation over the first r variables. Every member and
// inequation must already live in x_1..x_r.
inline TriangularRepresentation project_order(const TriangularRepresentation& rep,
                                              std::size_t r) {
    std::vector<std::string> names(rep.order()->names().begin(),
                                   rep.order()->names().begin() +
                                       static_cast<std::ptrdiff_t>(r));
    OrderHandle target = make_order(std::move(names));
    if (rep.is_unit()) return TriangularRepresentation::unit(target);
    std::vector<QuasiComponent> out;
    for (const auto& c : rep.components()) {
        std::vector<Polynomial> members, ineqs;
        for (const auto& g : c.set.members()) members.push_back(g.reindex(target));
        for (const auto& q : c.inequations) ineqs.push_back(q.reindex(target));
        out.emplace_back(TriangularSet(target, std::move(members)), std::move(ineqs));
    }
    return TriangularRepresentation(target, std::move(out));
}

} // namespace ritt
