#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ritt/pseudo_division.hpp"

namespace ritt {

inline bool is_triangular(const std::vector<Polynomial>& polys) {
    return detail::strictly_increasing_classes(polys);
}

// Finite sequence of nonconstant polynomials with strictly increasing
// classes. rep(G) = { f : prem(f, G) == 0 }; not an ideal in general.
class TriangularSet {
public:
    TriangularSet(OrderHandle order, std::vector<Polynomial> members)
        : order_(std::move(order)), members_(std::move(members)) {
        if (!order_) throw std::invalid_argument("triangular set: null order");
        for (const auto& g : members_)
            if (!same_order(g.order(), order_))
                throw std::invalid_argument("triangular set: member has foreign order");
        if (!is_triangular(members_))
            throw std::invalid_argument("triangular set: classes not strictly increasing");
    }

    explicit TriangularSet(OrderHandle order)
        : TriangularSet(std::move(order), std::vector<Polynomial>{}) {}

    const OrderHandle& order() const { return order_; }
    const std::vector<Polynomial>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    friend bool operator==(const TriangularSet& a, const TriangularSet& b) {
        return same_order(a.order_, b.order_) && a.members_ == b.members_;
    }

private:
    OrderHandle order_;
    std::vector<Polynomial> members_;
};

inline Polynomial prem(const Polynomial& f, const TriangularSet& g,
                       ReductionBudget* budget = nullptr) {
    return prem(f, g.members(), budget);
}

inline bool rep_contains(const TriangularSet& g, const Polynomial& f) {
    return prem(f, g.members()).is_zero();
}

// Scans sample pairs in order and returns the first (f, g) with both members
// in rep(G) but f - g outside it, witnessing failure of ideal closure.
inline std::optional<std::pair<Polynomial, Polynomial>>
rep_is_ideal_witness(const TriangularSet& g, const std::vector<Polynomial>& samples) {
    std::vector<bool> inside(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) inside[i] = rep_contains(g, samples[i]);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!inside[i]) continue;
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (i == j || !inside[j]) continue;
            if (!rep_contains(g, samples[i] - samples[j]))
                return std::make_pair(samples[i], samples[j]);
        }
    }
    return std::nullopt;
}

// Members whose variables all lie in x_1..x_r; a prefix, since classes
// strictly increase. restrict(G, 0) is empty; r >= n returns G whole.
inline TriangularSet restrict(const TriangularSet& g, std::size_t r) {
    std::vector<Polynomial> kept;
    for (const auto& member : g.members()) {
        auto cls = member.class_index();
        if (cls && *cls < r) kept.push_back(member);
    }
    return TriangularSet(g.order(), std::move(kept));
}

} // namespace ritt
