#pragma once

#include <deque>
#include <string>
#include <unordered_set>

#include "ritt/gcd.hpp"
#include "ritt/io.hpp"
#include "ritt/representation.hpp"

namespace ritt {

struct DecomposeLimits {
    unsigned long long max_steps = 100000;
    unsigned max_degree = 512;
};

struct DecompositionTask {
    OrderHandle order;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> inequations;
    DecomposeLimits limits;
};

namespace detail {

// Lowest-rank triangular subset of the basis under the Ritt ranking:
// greedily pick the minimum-rank polynomial reduced with respect to the
// chain built so far, with strictly increasing classes. Constants are
// ignored; callers handle inconsistent bases.
inline std::vector<Polynomial> characteristic_chain(const std::vector<Polynomial>& basis) {
    std::vector<const Polynomial*> cands;
    for (const auto& p : basis)
        if (!p.is_constant()) cands.push_back(&p);
    std::vector<Polynomial> chain;
    long last_class = -1;
    while (true) {
        const Polynomial* best = nullptr;
        for (const Polynomial* p : cands) {
            auto cls = p->class_index();
            if (static_cast<long>(*cls) <= last_class) continue;
            bool reduced = true;
            for (const auto& g : chain) {
                auto gc = g.class_index();
                if (p->degree_in(*gc) >= g.main_degree()) { reduced = false; break; }
            }
            if (!reduced) continue;
            if (!best || compare_rank(*p, *best) < 0) best = p;
        }
        if (!best) break;
        chain.push_back(*best);
        last_class = static_cast<long>(*best->class_index());
    }
    return chain;
}

inline std::string basis_key(const std::vector<Polynomial>& basis) {
    std::string key;
    for (const auto& p : basis) {
        key += to_string(p);
        key += ';';
    }
    return key;
}

// Canonical basis: primitive normalized members, rank-sorted, deduplicated,
// zeros dropped. Constants collapse to 1.
inline std::vector<Polynomial> canonical_basis(std::vector<Polynomial> polys) {
    std::vector<Polynomial> out;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        out.push_back(p.normalized_primitive());
    }
    std::sort(out.begin(), out.end(), rank_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool contains_poly(const std::vector<Polynomial>& basis, const Polynomial& p) {
    return std::find(basis.begin(), basis.end(), p) != basis.end();
}

} // namespace detail

// Ritt characteristic set of a nonempty basis. A nonzero constant in the
// basis signals an inconsistent system.
inline TriangularSet characteristic_set(const std::vector<Polynomial>& basis) {
    if (basis.empty()) throw std::invalid_argument("characteristic set: empty basis");
    for (const auto& p : basis)
        if (p.is_constant() && !p.is_zero())
            throw std::domain_error("characteristic set: basis contains a nonzero constant");
    return TriangularSet(basis.front().order(), detail::characteristic_chain(basis));
}

// Wu-Ritt zero decomposition with branching on initials, content splits and
// squarefree reduction. The union of the quasi-components' zero sets equals
// the zero set of the generators (restricted by the task inequations through
// pruning); every generator pseudo-reduces to zero modulo every component.
inline TriangularRepresentation decompose(const DecompositionTask& task) {
    if (!task.order) throw std::invalid_argument("decompose: null order");
    for (const auto& g : task.generators)
        if (!same_order(g.order(), task.order))
            throw std::invalid_argument("decompose: generator has foreign order");
    for (const auto& q : task.inequations) {
        if (!same_order(q.order(), task.order))
            throw std::invalid_argument("decompose: inequation has foreign order");
        if (q.is_zero())
            throw std::invalid_argument("decompose: zero inequation is unsatisfiable");
    }

    std::vector<Polynomial> initial_basis = detail::canonical_basis(task.generators);
    if (initial_basis.empty())
        return TriangularRepresentation(task.order); // radical of <0>

    ReductionBudget budget{task.limits.max_steps, task.limits.max_degree};

    std::deque<std::vector<Polynomial>> queue{initial_basis};
    std::unordered_set<std::string> seen{detail::basis_key(initial_basis)};
    std::vector<QuasiComponent> components;

    auto push_branch = [&](std::vector<Polynomial> basis) {
        basis = detail::canonical_basis(std::move(basis));
        auto key = detail::basis_key(basis);
        if (seen.insert(std::move(key)).second) queue.push_back(std::move(basis));
    };

    while (!queue.empty()) {
        std::vector<Polynomial> basis = std::move(queue.front());
        queue.pop_front();

        bool dead = false;
        for (const auto& p : basis)
            if (p.is_constant()) { dead = true; break; } // canonical nonzero constant
        if (dead) continue;

        // Saturate: extend the basis until every member pseudo-reduces to
        // zero modulo the characteristic set.
        std::vector<Polynomial> chain;
        while (true) {
            chain = detail::characteristic_chain(basis);
            std::vector<Polynomial> fresh;
            for (const auto& f : basis) {
                if (detail::contains_poly(chain, f)) continue;
                Polynomial r = prem(f, chain, &budget);
                if (r.is_zero()) continue;
                Polynomial c = r.normalized_primitive();
                if (c.is_constant()) { dead = true; break; }
                if (!detail::contains_poly(basis, c) && !detail::contains_poly(fresh, c))
                    fresh.push_back(c);
            }
            if (dead || fresh.empty()) break;
            for (auto& r : fresh) basis.push_back(std::move(r));
            basis = detail::canonical_basis(std::move(basis));
        }
        if (dead) continue;

        // Refine members to primitive squarefree form. A nontrivial content
        // c splits off the branch c = 0; the squarefree primitive parts
        // re-enter saturation so generators stay reduced to zero.
        bool refined = false;
        std::vector<Polynomial> square_free_members;
        for (const auto& g : chain) {
            Polynomial cont = content(g);
            if (!cont.is_constant()) {
                std::vector<Polynomial> sub = basis;
                sub.push_back(cont);
                push_branch(std::move(sub));
                refined = true;
            }
            Polynomial s = squarefree_part(primitive_part(g));
            square_free_members.push_back(s);
            if (!(s == g)) refined = true;
        }
        if (refined) {
            std::vector<Polynomial> main = basis;
            for (auto& s : square_free_members) main.push_back(std::move(s));
            push_branch(std::move(main));
            continue;
        }

        // Branch on nonconstant initials, then emit the quasi-component.
        std::vector<Polynomial> side = task.inequations;
        for (const auto& g : chain) {
            Polynomial init = g.initial().normalized_primitive();
            if (init.is_constant()) continue;
            std::vector<Polynomial> sub = basis;
            sub.push_back(init);
            push_branch(std::move(sub));
            if (!detail::contains_poly(side, init)) side.push_back(init);
        }
        bool pruned = false;
        for (const auto& q : side) {
            if (prem(q, chain, &budget).is_zero()) { pruned = true; break; }
        }
        if (!pruned)
            components.emplace_back(TriangularSet(task.order, std::move(chain)),
                                    std::move(side));
    }

    if (components.empty())
        return TriangularRepresentation::unit(task.order); // empty zero set
    TriangularRepresentation rep(task.order, std::move(components));
    rep.sort_and_dedupe();
    return rep;
}

inline bool membership_radical(const TriangularRepresentation& rep, const Polynomial& f) {
    return rep.contains(f);
}

} // namespace ritt
