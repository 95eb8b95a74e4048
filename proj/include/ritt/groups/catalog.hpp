#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ritt::groups {

// Named algebraic subgroups of GL_n with rule-table geometry: identity
// components, character-kernel intersections, containment and normality are
// fixed facts per catalog entry, not computed from presentations.
enum class Kind {
    GL,
    SL,
    DiagonalTorus,
    Borel,
    UnipotentUpper,
    Scalars,       // multiplicative group, inside GL(1)
    FiniteCyclic,  // m-th roots of unity, inside GL(1)
    Trivial
};

struct CatalogGroup {
    Kind kind;
    unsigned ambient = 1;      // matrix size of the ambient GL
    unsigned cyclic_order = 0; // m for FiniteCyclic, else 0
};

inline bool operator==(const CatalogGroup& a, const CatalogGroup& b) {
    return a.kind == b.kind && a.ambient == b.ambient && a.cyclic_order == b.cyclic_order;
}
inline bool operator!=(const CatalogGroup& a, const CatalogGroup& b) { return !(a == b); }

// Size-1 matrix groups collapse: GL(1), the torus and the Borel are the
// scalars; SL(1), the unitriangular group and the 1st roots of unity are
// trivial.
inline CatalogGroup canonical(CatalogGroup g) {
    if (g.ambient == 0) throw std::invalid_argument("catalog: zero matrix size");
    switch (g.kind) {
    case Kind::GL:
    case Kind::DiagonalTorus:
    case Kind::Borel:
        if (g.ambient == 1) return {Kind::Scalars, 1, 0};
        return g;
    case Kind::SL:
    case Kind::UnipotentUpper:
        if (g.ambient == 1) return {Kind::Trivial, 1, 0};
        return g;
    case Kind::Scalars:
        return {Kind::Scalars, 1, 0};
    case Kind::FiniteCyclic:
        if (g.cyclic_order == 0)
            throw std::invalid_argument("catalog: cyclic group needs a positive order");
        if (g.cyclic_order == 1) return {Kind::Trivial, 1, 0};
        return {Kind::FiniteCyclic, 1, g.cyclic_order};
    case Kind::Trivial:
        return {Kind::Trivial, g.ambient, 0};
    }
    throw std::logic_error("catalog: unreachable");
}

inline CatalogGroup GL(unsigned n) { return canonical({Kind::GL, n, 0}); }
inline CatalogGroup SL(unsigned n) { return canonical({Kind::SL, n, 0}); }
inline CatalogGroup diagonal_torus(unsigned n) { return canonical({Kind::DiagonalTorus, n, 0}); }
inline CatalogGroup borel(unsigned n) { return canonical({Kind::Borel, n, 0}); }
inline CatalogGroup unipotent_upper(unsigned n) { return canonical({Kind::UnipotentUpper, n, 0}); }
inline CatalogGroup scalars() { return {Kind::Scalars, 1, 0}; }
inline CatalogGroup finite_cyclic(unsigned m) { return canonical({Kind::FiniteCyclic, 1, m}); }
inline CatalogGroup trivial(unsigned ambient = 1) { return canonical({Kind::Trivial, ambient, 0}); }

inline std::string to_string(const CatalogGroup& g) {
    auto sized = [&](const char* base) { return std::string(base) + "(" + std::to_string(g.ambient) + ")"; };
    switch (g.kind) {
    case Kind::GL: return sized("GL");
    case Kind::SL: return sized("SL");
    case Kind::DiagonalTorus: return sized("DiagonalTorus");
    case Kind::Borel: return sized("Borel");
    case Kind::UnipotentUpper: return sized("UnipotentUpper");
    case Kind::Scalars: return "Scalars";
    case Kind::FiniteCyclic: return "FiniteCyclic(" + std::to_string(g.cyclic_order) + ")";
    case Kind::Trivial: return "Trivial";
    }
    throw std::logic_error("catalog: unreachable");
}

// Accepts the catalog spellings: GL(n), SL(n), DiagonalTorus(n), Borel(n),
// UnipotentUpper(n), Scalars, FiniteCyclic(m), Trivial.
inline CatalogGroup parse_group(const std::string& text) {
    auto open = text.find('(');
    std::string base = open == std::string::npos ? text : text.substr(0, open);
    unsigned arg = 0;
    if (open != std::string::npos) {
        if (text.back() != ')')
            throw std::invalid_argument("group: missing ')' in '" + text + "'");
        std::string inner = text.substr(open + 1, text.size() - open - 2);
        if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("group: bad size in '" + text + "'");
        arg = static_cast<unsigned>(std::stoul(inner));
        if (arg == 0) throw std::invalid_argument("group: size must be positive");
    }
    auto need_arg = [&](Kind k) {
        if (open == std::string::npos)
            throw std::invalid_argument("group: '" + base + "' needs a size argument");
        return canonical({k, arg, k == Kind::FiniteCyclic ? arg : 0u});
    };
    if (base == "GL") return need_arg(Kind::GL);
    if (base == "SL") return need_arg(Kind::SL);
    if (base == "DiagonalTorus") return need_arg(Kind::DiagonalTorus);
    if (base == "Borel") return need_arg(Kind::Borel);
    if (base == "UnipotentUpper") return need_arg(Kind::UnipotentUpper);
    if (base == "FiniteCyclic") {
        if (open == std::string::npos)
            throw std::invalid_argument("group: FiniteCyclic needs an order argument");
        return canonical({Kind::FiniteCyclic, 1, arg});
    }
    if (base == "Scalars") return scalars();
    if (base == "Trivial") return trivial();
    throw std::invalid_argument("group: unknown catalog name '" + text + "'");
}

inline bool is_finite(const CatalogGroup& g_in) {
    CatalogGroup g = canonical(g_in);
    return g.kind == Kind::FiniteCyclic || g.kind == Kind::Trivial;
}

inline bool is_connected(const CatalogGroup& g_in) {
    CatalogGroup g = canonical(g_in);
    return g.kind != Kind::FiniteCyclic; // canonical FiniteCyclic has order >= 2
}

inline CatalogGroup identity_component(const CatalogGroup& g_in) {
    CatalogGroup g = canonical(g_in);
    if (g.kind == Kind::FiniteCyclic) return trivial();
    return g; // all other catalog groups are connected
}

// Intersection of the kernels of all characters. Defined on connected
// groups; callers must pass to the identity component first.
inline CatalogGroup character_kernel_intersection(const CatalogGroup& g_in) {
    CatalogGroup g = canonical(g_in);
    switch (g.kind) {
    case Kind::GL: return SL(g.ambient);
    case Kind::SL: return g;
    case Kind::DiagonalTorus: return trivial(g.ambient);
    case Kind::Borel: return unipotent_upper(g.ambient);
    case Kind::UnipotentUpper: return g; // no nontrivial characters
    case Kind::Scalars: return trivial();
    case Kind::Trivial: return g;
    case Kind::FiniteCyclic:
        throw std::domain_error(
            "character kernels: finite group; take the identity component first");
    }
    throw std::logic_error("catalog: unreachable");
}

// Containment fact table (a subgroup-of b). Defined for same-ambient pairs;
// anything else is an unknown pair.
inline bool group_contains(const CatalogGroup& a_in, const CatalogGroup& b_in) {
    CatalogGroup a = canonical(a_in), b = canonical(b_in);
    if (a.ambient != b.ambient)
        throw std::domain_error("containment: unknown pair " + to_string(a_in) + " vs " +
                                to_string(b_in) + " (mixed ambient sizes)");
    if (a == b) return true;
    if (a.kind == Kind::Trivial) return true;
    if (b.kind == Kind::Trivial) return false;
    if (b.kind == Kind::GL) return true;
    switch (a.kind) {
    case Kind::GL: return false; // b != GL
    case Kind::SL: return false; // SL only sits in GL
    case Kind::Borel: return false;
    case Kind::UnipotentUpper:
        return b.kind == Kind::Borel || b.kind == Kind::SL;
    case Kind::DiagonalTorus:
        return b.kind == Kind::Borel;
    case Kind::Scalars: return false; // ambient-1 GL is canonical Scalars
    case Kind::FiniteCyclic:
        if (b.kind == Kind::Scalars) return true;
        if (b.kind == Kind::FiniteCyclic) return b.cyclic_order % a.cyclic_order == 0;
        return false;
    case Kind::Trivial: return true;
    }
    throw std::logic_error("catalog: unreachable");
}

// Normality fact table; meaningful when a is contained in b.
inline bool normal_in(const CatalogGroup& a_in, const CatalogGroup& b_in) {
    CatalogGroup a = canonical(a_in), b = canonical(b_in);
    if (!group_contains(a, b)) return false;
    if (a == b || a.kind == Kind::Trivial) return true;
    switch (b.kind) {
    case Kind::GL: return a.kind == Kind::SL;
    case Kind::SL: return false;             // proper unipotent/torus parts not normal
    case Kind::Borel: return a.kind == Kind::UnipotentUpper;
    case Kind::UnipotentUpper: return false; // no proper catalog subgroups besides Trivial
    case Kind::DiagonalTorus: return false;
    case Kind::Scalars:
    case Kind::FiniteCyclic:
    case Kind::Trivial:
        return true; // abelian ambient: containment implies normality
    }
    throw std::logic_error("catalog: unreachable");
}

struct ProtoCheckResult {
    bool pass = false;
    int failing_clause = 0; // 0 when pass; else 1, 2 or 3
    CatalogGroup kernel_part;     // (candidate identity component)^t
    CatalogGroup galois_identity; // galois identity component
    std::vector<std::string> trace;
};

// Sandwich test: (i) galois inside candidate, (ii) the character-kernel
// part of the candidate's identity component inside the galois identity
// component, (iii) that part normal in the galois identity component.
// Clauses run in order; the first failure is reported.
inline ProtoCheckResult proto_check(const CatalogGroup& candidate_in,
                                    const CatalogGroup& galois_in) {
    CatalogGroup candidate = canonical(candidate_in), galois = canonical(galois_in);
    ProtoCheckResult out;
    out.galois_identity = identity_component(galois);
    out.kernel_part = character_kernel_intersection(identity_component(candidate));

    static const char* roman[] = {"", "i", "ii", "iii"};
    auto clause = [&](int index, const std::string& text, bool holds) {
        out.trace.push_back("(" + std::string(roman[index]) + ") " + text + ": " +
                            (holds ? "holds" : "fails"));
        if (!holds && out.failing_clause == 0) out.failing_clause = index;
        return holds;
    };

    bool c1 = clause(1, to_string(galois) + " inside " + to_string(candidate),
                     group_contains(galois, candidate));
    bool c2 = clause(2, to_string(out.kernel_part) + " inside " + to_string(out.galois_identity),
                     group_contains(out.kernel_part, out.galois_identity));
    bool c3 = clause(3, to_string(out.kernel_part) + " normal in " + to_string(out.galois_identity),
                     c2 && normal_in(out.kernel_part, out.galois_identity));
    out.pass = c1 && c2 && c3;
    return out;
}

} // namespace ritt::groups
