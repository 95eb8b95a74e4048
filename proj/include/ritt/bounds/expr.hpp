#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ritt/errors.hpp"
#include "ritt/rational.hpp"

namespace ritt::bounds {

// Immutable expression tree denoting a non-negative real number. Grammar:
// non-negative rational constants, Euler's number (handled as a two-sided
// rational enclosure, never evaluated exactly), n-ary sums and products,
// guarded differences (left >= right is a proof obligation on the
// comparator), powers with expression exponents, binomial coefficients,
// the maximal binomial coefficient max_i C(M, i) = C(M, floor(M/2)), surds
// u + v*sqrt(m), and maxima of lists.
class BoundExpr {
public:
    enum class Kind {
        Constant,
        EulerE,
        Sum,
        Difference,
        Product,
        Power,
        Binomial,
        CentralBinomialMax,
        SqrtSurd,
        Maximum
    };

    Kind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }
    const std::vector<BoundExpr>& children() const { return node_->kids; }
    const BoundExpr& child(std::size_t i) const { return node_->kids.at(i); }
    std::size_t arity() const { return node_->kids.size(); }

    static BoundExpr constant(const Rational& v) {
        if (v < 0) throw std::domain_error("bound expression: negative constant");
        return make(Kind::Constant, v, {});
    }
    static BoundExpr constant(const Integer& v) { return constant(Rational(v)); }
    static BoundExpr constant(unsigned long long v) { return constant(Rational(v)); }

    static BoundExpr euler_e() { return make(Kind::EulerE, Rational(0), {}); }

    static BoundExpr sum(std::vector<BoundExpr> kids) {
        if (kids.empty()) return constant(Rational(0));
        if (kids.size() == 1) return kids.front();
        return make(Kind::Sum, Rational(0), std::move(kids));
    }

    static BoundExpr difference(BoundExpr a, BoundExpr b) {
        return make(Kind::Difference, Rational(0), {std::move(a), std::move(b)});
    }

    static BoundExpr product(std::vector<BoundExpr> kids) {
        if (kids.empty()) return constant(Rational(1));
        if (kids.size() == 1) return kids.front();
        return make(Kind::Product, Rational(0), {std::move(kids)});
    }

    static BoundExpr power(BoundExpr base, BoundExpr exponent) {
        return make(Kind::Power, Rational(0), {std::move(base), std::move(exponent)});
    }

    static BoundExpr binomial(BoundExpr top, BoundExpr bottom) {
        return make(Kind::Binomial, Rational(0), {std::move(top), std::move(bottom)});
    }

    static BoundExpr central_binomial_max(BoundExpr m) {
        return make(Kind::CentralBinomialMax, Rational(0), {std::move(m)});
    }

    static BoundExpr sqrt_surd(BoundExpr u, BoundExpr v, BoundExpr m) {
        return make(Kind::SqrtSurd, Rational(0), {std::move(u), std::move(v), std::move(m)});
    }

    static BoundExpr maximum(std::vector<BoundExpr> kids) {
        if (kids.empty()) throw std::invalid_argument("bound expression: empty maximum");
        if (kids.size() == 1) return kids.front();
        return make(Kind::Maximum, Rational(0), std::move(kids));
    }

    // Shallow identity (same shared node), used as a fast path.
    bool same_node(const BoundExpr& other) const { return node_ == other.node_; }

    // Stable address for memoization across a shared tree.
    const void* node_id() const { return node_.get(); }

private:
    struct Node {
        Kind kind;
        Rational value;
        std::vector<BoundExpr> kids;
    };

    explicit BoundExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static BoundExpr make(Kind k, Rational v, std::vector<BoundExpr> kids) {
        return BoundExpr(std::make_shared<const Node>(Node{k, std::move(v), std::move(kids)}));
    }

    std::shared_ptr<const Node> node_;
};

inline BoundExpr operator+(const BoundExpr& a, const BoundExpr& b) {
    return BoundExpr::sum({a, b});
}
inline BoundExpr operator*(const BoundExpr& a, const BoundExpr& b) {
    return BoundExpr::product({a, b});
}
inline BoundExpr operator-(const BoundExpr& a, const BoundExpr& b) {
    return BoundExpr::difference(a, b);
}

// Deterministic total order on trees: kind, then constant value, then
// arity, then children left to right.
inline int structural_compare(const BoundExpr& a, const BoundExpr& b) {
    if (a.same_node(b)) return 0;
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    if (a.kind() == BoundExpr::Kind::Constant) {
        if (a.value() != b.value()) return a.value() < b.value() ? -1 : 1;
        return 0;
    }
    if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (int c = structural_compare(a.child(i), b.child(i))) return c;
    }
    return 0;
}

inline bool structural_equal(const BoundExpr& a, const BoundExpr& b) {
    return structural_compare(a, b) == 0;
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

namespace detail {
inline std::string render(const BoundExpr& e, int parent_tightness);
}

inline std::string to_string(const BoundExpr& e) { return detail::render(e, 0); }

namespace detail {

// tightness: 0 top level, 1 inside sum/difference, 2 inside product,
// 3 power base.
inline std::string render(const BoundExpr& e, int parent_tightness) {
    using K = BoundExpr::Kind;
    auto paren = [&](const std::string& body, int own) {
        return parent_tightness > own ? "(" + body + ")" : body;
    };
    switch (e.kind()) {
    case K::Constant: {
        std::string body = bounds::to_string(e.value());
        return denominator(e.value()) == 1 ? body : paren(body, 2);
    }
    case K::EulerE: return "e";
    case K::Sum: {
        std::string body;
        for (std::size_t i = 0; i < e.arity(); ++i) {
            if (i) body += " + ";
            body += render(e.child(i), 1);
        }
        return paren(body, 0);
    }
    case K::Difference:
        return paren(render(e.child(0), 1) + " - " + render(e.child(1), 2), 0);
    case K::Product: {
        std::string body;
        for (std::size_t i = 0; i < e.arity(); ++i) {
            if (i) body += "*";
            body += render(e.child(i), 2);
        }
        return paren(body, 1);
    }
    case K::Power:
        return render(e.child(0), 3) + "^" + render(e.child(1), 3);
    case K::Binomial:
        return "C(" + render(e.child(0), 0) + ", " + render(e.child(1), 0) + ")";
    case K::CentralBinomialMax:
        return "maxC(" + render(e.child(0), 0) + ")";
    case K::SqrtSurd: {
        std::string body = render(e.child(0), 1) + " + " + render(e.child(1), 2) +
                           "*sqrt(" + render(e.child(2), 0) + ")";
        return paren(body, 0);
    }
    case K::Maximum: {
        std::string body = "max(";
        for (std::size_t i = 0; i < e.arity(); ++i) {
            if (i) body += ", ";
            body += render(e.child(i), 0);
        }
        return body + ")";
    }
    }
    throw std::logic_error("bound expression: unreachable");
}

} // namespace detail

} // namespace ritt::bounds
