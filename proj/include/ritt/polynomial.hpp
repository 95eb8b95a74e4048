#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ritt/rational.hpp"
#include "ritt/variable_order.hpp"

namespace ritt {

// Exponent vector; size always equals the ambient variable count.
using Monomial = std::vector<unsigned>;

// Pure lexicographic order induced by the variable order: the highest
// variable is the most significant position.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

// Immutable sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero; every monomial has full length.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit Polynomial(OrderHandle order) : order_(check(std::move(order))) {}

    Polynomial(OrderHandle order, const Rational& c) : order_(check(std::move(order))) {
        if (!c.is_zero()) terms_.emplace(Monomial(order_->size(), 0u), c);
    }

    static Polynomial zero(OrderHandle order) { return Polynomial(std::move(order)); }

    static Polynomial constant(OrderHandle order, const Rational& c) {
        return Polynomial(std::move(order), c);
    }

    static Polynomial variable(OrderHandle order, std::size_t index) {
        Polynomial p(std::move(order));
        if (index >= p.order_->size())
            throw std::invalid_argument("polynomial: variable index out of range");
        Monomial m(p.order_->size(), 0u);
        m[index] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Polynomial variable(const OrderHandle& order, const std::string& name) {
        return variable(order, order->index_of(name));
    }

    static Polynomial term(OrderHandle order, Monomial m, const Rational& c) {
        Polynomial p(std::move(order));
        if (m.size() != p.order_->size())
            throw std::invalid_argument("polynomial: monomial length mismatch");
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const OrderHandle& order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const Monomial& m = terms_.begin()->first;
        for (unsigned e : m)
            if (e) return false;
        return true;
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("polynomial: not a constant");
        return terms_.begin()->second;
    }

    // Highest variable actually present; nullopt for constants.
    std::optional<std::size_t> class_index() const {
        std::optional<std::size_t> best;
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = m.size(); i-- > 0;) {
                if (m[i]) {
                    if (!best || i > *best) best = i;
                    break;
                }
            }
        }
        return best;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) {
            unsigned s = 0;
            for (unsigned e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    // Degree in the class variable; constants have main degree 0.
    unsigned main_degree() const {
        auto cls = class_index();
        return cls ? degree_in(*cls) : 0u;
    }

    // Coefficient of var^k, a polynomial with zero degree in var.
    Polynomial coefficient_wrt(std::size_t var, unsigned k) const {
        Polynomial out(order_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == k) {
                Monomial r = m;
                r[var] = 0;
                out.terms_.emplace(std::move(r), c);
            }
        }
        return out;
    }

    // Leading coefficient with respect to the class variable.
    // Errors on constants: a constant has no class.
    Polynomial initial() const {
        auto cls = class_index();
        if (!cls) throw std::domain_error("initial: constant polynomial has no class variable");
        return coefficient_wrt(*cls, degree_in(*cls));
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial out(order_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial r = m;
            r[var] -= 1;
            out.add_term(std::move(r), c * m[var]);
        }
        return out;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out(a.order_);
        for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same(a, b);
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same(a, b);
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same(a, b);
        Polynomial out(a.order_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                out.add_term(std::move(m), ca * cb);
            }
        }
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        Polynomial out(a.order_);
        if (s.is_zero()) return out;
        for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
        return out;
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(order_, Rational(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        return evaluate_with<Rational>(point);
    }

    // Evaluation over any commutative ring element type constructible from
    // Rational (used by the zero-set oracle's quadratic extension).
    template <class F>
    F evaluate_with(const std::vector<F>& point) const {
        if (point.size() != order_->size())
            throw std::invalid_argument("evaluate: point dimension mismatch");
        F acc{Rational(0)};
        for (const auto& [m, c] : terms_) {
            F t{c};
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (unsigned k = 0; k < m[i]; ++k) t = t * point[i];
            }
            acc = acc + t;
        }
        return acc;
    }

    // Substitute values[i] for variable i; values live in a common order.
    Polynomial compose(const std::vector<Polynomial>& values) const {
        if (values.size() != order_->size())
            throw std::invalid_argument("compose: substitution arity mismatch");
        if (values.empty()) throw std::invalid_argument("compose: empty target");
        const OrderHandle& target = values.front().order();
        for (const auto& v : values) require_same(values.front(), v);
        std::vector<std::vector<Polynomial>> powers(values.size());
        auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target, Rational(1)));
            while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
            return cache[e];
        };
        Polynomial acc(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(target, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t = t * power_of(i, m[i]);
            acc = acc + t;
        }
        return acc;
    }

    // Rebuild against another order containing (at least) the variables
    // this polynomial actually uses, matching by name.
    Polynomial reindex(const OrderHandle& target) const {
        std::vector<std::optional<std::size_t>> map(order_->size());
        for (std::size_t i = 0; i < order_->size(); ++i) {
            const std::string& nm = order_->name(i);
            if (target->contains(nm)) map[i] = target->index_of(nm);
        }
        Polynomial out(target);
        for (const auto& [m, c] : terms_) {
            Monomial r(target->size(), 0u);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!map[i])
                    throw std::invalid_argument("reindex: target order lacks variable " +
                                                order_->name(i));
                r[*map[i]] = m[i];
            }
            out.add_term(std::move(r), c);
        }
        return out;
    }

    // Integer-primitive associate with positive leading coefficient:
    // unique canonical representative of the scalar class.
    Polynomial normalized_primitive() const {
        if (terms_.empty()) return *this;
        Integer den_lcm{1}, num_gcd{0};
        for (const auto& [m, c] : terms_) {
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
            num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        }
        Rational scale{den_lcm, num_gcd};
        if (terms_.rbegin()->second < 0) scale = -scale;
        return *this * scale;
    }

    const std::pair<const Monomial, Rational>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
        return *terms_.rbegin();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_order(a.order_, b.order_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Deterministic total order on polynomials over one variable order:
    // by term map under (monomial lex, then coefficient).
    static int compare_terms(const Polynomial& a, const Polynomial& b) {
        auto ia = a.terms_.rbegin(), ea = a.terms_.rend();
        auto ib = b.terms_.rbegin(), eb = b.terms_.rend();
        MonomialLess less;
        for (; ia != ea && ib != eb; ++ia, ++ib) {
            if (less(ia->first, ib->first)) return -1;
            if (less(ib->first, ia->first)) return 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        if (ia != ea) return 1;
        if (ib != eb) return -1;
        return 0;
    }

private:
    static OrderHandle check(OrderHandle order) {
        if (!order) throw std::invalid_argument("polynomial: null variable order");
        return order;
    }

    static void require_same(const Polynomial& a, const Polynomial& b) {
        if (!same_order(a.order_, b.order_))
            throw std::invalid_argument("polynomial: mixed variable orders");
    }

    void add_term(Monomial m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    OrderHandle order_;
    TermMap terms_;
};

// Ritt rank: class index first (constants lowest), then main degree, then
// total degree, then the deterministic term-order tie-break.
inline int compare_rank(const Polynomial& a, const Polynomial& b) {
    auto ca = a.class_index(), cb = b.class_index();
    long la = ca ? static_cast<long>(*ca) : -1;
    long lb = cb ? static_cast<long>(*cb) : -1;
    if (la != lb) return la < lb ? -1 : 1;
    unsigned ma = a.main_degree(), mb = b.main_degree();
    if (ma != mb) return ma < mb ? -1 : 1;
    unsigned ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb ? -1 : 1;
    return Polynomial::compare_terms(a, b);
}

inline bool rank_less(const Polynomial& a, const Polynomial& b) {
    return compare_rank(a, b) < 0;
}

} // namespace ritt
