#pragma once

#include <string>
#include <vector>

#include "ritt/decompose.hpp"

namespace ritt {

// Exact element of Q(sqrt(m)): a + b*sqrt(m). Perfect-square radicands
// collapse to rationals; mixing distinct nonzero radicands is rejected.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), m_(0) {}
    QuadExt(const Rational& r) : a_(r), b_(0), m_(0) {}
    QuadExt(Rational a, Rational b, Integer m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
        if (m_ < 0) throw std::domain_error("quadratic extension: negative radicand");
        normalize();
    }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coefficient() const { return b_; }
    const Integer& radicand() const { return m_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Integer m = merge_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, m);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        Integer m = merge_radicand(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, m);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Integer m = merge_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(m),
                       x.a_ * y.b_ + x.b_ * y.a_, m);
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return (x - y).is_zero();
    }

private:
    void normalize() {
        if (b_.is_zero()) { m_ = 0; return; }
        if (m_.is_zero()) { b_ = 0; return; }
        Integer root;
        if (is_perfect_power(m_, 2, root)) {
            a_ += b_ * Rational(root);
            b_ = 0;
            m_ = 0;
        }
    }
    static Integer merge_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.b_.is_zero()) return y.m_;
        if (y.b_.is_zero()) return x.m_;
        if (x.m_ != y.m_)
            throw std::domain_error("quadratic extension: mixed radicands");
        return x.m_;
    }

    Rational a_, b_;
    Integer m_;
};

// A parametrized piece of a zero set: coordinate polynomials in fresh
// parameters. A query vanishes on the sheet iff its composition with the
// coordinates is the zero polynomial.
struct OracleSheet {
    std::vector<Polynomial> coordinates;
};

struct CuratedSystem {
    std::string name;
    OrderHandle order;
    std::vector<Polynomial> generators;
    std::vector<std::vector<QuadExt>> points;
    std::vector<OracleSheet> sheets;
};

// Registry-backed exact membership oracle: the complete zero set of each
// curated system is declared as points and sheets. Registration verifies
// the cheap direction (every declared zero kills every generator);
// completeness is by construction of the curated corpus. Independent of the
// pseudo-division and decomposition code paths.
class ZeroOracle {
public:
    void register_system(CuratedSystem sys) {
        if (!sys.order) throw std::invalid_argument("oracle: null order");
        for (const auto& p : sys.points) {
            if (p.size() != sys.order->size())
                throw std::invalid_argument("oracle: point dimension mismatch in " + sys.name);
            for (const auto& g : sys.generators)
                if (!g.evaluate_with<QuadExt>(p).is_zero())
                    throw std::invalid_argument("oracle: declared point is not a zero in " +
                                                sys.name);
        }
        for (const auto& sheet : sys.sheets) {
            if (sheet.coordinates.size() != sys.order->size())
                throw std::invalid_argument("oracle: sheet arity mismatch in " + sys.name);
            for (const auto& g : sys.generators)
                if (!g.compose(sheet.coordinates).is_zero())
                    throw std::invalid_argument("oracle: declared sheet is not a zero in " +
                                                sys.name);
        }
        keys_.push_back(system_key(sys.order, sys.generators));
        systems_.push_back(std::move(sys));
    }

    const std::vector<CuratedSystem>& systems() const { return systems_; }

    const CuratedSystem& find(const OrderHandle& order,
                              const std::vector<Polynomial>& generators) const {
        std::string key = system_key(order, generators);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] == key) return systems_[i];
        throw oracle_inapplicable("oracle: system is not in the curated registry");
    }

    // True when f vanishes on every point and every sheet of the system's
    // declared zero set.
    bool membership(const Polynomial& f, const OrderHandle& order,
                    const std::vector<Polynomial>& generators) const {
        const CuratedSystem& sys = find(order, generators);
        if (!same_order(f.order(), sys.order))
            throw std::invalid_argument("oracle: query has foreign order");
        for (const auto& p : sys.points)
            if (!f.evaluate_with<QuadExt>(p).is_zero()) return false;
        for (const auto& sheet : sys.sheets)
            if (!f.compose(sheet.coordinates).is_zero()) return false;
        return true;
    }

    static std::string system_key(const OrderHandle& order,
                                  const std::vector<Polynomial>& generators) {
        std::vector<Polynomial> canon;
        for (const auto& g : generators)
            if (!g.is_zero()) canon.push_back(g.normalized_primitive());
        std::sort(canon.begin(), canon.end(), rank_less);
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        std::string key;
        for (const auto& n : order->names()) { key += n; key += ','; }
        key += '|';
        for (const auto& g : canon) { key += to_string(g); key += ';'; }
        return key;
    }

private:
    std::vector<std::string> keys_;
    std::vector<CuratedSystem> systems_;
};

inline bool oracle_membership(const ZeroOracle& oracle, const Polynomial& f,
                              const OrderHandle& order,
                              const std::vector<Polynomial>& generators) {
    return oracle.membership(f, order, generators);
}

} // namespace ritt
