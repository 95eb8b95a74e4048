#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ritt {

// An ordered list of distinct variable names x_1 < x_2 < ... < x_n.
// Shared immutably by every polynomial built against it.
class VariableOrder {
public:
    explicit VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("variable order: empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("variable order: duplicate variable " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("variable order: unknown variable " + name);
        return it->second;
    }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    friend bool operator==(const VariableOrder& a, const VariableOrder& b) {
        return a.names_ == b.names_;
    }
    friend bool operator!=(const VariableOrder& a, const VariableOrder& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using OrderHandle = std::shared_ptr<const VariableOrder>;

inline OrderHandle make_order(std::vector<std::string> names) {
    return std::make_shared<const VariableOrder>(std::move(names));
}

// Convenience for tests and matrix-entry orders.
inline OrderHandle make_order(std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    v.reserve(names.size());
    for (auto* n : names) v.emplace_back(n);
    return make_order(std::move(v));
}

inline bool same_order(const OrderHandle& a, const OrderHandle& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

} // namespace ritt
