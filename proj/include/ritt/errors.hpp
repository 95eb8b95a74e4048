#pragma once

#include <stdexcept>
#include <string>

namespace ritt {

// Text-format problems; carries 1-based line/column when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(locate(what, line, column)), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string locate(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        std::string s = what + " (line " + std::to_string(line);
        if (column) s += ", column " + std::to_string(column);
        return s + ")";
    }
    std::size_t line_, column_;
};

// Decomposition resource cap hit (step count or intermediate degree).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Comparator could not separate two values at the precision cap.
class undecided_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Zero-set oracle asked about a system outside its registry.
class oracle_inapplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ritt
