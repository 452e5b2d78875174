// SPDX-License-Identifier: Apache-2.0
//
// Error taxonomy for the frob library.
//
//  - parse_error:          malformed input text (words, polynomials, sessions);
//                          carries a line/column location when available.
//  - invariant_violation:  an internal mathematical certificate failed
//                          (robustness bound breach, nonzero theta-kernel on
//                          the verification window, ...).  These indicate a
//                          bug, never bad user input.
//  - truncated_result:     a computation stopped at its degree cap and the
//                          caller did not opt in to partial results.

#ifndef FROB_ERRORS_HPP
#define FROB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frob {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }

    std::size_t line_;
    std::size_t column_;
};

class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

class truncated_result : public std::runtime_error {
public:
    explicit truncated_result(const std::string& what) : std::runtime_error(what) {}
};

} // namespace frob

#endif // FROB_ERRORS_HPP
