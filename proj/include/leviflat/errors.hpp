#ifndef LEVIFLAT_ERRORS_HPP
#define LEVIFLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lf {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values from different variable contexts were combined.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

// Malformed textual input; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

// A computation exceeded its configured resource budget.  Always a hard,
// explicit failure; results are never silently truncated.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

// Semantically invalid input: bad index, point off the variety, degenerate
// family, and so on.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

} // namespace lf

#endif
