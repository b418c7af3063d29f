#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Invalid argument ranges (t <= 0, L2 >= L1, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Quadrature/stepping failure; carries the tolerance actually achieved.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved tolerance " + std::to_string(achieved) + ")"),
          achieved_tol(achieved) {}
    double achieved_tol;
};

// Expression syntax error with byte offset and the tokens that were expected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message, std::string expected_tokens)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message +
                             (expected_tokens.empty() ? "" : " (expected " + expected_tokens + ")")),
          offset(offset), expected(std::move(expected_tokens)) {}
    std::size_t offset;
    std::string expected;
};

class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hh
