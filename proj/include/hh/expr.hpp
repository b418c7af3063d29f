#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "hh/errors.hpp"
#include "hh/scales.hpp"

namespace hh {

// Minimal complex-analytic expressions: one free variable (z or t), decimal
// literals, the imaginary unit i, + - * / ^ with standard precedence
// (^ right-associative, tighter than unary minus, which is tighter than * /),
// and calls to exp, sin, cos, sinh, cosh, tanh, sqrt, log.
//
// '^' accepts integer or half-integer exponent values only (principal branch
// for the half-integer case). Implicit multiplication is a syntax error.
class ExprAst {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        enum class Kind { Literal, Variable, Negate, Binary, Call };
        Kind kind;
        cplx literal{};
        char var = 0;   // 'z' or 't'
        char op = 0;    // '+','-','*','/','^'
        int func = -1;  // index into the function table
        NodePtr lhs, rhs;
    };

    ExprAst() = default;
    explicit ExprAst(NodePtr root, char var) : root_(std::move(root)), var_(var) {}

    bool empty() const { return root_ == nullptr; }
    char variable() const { return var_; }  // 0 when the expression is constant

    cplx eval(cplx value) const;
    std::string str() const;

    const NodePtr& root() const { return root_; }

private:
    NodePtr root_;
    char var_ = 0;
};

ExprAst parse_expr(std::string_view src);

// names of the supported call functions, in table order
std::span<const std::string_view> expr_functions();

} // namespace hh
