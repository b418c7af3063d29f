#include "hh/expr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <span>

namespace hh {

namespace {

constexpr std::array<std::string_view, 8> kFuncs = {"exp", "sin", "cos",  "sinh",
                                                    "cosh", "tanh", "sqrt", "log"};

cplx apply_func(int f, cplx v) {
    switch (f) {
        case 0: return std::exp(v);
        case 1: return std::sin(v);
        case 2: return std::cos(v);
        case 3: return std::sinh(v);
        case 4: return std::cosh(v);
        case 5: return std::tanh(v);
        case 6: return std::sqrt(v);
        case 7: return std::log(v);
    }
    throw EvalError("unknown function index");
}

cplx apply_pow(cplx base, cplx e) {
    if (e.imag() != 0.0) throw EvalError("exponent must be real");
    const double twice = 2.0 * e.real();
    if (twice != std::nearbyint(twice))
        throw EvalError("exponent must be an integer or half-integer, got " +
                        std::to_string(e.real()));
    return std::pow(base, e.real());
}

cplx eval_node(const ExprAst::Node& n, cplx value) {
    using Kind = ExprAst::Node::Kind;
    switch (n.kind) {
        case Kind::Literal: return n.literal;
        case Kind::Variable: return value;
        case Kind::Negate: return -eval_node(*n.lhs, value);
        case Kind::Call: return apply_func(n.func, eval_node(*n.lhs, value));
        case Kind::Binary: {
            const cplx a = eval_node(*n.lhs, value);
            const cplx b = eval_node(*n.rhs, value);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/':
                    if (b == cplx(0.0, 0.0)) throw EvalError("division by zero");
                    return a / b;
                case '^': return apply_pow(a, b);
            }
            throw EvalError("unknown operator");
        }
    }
    throw EvalError("malformed AST");
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::size_t tok_pos = 0;
    double number = 0.0;
    std::string_view ident{};

    void advance() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= src.size()) {
            tok = Tok::End;
            return;
        }
        const char c = src[pos];
        switch (c) {
            case '+': tok = Tok::Plus; ++pos; return;
            case '-': tok = Tok::Minus; ++pos; return;
            case '*': tok = Tok::Star; ++pos; return;
            case '/': tok = Tok::Slash; ++pos; return;
            case '^': tok = Tok::Caret; ++pos; return;
            case '(': tok = Tok::LParen; ++pos; return;
            case ')': tok = Tok::RParen; ++pos; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos;
            while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
            if (end < src.size() && src[end] == '.') {
                ++end;
                while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
            }
            if (end < src.size() && (src[end] == 'e' || src[end] == 'E')) {
                std::size_t e = end + 1;
                if (e < src.size() && (src[e] == '+' || src[e] == '-')) ++e;
                std::size_t d = e;
                while (d < src.size() && std::isdigit(static_cast<unsigned char>(src[d]))) ++d;
                if (d > e) end = d;  // only consume the exponent if digits follow
            }
            const std::string text(src.substr(pos, end - pos));
            if (text == ".") throw ParseError(pos, "malformed number", "digits");
            number = std::stod(text);
            tok = Tok::Number;
            pos = end;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos;
            while (end < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
                ++end;
            ident = src.substr(pos, end - pos);
            tok = Tok::Ident;
            pos = end;
            return;
        }
        throw ParseError(pos, std::string("unexpected character '") + c + "'",
                         "number, identifier, operator or parenthesis");
    }
};

using Node = ExprAst::Node;
using NodePtr = ExprAst::NodePtr;

NodePtr make_literal(cplx v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Literal;
    n->literal = v;
    return n;
}

bool is_literal(const NodePtr& n) { return n->kind == Node::Kind::Literal; }

// fold constant subtrees; leaves anything that would raise an eval error
NodePtr fold(NodePtr n) {
    const bool foldable =
        (n->kind == Node::Kind::Negate && is_literal(n->lhs)) ||
        (n->kind == Node::Kind::Call && is_literal(n->lhs)) ||
        (n->kind == Node::Kind::Binary && is_literal(n->lhs) && is_literal(n->rhs));
    if (!foldable) return n;
    try {
        return make_literal(eval_node(*n, cplx{}));
    } catch (const EvalError&) {
        return n;
    }
}

struct Parser {
    Lexer lex;
    char var = 0;

    explicit Parser(std::string_view src) : lex{src} { lex.advance(); }

    [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
        throw ParseError(lex.tok_pos, msg, expected);
    }

    NodePtr parse_primary() {
        switch (lex.tok) {
            case Tok::Number: {
                auto n = make_literal(cplx(lex.number, 0.0));
                lex.advance();
                return n;
            }
            case Tok::Minus: {
                lex.advance();
                auto operand = parse_bp(5);  // unary binds tighter than * /
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::Negate;
                n->lhs = std::move(operand);
                return fold(std::move(n));
            }
            case Tok::LParen: {
                lex.advance();
                auto inner = parse_bp(0);
                if (lex.tok != Tok::RParen) fail("unbalanced parenthesis", "')'");
                lex.advance();
                return inner;
            }
            case Tok::Ident: {
                const std::string_view name = lex.ident;
                const std::size_t at = lex.tok_pos;
                if (name == "i") {
                    lex.advance();
                    return make_literal(cplx(0.0, 1.0));
                }
                for (std::size_t f = 0; f < kFuncs.size(); ++f) {
                    if (name == kFuncs[f]) {
                        lex.advance();
                        if (lex.tok != Tok::LParen) fail("function call needs an argument", "'('");
                        lex.advance();
                        auto arg = parse_bp(0);
                        if (lex.tok != Tok::RParen) fail("unbalanced parenthesis", "')'");
                        lex.advance();
                        auto n = std::make_shared<Node>();
                        n->kind = Node::Kind::Call;
                        n->func = static_cast<int>(f);
                        n->lhs = std::move(arg);
                        return fold(std::move(n));
                    }
                }
                if (name == "z" || name == "t") {
                    const char v = name[0];
                    if (var != 0 && var != v)
                        throw ParseError(at, "expression mixes variables 'z' and 't'",
                                         std::string(1, var));
                    var = v;
                    lex.advance();
                    auto n = std::make_shared<Node>();
                    n->kind = Node::Kind::Variable;
                    n->var = v;
                    return n;
                }
                throw ParseError(at, "unknown identifier '" + std::string(name) + "'",
                                 "z, t, i or a function name");
            }
            default:
                fail("expected a value", "number, 'i', variable, '-' or '('");
        }
    }

    // binding powers: + - (1,2); * / (3,4); unary - 5; ^ (8,7) right-assoc
    NodePtr parse_bp(int min_bp) {
        NodePtr lhs = parse_primary();
        for (;;) {
            char op = 0;
            int lbp = 0, rbp = 0;
            switch (lex.tok) {
                case Tok::Plus: op = '+'; lbp = 1; rbp = 2; break;
                case Tok::Minus: op = '-'; lbp = 1; rbp = 2; break;
                case Tok::Star: op = '*'; lbp = 3; rbp = 4; break;
                case Tok::Slash: op = '/'; lbp = 3; rbp = 4; break;
                case Tok::Caret: op = '^'; lbp = 8; rbp = 7; break;
                default: return lhs;
            }
            if (lbp < min_bp) return lhs;
            lex.advance();
            auto rhs = parse_bp(rbp);
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Binary;
            n->op = op;
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = fold(std::move(n));
        }
    }
};

void print_node(const Node& n, std::string& out) {
    using Kind = Node::Kind;
    switch (n.kind) {
        case Kind::Literal: {
            const double re = n.literal.real(), im = n.literal.imag();
            char buf[64];
            if (im == 0.0) {
                if (re < 0.0) {
                    std::snprintf(buf, sizeof buf, "(-%.17g)", -re);
                } else {
                    std::snprintf(buf, sizeof buf, "%.17g", re);
                }
                out += buf;
            } else {
                std::snprintf(buf, sizeof buf, "(%.17g+%.17g*i)", re, im);
                out += buf;
            }
            return;
        }
        case Kind::Variable: out += n.var; return;
        case Kind::Negate:
            out += "(-";
            print_node(*n.lhs, out);
            out += ')';
            return;
        case Kind::Call:
            out += kFuncs[static_cast<std::size_t>(n.func)];
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
        case Kind::Binary:
            out += '(';
            print_node(*n.lhs, out);
            out += n.op;
            print_node(*n.rhs, out);
            out += ')';
            return;
    }
}

} // namespace

cplx ExprAst::eval(cplx value) const {
    if (!root_) throw EvalError("empty expression");
    return eval_node(*root_, value);
}

std::string ExprAst::str() const {
    std::string out;
    if (root_) print_node(*root_, out);
    return out;
}

ExprAst parse_expr(std::string_view src) {
    Parser p(src);
    auto root = p.parse_bp(0);
    if (p.lex.tok != Tok::End)
        throw ParseError(p.lex.tok_pos, "trailing input", "operator or end of expression");
    return ExprAst(std::move(root), p.var);
}

std::span<const std::string_view> expr_functions() { return {kFuncs.data(), kFuncs.size()}; }

} // namespace hh
