#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace fracol {

/// Expression tree over the single variable t.
///
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' unary)?
///   atom  := NUMBER | 't' | 'pi' | IDENT '(' expr ')' | '(' expr ')'
///
/// Functions: sin cos exp ln sqrt abs erfc gamma.
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class MathFunction { Sin, Cos, Exp, Ln, Sqrt, Abs, Erfc, Gamma };

struct ExprNode;

class ExprAst {
public:
    using BinaryOp = fracol::BinaryOp;
    using Function = MathFunction;

    struct Number { double value; };
    struct Variable {};
    struct Pi {};
    struct Negate;
    struct Binary;
    struct Call;

    /// Throws ParameterError unless v is finite and non-negative.
    static ExprAst number(double v);
    static ExprAst variable();
    static ExprAst pi();
    static ExprAst negate(ExprAst operand);
    static ExprAst binary(BinaryOp op, ExprAst lhs, ExprAst rhs);
    static ExprAst call(Function fn, ExprAst arg);

    const ExprNode& node() const { return *node_; }

    /// Throws DomainError on division by zero, ln of a non-positive value or
    /// sqrt of a negative value; PoleError from gamma.
    double evaluate(double t) const;

    /// Fully parenthesized text that parses back to the same tree.
    std::string to_string() const;

    friend bool operator==(const ExprAst& lhs, const ExprAst& rhs);

private:
    explicit ExprAst(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ExprNode> node_;
};

struct ExprAst::Negate { ExprAst operand; };
struct ExprAst::Binary { BinaryOp op; ExprAst lhs; ExprAst rhs; };
struct ExprAst::Call { Function fn; ExprAst arg; };

struct ExprNode {
    std::variant<ExprAst::Number, ExprAst::Variable, ExprAst::Pi, ExprAst::Negate, ExprAst::Binary, ExprAst::Call>
        value;
};

/// Throws ParseError (with byte offset and the expected-token set) or
/// UnknownIdentifierError.
ExprAst parse_expr(std::string_view src);

std::string_view function_name(ExprAst::Function fn);

} // namespace fracol
