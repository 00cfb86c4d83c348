#include "fracol/expr.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "fracol/error.hpp"
#include "fracol/fracops.hpp"

namespace fracol {

namespace {

constexpr std::array<std::pair<std::string_view, ExprAst::Function>, 8> kFunctions{{
    {"sin", ExprAst::Function::Sin},
    {"cos", ExprAst::Function::Cos},
    {"exp", ExprAst::Function::Exp},
    {"ln", ExprAst::Function::Ln},
    {"sqrt", ExprAst::Function::Sqrt},
    {"abs", ExprAst::Function::Abs},
    {"erfc", ExprAst::Function::Erfc},
    {"gamma", ExprAst::Function::Gamma},
}};

std::optional<ExprAst::Function> lookup_function(std::string_view name) {
    for (const auto& [n, fn] : kFunctions) {
        if (n == name) {
            return fn;
        }
    }
    return std::nullopt;
}

std::string format_number(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprAst parse() {
        skip_ws();
        if (pos_ == src_.size()) {
            fail("empty expression", {"expression"});
        }
        auto e = expr();
        skip_ws();
        if (pos_ != src_.size()) {
            fail("unexpected trailing input", {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        }
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
        std::string msg = what + " at offset " + std::to_string(pos_) + "; expected one of:";
        for (const auto& e : expected) {
            msg += " " + e;
        }
        throw ParseError(msg, pos_, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprAst expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = ExprAst::binary(ExprAst::BinaryOp::Add, std::move(lhs), term());
            } else if (accept('-')) {
                lhs = ExprAst::binary(ExprAst::BinaryOp::Sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    ExprAst term() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = ExprAst::binary(ExprAst::BinaryOp::Mul, std::move(lhs), unary());
            } else if (accept('/')) {
                lhs = ExprAst::binary(ExprAst::BinaryOp::Div, std::move(lhs), unary());
            } else {
                return lhs;
            }
        }
    }

    ExprAst unary() {
        if (accept('-')) {
            return ExprAst::negate(unary());
        }
        return power();
    }

    ExprAst power() {
        auto base = atom();
        if (accept('^')) {
            return ExprAst::binary(ExprAst::BinaryOp::Pow, std::move(base), unary());
        }
        return base;
    }

    ExprAst atom() {
        skip_ws();
        if (pos_ >= src_.size()) {
            fail("unexpected end of input", {"number", "'t'", "'pi'", "function", "'('", "'-'"});
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            const auto name = src_.substr(start, pos_ - start);
            if (name == "t") {
                return ExprAst::variable();
            }
            if (name == "pi") {
                return ExprAst::pi();
            }
            const auto fn = lookup_function(name);
            if (!fn) {
                std::vector<std::string> expected{"'t'", "'pi'"};
                for (const auto& [n, f] : kFunctions) {
                    expected.emplace_back(n);
                }
                throw UnknownIdentifierError("unknown identifier '" + std::string(name) + "' at offset " +
                                                 std::to_string(start),
                                             start, std::move(expected));
            }
            if (!accept('(')) {
                fail("expected '(' after function name", {"'('"});
            }
            auto arg = expr();
            if (!accept(')')) {
                fail("expected ')'", {"')'"});
            }
            return ExprAst::call(*fn, std::move(arg));
        }
        if (accept('(')) {
            auto inner = expr();
            if (!accept(')')) {
                fail("expected ')'", {"')'"});
            }
            return inner;
        }
        fail("unexpected character", {"number", "'t'", "'pi'", "function", "'('", "'-'"});
    }

    ExprAst number() {
        // Decimal digits, optional fraction, optional exponent.
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa_digits = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            mantissa_digits += digits();
        }
        if (mantissa_digits == 0) {
            pos_ = start;
            fail("malformed number", {"digit"});
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                ++pos_;
            }
            if (digits() == 0) {
                pos_ = mark + 1;
                fail("malformed exponent", {"digit"});
            }
        }
        double value = 0.0;
        const auto text = src_.substr(start, pos_ - start);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            pos_ = start;
            fail("number out of range", {"number"});
        }
        return ExprAst::number(value);
    }
};

double apply_function(ExprAst::Function fn, double x) {
    switch (fn) {
    case ExprAst::Function::Sin: return std::sin(x);
    case ExprAst::Function::Cos: return std::cos(x);
    case ExprAst::Function::Exp: return std::exp(x);
    case ExprAst::Function::Ln:
        if (!(x > 0.0)) {
            throw DomainError("ln of non-positive value " + std::to_string(x));
        }
        return std::log(x);
    case ExprAst::Function::Sqrt:
        if (x < 0.0) {
            throw DomainError("sqrt of negative value " + std::to_string(x));
        }
        return std::sqrt(x);
    case ExprAst::Function::Abs: return std::abs(x);
    case ExprAst::Function::Erfc: return fracol::erfc(x);
    case ExprAst::Function::Gamma: return gamma_fn(x);
    }
    return 0.0;
}

} // namespace

namespace {

template <typename T>
std::shared_ptr<const ExprNode> make_node(T value) {
    return std::make_shared<const ExprNode>(ExprNode{std::move(value)});
}

} // namespace

ExprAst ExprAst::number(double v) {
    // Literals are unsigned in the grammar; negation is a separate node.
    if (!std::isfinite(v) || std::signbit(v)) {
        throw ParameterError("ExprAst::number: literal must be finite and non-negative");
    }
    return ExprAst(make_node(Number{v}));
}
ExprAst ExprAst::variable() { return ExprAst(make_node(Variable{})); }
ExprAst ExprAst::pi() { return ExprAst(make_node(Pi{})); }
ExprAst ExprAst::negate(ExprAst operand) { return ExprAst(make_node(Negate{std::move(operand)})); }
ExprAst ExprAst::binary(BinaryOp op, ExprAst lhs, ExprAst rhs) {
    return ExprAst(make_node(Binary{op, std::move(lhs), std::move(rhs)}));
}
ExprAst ExprAst::call(Function fn, ExprAst arg) { return ExprAst(make_node(Call{fn, std::move(arg)})); }

double ExprAst::evaluate(double t) const {
    struct Visitor {
        double t;
        double operator()(const Number& n) const { return n.value; }
        double operator()(const Variable&) const { return t; }
        double operator()(const Pi&) const { return std::numbers::pi; }
        double operator()(const Negate& n) const { return -n.operand.evaluate(t); }
        double operator()(const Call& c) const { return apply_function(c.fn, c.arg.evaluate(t)); }
        double operator()(const Binary& b) const {
            const double l = b.lhs.evaluate(t);
            const double r = b.rhs.evaluate(t);
            switch (b.op) {
            case BinaryOp::Add: return l + r;
            case BinaryOp::Sub: return l - r;
            case BinaryOp::Mul: return l * r;
            case BinaryOp::Div:
                if (r == 0.0) {
                    throw DomainError("division by zero");
                }
                return l / r;
            case BinaryOp::Pow: return std::pow(l, r);
            }
            return 0.0;
        }
    };
    return std::visit(Visitor{t}, node_->value);
}

std::string ExprAst::to_string() const {
    struct Visitor {
        std::string operator()(const Number& n) const { return format_number(n.value); }
        std::string operator()(const Variable&) const { return "t"; }
        std::string operator()(const Pi&) const { return "pi"; }
        std::string operator()(const Negate& n) const { return "(-" + n.operand.to_string() + ")"; }
        std::string operator()(const Call& c) const {
            return std::string(function_name(c.fn)) + "(" + c.arg.to_string() + ")";
        }
        std::string operator()(const Binary& b) const {
            static constexpr std::array<const char*, 5> ops{" + ", " - ", " * ", " / ", "^"};
            return "(" + b.lhs.to_string() + ops[static_cast<int>(b.op)] + b.rhs.to_string() + ")";
        }
    };
    return std::visit(Visitor{}, node_->value);
}

bool operator==(const ExprAst& lhs, const ExprAst& rhs) {
    const auto& a = lhs.node_->value;
    const auto& b = rhs.node_->value;
    if (a.index() != b.index()) {
        return false;
    }
    return std::visit(
        [&b](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, ExprAst::Number>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, ExprAst::Negate>) {
                return x.operand == y.operand;
            } else if constexpr (std::is_same_v<T, ExprAst::Binary>) {
                return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
            } else if constexpr (std::is_same_v<T, ExprAst::Call>) {
                return x.fn == y.fn && x.arg == y.arg;
            } else {
                return true;
            }
        },
        a);
}

ExprAst parse_expr(std::string_view src) {
    return Parser(src).parse();
}

std::string_view function_name(ExprAst::Function fn) {
    for (const auto& [n, f] : kFunctions) {
        if (f == fn) {
            return n;
        }
    }
    return "?";
}

} // namespace fracol
