#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fracol/error.hpp"
#include "fracol/expr.hpp"
#include "oracles.hpp"

using namespace fracol;

namespace {

double eval(const char* src, double t) {
    return parse_expr(src).evaluate(t);
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

ExprAst random_ast(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 5);
    std::uniform_int_distribution<int> op(0, 4);
    std::uniform_int_distribution<int> fn(0, 7);
    std::uniform_real_distribution<double> mag(-3.0, 3.0);
    switch (pick(rng)) {
    case 0: {
        // Mix short decimals with full-precision doubles and large exponents.
        std::uniform_int_distribution<int> kind(0, 2);
        const int k = kind(rng);
        if (k == 0) {
            return ExprAst::number(std::uniform_int_distribution<int>(0, 99)(rng) / 4.0);
        }
        if (k == 1) {
            return ExprAst::number(std::pow(10.0, mag(rng)));
        }
        return ExprAst::number(std::pow(10.0, 100.0 * mag(rng)));
    }
    case 1: return ExprAst::variable();
    case 2: return ExprAst::pi();
    case 3: return ExprAst::negate(random_ast(rng, depth - 1));
    case 4:
        return ExprAst::binary(static_cast<BinaryOp>(op(rng)), random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    default: return ExprAst::call(static_cast<MathFunction>(fn(rng)), random_ast(rng, depth - 1));
    }
}

int depth_of(const ExprAst& e) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ExprAst::Negate>) {
                return 1 + depth_of(n.operand);
            } else if constexpr (std::is_same_v<T, ExprAst::Binary>) {
                return 1 + std::max(depth_of(n.lhs), depth_of(n.rhs));
            } else if constexpr (std::is_same_v<T, ExprAst::Call>) {
                return 1 + depth_of(n.arg);
            } else {
                return 0;
            }
        },
        e.node().value);
}

} // namespace

TEST_CASE("evaluation examples") {
    CHECK(eval("t^2 + 1", 2.0) == doctest::Approx(5.0).epsilon(1e-15));
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    CHECK(std::abs(eval("sqrt(pi)*(1+t)^(-3/2)", 0.0) - sqrt_pi) < 1e-15);
    CHECK(std::abs(eval("gamma(2/3)*t", 1.0) - oracle::gamma_by_quadrature(2.0 / 3.0)) < 1e-12);
    CHECK(std::abs(eval("gamma(2/3)*t", 1.0) - 1.3541179394264004) < 1e-14);
}

TEST_CASE("precedence and associativity") {
    CHECK(eval("1 + 2*3", 0.0) == 7.0);
    CHECK(eval("(1 + 2)*3", 0.0) == 9.0);
    CHECK(eval("2^3^2", 0.0) == 512.0);
    CHECK(eval("-2^2", 0.0) == -4.0);
    CHECK(eval("2^-1", 0.0) == 0.5);
    CHECK(eval("--t", 3.0) == 3.0);
    CHECK(eval("8/4/2", 0.0) == 1.0);
    CHECK(eval("8-4-2", 0.0) == 2.0);
    CHECK(eval("-t*2", 3.0) == -6.0);
    CHECK(eval("  t\t*\n t ", 3.0) == 9.0);
    CHECK(eval("1.5e1 + .5 + 2.", 0.0) == 17.5);
    CHECK(eval("2E-1", 0.0) == 0.2);

    CHECK(parse_expr("2^3^2") == parse_expr("2^(3^2)"));
    CHECK_FALSE(parse_expr("2^3^2") == parse_expr("(2^3)^2"));
    CHECK(parse_expr("-2^2") == parse_expr("-(2^2)"));
}

TEST_CASE("functions") {
    CHECK(eval("sin(pi/2)", 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval("cos(0)", 0.0) == 1.0);
    CHECK(eval("exp(ln(t))", 2.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(eval("abs(-t)", 4.0) == 4.0);
    CHECK(std::abs(eval("erfc(1)", 0.0) - 0.15729920705028513) < 1e-16);
    CHECK(std::abs(eval("1 - exp(t)*erfc(sqrt(t))", 0.5) - 0.47684341627) < 1e-10);
    CHECK(eval("gamma(5)", 0.0) == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("domain errors surface at evaluation") {
    const auto div = parse_expr("1/t");
    CHECK_THROWS_AS(div.evaluate(0.0), DomainError);
    CHECK(div.evaluate(2.0) == 0.5);
    CHECK_THROWS_AS(parse_expr("ln(t)").evaluate(0.0), DomainError);
    CHECK_THROWS_AS(parse_expr("ln(t)").evaluate(-1.0), DomainError);
    CHECK_THROWS_AS(parse_expr("sqrt(t)").evaluate(-1e-300), DomainError);
    CHECK(parse_expr("sqrt(t)").evaluate(0.0) == 0.0);
    CHECK_THROWS_AS(parse_expr("gamma(t)").evaluate(-2.0), PoleError);
}

TEST_CASE("syntax errors carry offset and expected tokens") {
    SUBCASE("dangling operator") {
        try {
            parse_expr("t + ");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 4);
            CHECK(contains(e.expected(), "'('"));
            CHECK(contains(e.expected(), "number"));
        }
    }
    SUBCASE("unclosed parenthesis") {
        try {
            parse_expr("(t + 1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 6);
            CHECK(e.expected() == std::vector<std::string>{"')'"});
        }
    }
    SUBCASE("trailing input") {
        try {
            parse_expr("t 2");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 2);
            CHECK(contains(e.expected(), "end of input"));
        }
    }
    SUBCASE("function without call") {
        try {
            parse_expr("sin t");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.expected() == std::vector<std::string>{"'('"});
        }
    }
    SUBCASE("malformed numbers") {
        CHECK_THROWS_AS(parse_expr("1e"), ParseError);
        CHECK_THROWS_AS(parse_expr("."), ParseError);
        CHECK_THROWS_AS(parse_expr("1e999"), ParseError);
    }
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("   "), ParseError);
    CHECK_THROWS_AS(parse_expr("t $ 1"), ParseError);
    CHECK_THROWS_AS(parse_expr("sin(t, 1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("()"), ParseError);
}

TEST_CASE("unknown identifiers") {
    try {
        parse_expr("2*x + 1");
        FAIL("expected UnknownIdentifierError");
    } catch (const UnknownIdentifierError& e) {
        CHECK(e.offset() == 2);
        CHECK(contains(e.expected(), "'t'"));
        CHECK(contains(e.expected(), "gamma"));
    }
    CHECK_THROWS_AS(parse_expr("tan(t)"), UnknownIdentifierError);
    CHECK_THROWS_AS(parse_expr("T"), UnknownIdentifierError);
    CHECK_THROWS_AS(parse_expr("pie"), UnknownIdentifierError);
}

TEST_CASE("number literals are unsigned and finite") {
    CHECK_THROWS_AS(ExprAst::number(-1.0), ParameterError);
    CHECK_THROWS_AS(ExprAst::number(-0.0), ParameterError);
    CHECK_THROWS_AS(ExprAst::number(INFINITY), ParameterError);
    CHECK_THROWS_AS(ExprAst::number(NAN), ParameterError);
    CHECK(ExprAst::number(0.0).evaluate(1.0) == 0.0);
}

TEST_CASE("printing is fully parenthesized") {
    CHECK(parse_expr("1 + 2*t").to_string() == "(1 + (2 * t))");
    CHECK(parse_expr("-t^2").to_string() == "(-(t^2))");
    CHECK(parse_expr("sqrt(pi)").to_string() == "sqrt(pi)");
    CHECK(parse_expr("0.1").to_string() == "0.1");
    for (int i = 0; i < 8; ++i) {
        const auto fn = static_cast<MathFunction>(i);
        const std::string name(function_name(fn));
        CHECK(parse_expr(name + "(t)") == ExprAst::call(fn, ExprAst::variable()));
    }
}

TEST_CASE("print/parse round trip on random trees") {
    std::mt19937_64 rng(20261016);
    int deepest = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto ast = random_ast(rng, 6);
        REQUIRE(depth_of(ast) <= 6);
        deepest = std::max(deepest, depth_of(ast));
        const auto text = ast.to_string();
        const auto back = parse_expr(text);
        CHECK_MESSAGE(back == ast, text);
        CHECK(back.to_string() == text);
    }
    CHECK(deepest >= 4);
}

TEST_CASE("evaluation is deterministic") {
    const auto e = parse_expr("exp(-t)*sin(3*t) + gamma(1 + t)/erfc(t)");
    for (double t : {0.0, 0.25, 0.5, 0.9}) {
        CHECK(e.evaluate(t) == e.evaluate(t));
        CHECK(e.evaluate(t) == parse_expr(e.to_string()).evaluate(t));
    }
}
