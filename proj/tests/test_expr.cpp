#include "ghsub/catalog.hpp"
#include "ghsub/error.hpp"
#include "ghsub/expr.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace ghsub;

namespace {

Interval at(const Expr& e, std::initializer_list<double> x)
{
    const RealVector v(x);
    return e.eval(v);
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_SUITE("expr") {

TEST_CASE("arithmetic precedence and associativity")
{
    CHECK(at(parse_expr("1 + 2 * 3"), {}) == Interval(7));
    CHECK(at(parse_expr("(1 + 2) * 3"), {}) == Interval(9));
    CHECK(at(parse_expr("8 / 2 / 2"), {}) == Interval(2));
    CHECK(at(parse_expr("10 - 3 - 2"), {}) == Interval(5));
    CHECK(at(parse_expr("-x1 + 2"), {5}) == Interval(-3));
    CHECK(at(parse_expr("[1,2] * x1 + [0,1] * x2"), {2, 3}) == Interval(2, 7));
    CHECK(at(parse_expr("[1,3] ghsub [0,1]"), {}) == Interval(1, 2));
    CHECK(at(parse_expr("[1,3] - [0,1]"), {}) == Interval(0, 3));
    CHECK(at(parse_expr("2.5e-1 * 4"), {}) == Interval(1));
}

TEST_CASE("real-valued nodes")
{
    CHECK(at(parse_expr("abs(x1 - 2)"), {-1}) == Interval(3));
    CHECK(at(parse_expr("pow3(x1)"), {-2}) == Interval(-8));
    CHECK(at(parse_expr("pow4(x1)"), {1.5}) == Interval(std::pow(1.5, 4)));
    CHECK(at(parse_expr("norm(x)"), {3, 4}) == Interval(5));
    CHECK(code_of([] { at(parse_expr("abs([1,2] * x1)"), {1}); }) == ErrorCode::NonDegenerateRealNode);
    CHECK(code_of([] { at(parse_expr("pow2([0,1])"), {}); }) == ErrorCode::NonDegenerateRealNode);
    CHECK(code_of([] { at(parse_expr("1 / (x1 - 1)"), {1}); }) == ErrorCode::ZeroInDenominator);
    CHECK(code_of([] { at(parse_expr("x2"), {1}); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("piecewise dispatch")
{
    const Expr e = parse_expr(catalog::kKink);
    CHECK(at(e, {2}) == Interval(-2, 5));
    CHECK(at(e, {1}) == Interval(-1, 5));
    CHECK(at(e, {0}) == Interval(0, 7));
    CHECK(at(e, {5}) == Interval(1, 9));

    // closed guards meeting at a point are fine when the branches agree there
    const Expr shared = parse_expr("piecewise{ x1 <= 0 => -x1; x1 >= 0 => x1; }");
    CHECK(at(shared, {0}) == Interval(0));
    CHECK(at(shared, {-2}) == Interval(2));

    const Expr step = parse_expr("piecewise{ x1 < 0 => [0,1]; x1 >= 0 => [2,3]; }");
    CHECK(at(step, {-1e-300}) == Interval(0, 1));
    CHECK(at(step, {0}) == Interval(2, 3));

    const Expr clash = parse_expr("piecewise{ x1 <= 0 => [0,1]; x1 >= 0 => [2,3]; }");
    CHECK(code_of([&] { at(clash, {0}); }) == ErrorCode::AmbiguousPiecewise);
    const Expr gap = parse_expr("piecewise{ x1 < 0 => 1; x1 > 0 => 2; }");
    CHECK(code_of([&] { at(gap, {0}); }) == ErrorCode::NoPiecewiseBranch);

    const Expr box = parse_expr("piecewise{ x1 >= 0 and x2 >= 0 => 1; otherwise => 0; }");
    CHECK(at(box, {1, 1}) == Interval(1));
    CHECK(at(box, {1, -1}) == Interval(0));
}

TEST_CASE("parse errors carry positions")
{
    auto where = [](std::string_view text) {
        try {
            parse_expr(text, 4);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(where("[1,2] * * x1") == std::pair<std::size_t, std::size_t>{4, 9});
    CHECK(where("x1 +") == std::pair<std::size_t, std::size_t>{4, 5});
    CHECK(where("(x1") == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(where("x0") == std::pair<std::size_t, std::size_t>{4, 2});
    CHECK(where("pow(x1)") == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(where("x1 $ 2") == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(where("[3,1]") == std::pair<std::size_t, std::size_t>{4, 1});
    CHECK(where("piecewise{ x1 <= 0 => 1 }") == std::pair<std::size_t, std::size_t>{4, 25});
    CHECK(where("norm(x1)") == std::pair<std::size_t, std::size_t>{4, 7});
    CHECK_THROWS_AS(parse_expr("1 2"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("printing round-trips through the parser")
{
    for (const auto& entry : catalog::entries()) {
        const Expr e = parse_expr(entry.text);
        const Expr again = parse_expr(e.to_string());
        for (double x : {entry.domain[0].lo(), entry.domain[0].mid(), entry.domain[0].hi()})
            CHECK(at(again, {x}) == at(e, {x}));
    }
}

TEST_CASE("arity and substitution")
{
    CHECK(parse_expr("[1,2]*x3 + x1").min_arity() == 3);
    CHECK(parse_expr("[1,2]").min_arity() == 0);
    CHECK(parse_expr("2*norm(x)").uses_norm());
    const Expr h = parse_expr("[1,2]*pow2(x1) + x2");
    const Expr f = h.substitute({Expr::constant(2.0) * Expr::var(0), Expr::var(0) - Expr::var(1)});
    CHECK(at(f, {1, 3}) == at(h, {2, -2}));
}

}
