#include "ghsub/error.hpp"
#include "ghsub/interval.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace ghsub;

TEST_SUITE("interval_core") {

TEST_CASE("constructor rejects inverted and non-finite endpoints")
{
    CHECK_NOTHROW(Interval(1, 1));
    CHECK_THROWS_AS(Interval(2, 1), Error);
    CHECK_THROWS_AS(Interval(1 + 1e-15, 1), Error);
    CHECK_THROWS_AS(Interval(0, std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(Interval(std::nan(""), 1), Error);
    try {
        Interval(3, 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidInterval);
    }
    CHECK(ZERO == Interval(0, 0));
    CHECK(Interval(4).is_degenerate());
}

TEST_CASE("add")
{
    CHECK(add(Interval(1, 2), Interval(3, 5)) == Interval(4, 7));
    CHECK(add(Interval(-1, 4), ZERO) == Interval(-1, 4));
    // [1,1]⊙1 ⊕ [0,1]⊙34 ⊕ [1,6]
    CHECK(add(add(Interval(1, 1), Interval(0, 34)), Interval(1, 6)) == Interval(2, 41));
    CHECK(add(Interval(1, 2), Interval(3, 5)) == oracle::image(Interval(1, 2), Interval(3, 5), std::plus<>{}));
}

TEST_CASE("sub")
{
    CHECK(sub(Interval(1, 2), Interval(1, 2)) == Interval(-1, 1));
    CHECK(sub(Interval(3, 5), ZERO) == Interval(3, 5));
    // [1,2]x² ⊖ [0,2](x+1) at x=1, oracle from the closed forms x²−2x−2 and 2x²
    const double x = 1.0;
    CHECK(sub(Interval(1, 2) * Interval(x * x), Interval(0, 2) * Interval(x + 1)) ==
          Interval(x * x - 2 * x - 2, 2 * x * x));
    CHECK(sub(Interval(1, 2), Interval(1, 2)) == oracle::image(Interval(1, 2), Interval(1, 2), std::minus<>{}));
}

TEST_CASE("mul")
{
    CHECK(mul(Interval(1, 2), Interval(-1, 3)) == Interval(-2, 6));
    CHECK(mul(ZERO, Interval(-9, 9)) == ZERO);
    CHECK(mul(Interval(2), Interval(1, 3)) == Interval(2, 6));
    for (auto [a, b] : {std::pair{Interval(1, 2), Interval(-1, 3)}, std::pair{Interval(-3, -1), Interval(-2, 5)},
                        std::pair{Interval(-1, 4), Interval(-3, 2)}})
        CHECK(mul(a, b) == oracle::image(a, b, std::multiplies<>{}));
}

TEST_CASE("div")
{
    CHECK(div(Interval(2, 4), Interval(1, 2)) == Interval(1, 4));
    CHECK(div(Interval(3, 6), Interval(3, 3)) == Interval(1, 2));
    CHECK_THROWS_AS(div(Interval(1, 2), Interval(-1, 1)), Error);
    CHECK_THROWS_AS(div(Interval(1, 2), Interval(0, 1)), Error);
    try {
        div(Interval(1, 2), Interval(-1, 1));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroInDenominator);
    }
    CHECK(oracle::close(div(Interval(2, 4), Interval(1, 2)),
                        oracle::image(Interval(2, 4), Interval(1, 2), std::divides<>{}), 1e-15));
    CHECK(oracle::close(div(Interval(-3, 5), Interval(-4, -2)),
                        oracle::image(Interval(-3, 5), Interval(-4, -2), std::divides<>{}), 1e-15));
}

TEST_CASE("gh_diff")
{
    CHECK(gh_diff(Interval(1, 3), Interval(1, 3)) == ZERO);
    CHECK(gh_diff(Interval(17, 44), Interval(2, 41)) == Interval(3, 15));
    CHECK(gh_diff(Interval(5, 9), Interval(1, 2)) == Interval(4, 7));
    CHECK(gh_diff(Interval(5, 9), Interval(1, 2)) == oracle::gh_solve(Interval(5, 9), Interval(1, 2)));
    // second case of the definition: B = A ⊕ (−1)⊙C
    const Interval a(0, 1), b(-5, 10);
    const Interval c = gh_diff(a, b);
    CHECK(c == oracle::gh_solve(a, b));
    CHECK(add(a, scalar_mul(-1.0, c)) == b);
}

TEST_CASE("scalar_mul")
{
    CHECK(scalar_mul(-1, Interval(1, 3)) == Interval(-3, -1));
    CHECK(scalar_mul(0, Interval(-4, 7)) == ZERO);
    CHECK(scalar_mul(2.5, Interval(-2, 2)) == Interval(-5, 5));
    CHECK(scalar_mul(-2.5, Interval(-2, 3)) == oracle::scaled(-2.5, Interval(-2, 3)));
}

TEST_CASE("norm")
{
    CHECK(norm(Interval(-3, 2)) == 3);
    CHECK(norm(ZERO) == 0);
    CHECK(norm(Interval(1, 3)) == 3);
}

TEST_CASE("compare")
{
    CHECK(compare(Interval(2, 4), Interval(3, 15)) == Dominance::STRICTLY_DOMINATES);
    CHECK(compare(Interval(4, 45), Interval(17, 44)) == Dominance::INCOMPARABLE);
    CHECK(compare(Interval(17, 44), Interval(4, 45)) == Dominance::INCOMPARABLE);
    CHECK(compare(Interval(1, 2), Interval(1, 2)) == Dominance::EQUAL);
    CHECK(compare(Interval(3, 15), Interval(2, 4)) == Dominance::STRICTLY_DOMINATED);
    CHECK(compare(Interval(1, 2), Interval(1, 3)) == Dominance::STRICTLY_DOMINATES);
    CHECK(compare(Interval(1, 2), Interval(1, 2 + 1e-13), 1e-12) == Dominance::EQUAL);
    CHECK(precedes(Interval(2, 4), Interval(3, 15)));
    CHECK(strictly_precedes(Interval(2, 4), Interval(3, 15)));
    CHECK_FALSE(strictly_precedes(Interval(1, 2), Interval(1, 2)));
    CHECK(precedes(Interval(1, 2 + 1e-11), Interval(1, 2), 1e-10));
    CHECK(to_string(Dominance::INCOMPARABLE) == "INCOMPARABLE");
}

TEST_CASE("text round-trip")
{
    CHECK(format(Interval(-1, 4)) == "[-1,4]");
    CHECK(parse_interval("[ -1 , 4 ]") == Interval(-1, 4));
    CHECK(parse_interval("[1e-3,2.5E2]") == Interval(1e-3, 250));
    CHECK(parse_interval("7") == Interval(7));
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.123, 6.02214076e23}) {
        const Interval a(v, std::abs(v) * 2 + 1);
        CHECK(parse_interval(format(a)) == a);
    }
    CHECK_THROWS_AS(parse_interval("[1,2"), ParseError);
    CHECK_THROWS_AS(parse_interval("[1;2]"), ParseError);
    CHECK_THROWS_AS(parse_interval("[2,1]"), Error);
    CHECK_THROWS_AS(parse_interval("[a,1]"), ParseError);
    CHECK(format_real(-0.0) == "0");
}

}
