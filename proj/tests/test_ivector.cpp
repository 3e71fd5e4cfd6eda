#include "ghsub/error.hpp"
#include "ghsub/ivector.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace ghsub;

TEST_SUITE("interval_vec") {

TEST_CASE("vec_op")
{
    const IVector a{Interval(1, 2), Interval(0, 1)};
    const IVector b{Interval(1, 1), Interval(2, 3)};
    CHECK(vec_op(a, b, VecOp::ADD) == IVector{Interval(2, 3), Interval(2, 4)});
    CHECK(vec_op(a, a, VecOp::GH_SUB) == IVector::zeros(2));
    CHECK(vec_op(IVector{Interval(1, 3)}, IVector{Interval(0, 2)}, VecOp::SUB) == IVector{Interval(-1, 3)});
    CHECK_THROWS_AS(vec_op(a, IVector{Interval(1)}, VecOp::ADD), Error);
    try {
        vec_op(a, IVector{Interval(1)}, VecOp::ADD);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
    CHECK_THROWS_AS(IVector(std::vector<Interval>{}), Error);
}

TEST_CASE("vec_norm")
{
    CHECK(vec_norm(IVector{Interval(3, 4), Interval(-5, 1)}) == doctest::Approx(std::sqrt(41.0)).epsilon(1e-15));
    CHECK(vec_norm(IVector::zeros(3)) == 0);
    CHECK(vec_norm(IVector{Interval(-3, 2)}) == 3);
}

TEST_CASE("dot")
{
    const RealVector one{1.0};
    CHECK(dot(one, IVector{Interval(2, 4)}) == Interval(2, 4));
    const RealVector d{1.0, -1.0};
    CHECK(dot(d, IVector{Interval(1, 2), Interval(0, 3)}) == Interval(-2, 2));
    const RealVector step{2.0 - 1.0};
    CHECK(dot(step, IVector{Interval(2, 4)}) == Interval(2, 4));
    CHECK_THROWS_AS(dot(d, IVector{Interval(1)}), Error);

    // oracle: the set {Σ dᵢaᵢ} enumerated over sampled aᵢ
    const IVector a{Interval(1, 2), Interval(-1, 3)};
    const RealVector e{-0.5, 2.0};
    const Interval ref = oracle::image(a[0], a[1], [&](double x, double y) { return e[0] * x + e[1] * y; });
    CHECK(oracle::close(dot(e, a), ref, 1e-14));
}

TEST_CASE("w_map")
{
    CHECK(w_map(IVector{Interval(1, 3), Interval(-2, 4)}) == RealVector{2, 1});
    CHECK(w_map(IVector{ZERO}, WMapConfig::from_w(0.3)) == RealVector{0});
    CHECK(w_map(IVector{Interval(2, 4)}, WMapConfig{1.0, 0.0}) == RealVector{2});
    CHECK_THROWS_AS(w_map(IVector{ZERO}, WMapConfig{0.6, 0.6}), Error);
    CHECK_THROWS_AS(w_map(IVector{ZERO}, WMapConfig{-0.5, 1.5}), Error);
    CHECK_NOTHROW(w_map(IVector{ZERO}, WMapConfig{0.1, 0.9 + 1e-13}));
}

TEST_CASE("vec_compare")
{
    CHECK(vec_compare(IVector::zeros(2), IVector{Interval(1, 2), Interval(0, 5)}) == VecOrder::LEQ);
    const IVector a{Interval(1, 2), Interval(-1, 0)};
    CHECK(vec_compare(a, a) == VecOrder::LEQ);
    CHECK(vec_compare(IVector{Interval(0, 3)}, IVector{Interval(1, 2)}) == VecOrder::NOT_LEQ);
}

TEST_CASE("gh_distance")
{
    const IVector a{Interval(1, 2), Interval(-1, 0)};
    CHECK(gh_distance(a, a) == 0);
    CHECK(gh_distance(IVector{Interval(1, 3)}, IVector{Interval(0, 2)}) == 1);
    for (int k = 1; k <= 1000; k *= 10) {
        const IVector gk{Interval(1.0 / k, 3 + 1.0 / k)};
        CHECK(gh_distance(gk, IVector{Interval(0, 3)}) == doctest::Approx(1.0 / k).epsilon(1e-12));
    }
}

TEST_CASE("text forms")
{
    const IVector a{Interval(1, 2), Interval(-0.5, 3)};
    CHECK(format(a) == "([1,2],[-0.5,3])");
    CHECK(parse_ivector(format(a)) == a);
    CHECK(parse_ivector("[0,0]") == IVector::zeros(1));
    CHECK(parse_ivector(" ( [1,2] , 4 ) ") == IVector{Interval(1, 2), Interval(4)});
    CHECK(format_csv_row(a) == "1,2,-0.5,3");
    CHECK_THROWS_AS(parse_ivector("([1,2]"), ParseError);
    CHECK_THROWS_AS(parse_ivector("()"), ParseError);
}

}
