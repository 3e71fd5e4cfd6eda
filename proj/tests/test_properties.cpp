#include "ghsub/error.hpp"
#include "ghsub/interval.hpp"
#include "ghsub/ivector.hpp"
#include "laws.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

using namespace ghsub;

TEST_SUITE("properties") {

TEST_CASE("randomized laws, 1000 trials each")
{
    for (std::uint64_t seed : {1u, 2u, 3u})
        for (const laws::Result& r : laws::run(seed, 1000)) {
            CAPTURE(r.name);
            CAPTURE(seed);
            CHECK(r.failures == 0);
        }
}

TEST_CASE("scalarization bound 2c needs c >= 0")
{
    // d = 1, A = [-1,-1], c = -1: dot(d,A) = [-1,-1] <= [c,c] but d.W(A) = -1 > 2c
    const IVector a{Interval(-1, -1)};
    const RealVector d{1};
    const double c = -1;
    CHECK(precedes(dot(d, a), Interval(c)));
    const double s = d[0] * w_map(a)[0];
    CHECK(s == -1);
    CHECK(s > 2 * c);
    CHECK(s <= dot(d, a).hi());
}

TEST_CASE("finite W-map forces finite endpoints")
{
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Interval(0, inf), Error);
    CHECK_THROWS_AS(Interval(-inf, 0), Error);
    CHECK_THROWS_AS(Interval(std::nan(""), 0), Error);
    laws::Gen g{std::mt19937_64(5)};
    for (int t = 0; t < 200; ++t) {
        const IVector a = g.ivector(g.dim());
        CHECK(std::isfinite(vec_norm(a)));
        for (double v : w_map(a))
            CHECK(std::isfinite(v));
    }
}

TEST_CASE("dot is permutation invariant up to rounding")
{
    laws::Gen g{std::mt19937_64(6)};
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = g.dim() + 2;
        const IVector a = g.ivector(n);
        const RealVector d = g.reals(n);
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), g.rng);
        std::vector<Interval> pa;
        RealVector pd;
        double scale = 0;
        for (std::size_t i : perm) {
            pa.push_back(a[i]);
            pd.push_back(d[i]);
            scale += std::abs(d[i]) * norm(a[i]);
        }
        const Interval x = dot(d, a);
        const Interval y = dot(pd, IVector(pa));
        const double tol = 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
        CHECK(std::abs(x.lo() - y.lo()) <= tol);
        CHECK(std::abs(x.hi() - y.hi()) <= tol);
    }
}

TEST_CASE("W-map weights")
{
    const IVector a{Interval(1, 3), Interval(-2, 0)};
    CHECK(w_map(a) == RealVector{2, -1});
    CHECK(w_map(a, WMapConfig::from_w(1)) == RealVector{1, -2});
    CHECK_THROWS_AS(w_map(a, WMapConfig{0.7, 0.7}), Error);
}

}
