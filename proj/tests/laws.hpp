#pragma once

// Randomized algebraic laws shared by the property suite and the acceptance
// binary. Each law reports how many of its trials failed.

#include "ghsub/interval.hpp"
#include "ghsub/ivector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace laws {

using ghsub::Interval;
using ghsub::IVector;
using ghsub::RealVector;

struct Gen {
    std::mt19937_64 rng;

    double real(double span = 10.0) { return std::uniform_real_distribution<double>(-span, span)(rng); }
    // small integers make ties and dominance chains common
    double coarse() { return static_cast<double>(std::uniform_int_distribution<int>(-3, 3)(rng)); }
    Interval interval()
    {
        const bool c = rng() % 2 == 0;
        const double a = c ? coarse() : real();
        const double b = c ? coarse() : real();
        return {std::min(a, b), std::max(a, b)};
    }
    IVector ivector(std::size_t n)
    {
        std::vector<Interval> c;
        for (std::size_t i = 0; i < n; ++i)
            c.push_back(interval());
        return IVector(std::move(c));
    }
    RealVector reals(std::size_t n)
    {
        RealVector v(n);
        for (auto& x : v)
            x = real();
        return v;
    }
    std::size_t dim() { return 1 + rng() % 5; }
};

struct Result {
    std::string name;
    int failures = 0;
    int trials = 0;
};

inline bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b)); }

inline double euclid(const RealVector& x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

inline IVector scaled(double l, const IVector& a)
{
    std::vector<Interval> c;
    for (const auto& x : a.components())
        c.push_back(ghsub::scalar_mul(l, x));
    return IVector(std::move(c));
}

// ⪯ written out endpoint by endpoint, independent of the library's compare
inline bool le(const Interval& a, const Interval& b) { return a.lo() <= b.lo() && a.hi() <= b.hi(); }
inline bool lt(const Interval& a, const Interval& b) { return le(a, b) && !(a == b); }

inline std::vector<Result> run(std::uint64_t seed, int trials)
{
    using namespace ghsub;
    Gen g{std::mt19937_64(seed)};
    std::vector<Result> out;
    auto law = [&](std::string name, const std::function<bool()>& trial) {
        Result r{std::move(name), 0, trials};
        for (int t = 0; t < trials; ++t)
            r.failures += trial() ? 0 : 1;
        out.push_back(r);
    };

    law("gh_diff(A,A) = [0,0]", [&] {
        const Interval a = g.interval();
        return gh_diff(a, a) == ZERO;
    });
    law("sub(A,B) = add(A,(-1)B)", [&] {
        const Interval a = g.interval(), b = g.interval();
        return sub(a, b) == add(a, scalar_mul(-1.0, b));
    });
    law("interval norm: nonnegative, zero only at [0,0]", [&] {
        const Interval a = g.interval();
        return norm(a) >= 0 && (norm(a) == 0) == (a == ZERO) && norm(ZERO) == 0;
    });
    law("interval norm: homogeneous", [&] {
        const Interval a = g.interval();
        const double l = g.real();
        return near(norm(scalar_mul(l, a)), std::abs(l) * norm(a));
    });
    law("interval norm: triangle inequality (Moore sum and gH-difference)", [&] {
        const Interval a = g.interval(), b = g.interval();
        return norm(add(a, b)) <= norm(a) + norm(b) + 1e-12 && norm(gh_diff(a, b)) <= norm(a) + norm(b) + 1e-12;
    });
    law("vector norm: nonnegative, zero only at 0", [&] {
        const std::size_t n = g.dim();
        const IVector a = g.ivector(n);
        bool zero = true;
        for (const auto& c : a.components())
            zero = zero && c == ZERO;
        return vec_norm(a) >= 0 && (vec_norm(a) == 0) == zero && vec_norm(IVector::zeros(n)) == 0;
    });
    law("vector norm: homogeneous", [&] {
        const IVector a = g.ivector(g.dim());
        const double l = g.real();
        return near(vec_norm(scaled(l, a)), std::abs(l) * vec_norm(a));
    });
    law("vector norm: triangle inequality", [&] {
        const std::size_t n = g.dim();
        const IVector a = g.ivector(n), b = g.ivector(n);
        return vec_norm(vec_op(a, b, VecOp::ADD)) <= (vec_norm(a) + vec_norm(b)) * (1 + 1e-12);
    });
    law("dominance: reflexive", [&] {
        const Interval a = g.interval();
        return precedes(a, a) && !strictly_precedes(a, a) && compare(a, a) == Dominance::EQUAL;
    });
    law("dominance: antisymmetric", [&] {
        const Interval a = g.interval(), b = g.interval();
        return !(precedes(a, b) && precedes(b, a)) || a == b;
    });
    law("dominance: transitive", [&] {
        const Interval a = g.interval(), b = g.interval(), c = g.interval();
        const bool weak = !(precedes(a, b) && precedes(b, c)) || precedes(a, c);
        const bool strict = !(strictly_precedes(a, b) && strictly_precedes(b, c)) || strictly_precedes(a, c);
        return weak && strict;
    });
    law("dominance: agrees with the endpoint definition", [&] {
        const Interval a = g.interval(), b = g.interval();
        const Dominance d = compare(a, b);
        const bool expect_strict = lt(a, b);
        const bool expect_strict_rev = lt(b, a);
        return precedes(a, b) == le(a, b) && strictly_precedes(a, b) == expect_strict &&
               (d == Dominance::STRICTLY_DOMINATES) == expect_strict &&
               (d == Dominance::STRICTLY_DOMINATED) == expect_strict_rev && (d == Dominance::EQUAL) == (a == b) &&
               (d == Dominance::INCOMPARABLE) == (!le(a, b) && !le(b, a));
    });
    law("scalarization: dot(d,A) <= [c,c], c >= 0 gives d.W(A) <= 2c", [&] {
        const std::size_t n = g.dim();
        const IVector a = g.ivector(n);
        const RealVector d = g.reals(n);
        const Interval p = dot(d, a);
        const double c = std::max(0.0, p.hi()) + (g.rng() % 3 == 0 ? 0.0 : std::abs(g.real()));
        const double w = std::uniform_real_distribution<double>(0, 1)(g.rng);
        const RealVector wa = w_map(a, WMapConfig::from_w(w));
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += d[i] * wa[i];
        const double tol = 1e-12 * (1 + std::abs(c) + std::abs(s));
        // d.W(A) is a point of dot(d,A), so the upper endpoint is the sharp bound
        return s <= 2 * c + tol && s <= p.hi() + tol && s >= p.lo() - tol;
    });
    law("dot bound: dot(x,A) <= |x|*[|A|,|A|]", [&] {
        const std::size_t n = g.dim();
        const IVector a = g.ivector(n);
        const RealVector x = g.reals(n);
        const double bound = euclid(x) * vec_norm(a);
        return precedes(dot(x, a), Interval(bound), 1e-12 * (1 + bound));
    });
    return out;
}

} // namespace laws
