#include "runners.hpp"

#include "ghsub/ivector.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <string>

namespace ghsub::tools {

namespace {

struct Gen {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> u{-10.0, 10.0};

    double real() { return u(rng); }
    Interval interval()
    {
        const double a = real();
        const double b = real();
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
};

bool near(double a, double b, double tol = 1e-12)
{
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

} // namespace

bool run_properties(std::ostream& out, std::uint64_t seed, int trials)
{
    Gen g{std::mt19937_64(seed)};
    bool ok = true;
    auto law = [&](const std::string& name, const std::function<bool()>& trial) {
        int failures = 0;
        for (int t = 0; t < trials; ++t)
            if (!trial())
                ++failures;
        out << (failures == 0 ? "PASS " : "FAIL ") << name << " (" << failures << "/" << trials << " failures)\n";
        ok = ok && failures == 0;
    };

    law("A gh- A = [0,0]", [&] {
        const Interval a = g.interval();
        return gh_diff(a, a) == ZERO;
    });
    law("A - B = A + (-1)B", [&] {
        const Interval a = g.interval(), b = g.interval();
        return sub(a, b) == add(a, scalar_mul(-1.0, b));
    });
    law("interval norm: homogeneity and triangle", [&] {
        const Interval a = g.interval(), b = g.interval();
        const double l = g.real();
        return near(norm(scalar_mul(l, a)), std::abs(l) * norm(a)) && norm(add(a, b)) <= norm(a) + norm(b) + 1e-12;
    });
    law("vector norm: homogeneity and triangle", [&] {
        const IVector a = g.ivector(4), b = g.ivector(4);
        const double l = g.real();
        std::vector<Interval> la;
        for (const auto& c : a.components())
            la.push_back(scalar_mul(l, c));
        return near(vec_norm(IVector(la)), std::abs(l) * vec_norm(a)) &&
               vec_norm(vec_op(a, b, VecOp::ADD)) <= (vec_norm(a) + vec_norm(b)) * (1 + 1e-12);
    });
    law("dominance is transitive", [&] {
        const Interval a = g.interval();
        const Interval b(a.lo() + std::abs(g.real()), a.hi() + std::abs(g.real()) + 20.0);
        const Interval c(b.lo() + std::abs(g.real()), b.hi() + std::abs(g.real()));
        return precedes(a, b) && precedes(b, c) && precedes(a, c);
    });
    law("dot(x, A) within |x|*|A|", [&] {
        const IVector a = g.ivector(3);
        const RealVector x = g.reals(3);
        double nx = 0.0;
        for (double v : x)
            nx += v * v;
        const double bound = std::sqrt(nx) * vec_norm(a);
        return precedes(dot(x, a), Interval(bound), 1e-9);
    });
    return ok;
}

} // namespace ghsub::tools
