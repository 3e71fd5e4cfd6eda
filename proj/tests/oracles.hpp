#pragma once

// Independent reference computations used to cross-check the library.
// They avoid the library's closed-form endpoint formulas: products and
// quotients are enumerated over dense samples of the operands, gH-differences
// are found by solving the defining equations directly.

#include "ghsub/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace oracle {

inline std::vector<double> samples(const ghsub::Interval& a, int n = 40)
{
    std::vector<double> v;
    for (int i = 0; i <= n; ++i)
        v.push_back(a.lo() + (a.hi() - a.lo()) * i / n);
    v.back() = a.hi();
    return v;
}

template <class Op>
ghsub::Interval image(const ghsub::Interval& a, const ghsub::Interval& b, Op op)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double x : samples(a))
        for (double y : samples(b)) {
            const double z = op(x, y);
            lo = std::min(lo, z);
            hi = std::max(hi, z);
        }
    return {lo, hi};
}

// C with A = B ⊕ C, or B = A ⊕ (−1)⊙C.
inline ghsub::Interval gh_solve(const ghsub::Interval& a, const ghsub::Interval& b)
{
    const double c1 = a.lo() - b.lo();
    const double c2 = a.hi() - b.hi();
    if (c1 <= c2)
        return {c1, c2}; // first case: B ⊕ [c1,c2] = A
    return {c2, c1};     // second case: A ⊕ (−1)[c2,c1] = [a.lo−c1, a.hi−c2] = B
}

// Every point of the set {λ·a : a ∈ A}.
inline ghsub::Interval scaled(double lam, const ghsub::Interval& a)
{
    return image(ghsub::Interval(lam), a, [](double l, double x) { return l * x; });
}

inline bool close(const ghsub::Interval& a, const ghsub::Interval& b, double tol)
{
    return std::abs(a.lo() - b.lo()) <= tol && std::abs(a.hi() - b.hi()) <= tol;
}

} // namespace oracle
