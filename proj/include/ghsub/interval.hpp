#pragma once

#include <string>
#include <string_view>

namespace ghsub {

// Compact interval [lo, hi] with finite endpoints. Immutable.
class Interval {
public:
    constexpr Interval() = default;
    Interval(double lo, double hi);
    explicit Interval(double value);

    static Interval degenerate(double value) { return Interval(value); }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    double mid() const noexcept { return 0.5 * (lo_ + hi_); }
    bool is_degenerate() const noexcept { return lo_ == hi_; }
    bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline const Interval ZERO{};

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
Interval div(const Interval& a, const Interval& b);
Interval gh_diff(const Interval& a, const Interval& b);
Interval scalar_mul(double lam, const Interval& a);
double norm(const Interval& a);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator*(double lam, const Interval& a) { return scalar_mul(lam, a); }

enum class Dominance {
    DOMINATES,
    STRICTLY_DOMINATES,
    DOMINATED,
    STRICTLY_DOMINATED,
    EQUAL,
    INCOMPARABLE,
};

std::string_view to_string(Dominance d) noexcept;

// Relation of a to b: DOMINATES / STRICTLY_DOMINATES mean a ⪯ b / a ≺ b.
// Endpoints closer than tol count as equal.
Dominance compare(const Interval& a, const Interval& b, double tol = 0.0);

// a ⪯ b, each endpoint allowed to exceed by at most tol.
bool precedes(const Interval& a, const Interval& b, double tol = 0.0);
// a ≺ b (exact).
bool strictly_precedes(const Interval& a, const Interval& b);

// Shortest decimal text that parses back to the same double.
std::string format_real(double v);
double parse_real(std::string_view text);

// "[lo,hi]"; whitespace around tokens allowed. A bare number parses as degenerate.
std::string format(const Interval& a);
Interval parse_interval(std::string_view text);

} // namespace ghsub
