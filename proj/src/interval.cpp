#include "ghsub/interval.hpp"

#include "ghsub/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <system_error>

namespace ghsub {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw Error(ErrorCode::InvalidInterval, "non-finite endpoint");
    if (lo > hi)
        throw Error(ErrorCode::InvalidInterval, "lo > hi in [" + format_real(lo) + "," + format_real(hi) + "]");
}

Interval::Interval(double value) : Interval(value, value) {}

Interval add(const Interval& a, const Interval& b)
{
    return {a.lo() + b.lo(), a.hi() + b.hi()};
}

Interval sub(const Interval& a, const Interval& b)
{
    return {a.lo() - b.hi(), a.hi() - b.lo()};
}

Interval mul(const Interval& a, const Interval& b)
{
    const double p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn + 0.0, *mx + 0.0};
}

Interval div(const Interval& a, const Interval& b)
{
    if (b.lo() <= 0.0 && 0.0 <= b.hi())
        throw Error(ErrorCode::ZeroInDenominator, "divisor " + format(b) + " contains 0");
    const double q[4] = {a.lo() / b.lo(), a.lo() / b.hi(), a.hi() / b.lo(), a.hi() / b.hi()};
    auto [mn, mx] = std::minmax_element(std::begin(q), std::end(q));
    return {*mn + 0.0, *mx + 0.0};
}

Interval gh_diff(const Interval& a, const Interval& b)
{
    const double l = a.lo() - b.lo();
    const double h = a.hi() - b.hi();
    return {std::min(l, h), std::max(l, h)};
}

Interval scalar_mul(double lam, const Interval& a)
{
    if (lam >= 0.0)
        return {lam * a.lo() + 0.0, lam * a.hi() + 0.0};
    return {lam * a.hi() + 0.0, lam * a.lo() + 0.0};
}

double norm(const Interval& a)
{
    return std::max(std::abs(a.lo()), std::abs(a.hi()));
}

std::string_view to_string(Dominance d) noexcept
{
    switch (d) {
    case Dominance::DOMINATES: return "DOMINATES";
    case Dominance::STRICTLY_DOMINATES: return "STRICTLY_DOMINATES";
    case Dominance::DOMINATED: return "DOMINATED";
    case Dominance::STRICTLY_DOMINATED: return "STRICTLY_DOMINATED";
    case Dominance::EQUAL: return "EQUAL";
    case Dominance::INCOMPARABLE: return "INCOMPARABLE";
    }
    return "UNKNOWN";
}

namespace {

// -1, 0, +1 with |x - y| <= tol treated as equal
int cmp(double x, double y, double tol)
{
    if (std::abs(x - y) <= tol)
        return 0;
    return x < y ? -1 : 1;
}

} // namespace

Dominance compare(const Interval& a, const Interval& b, double tol)
{
    const int l = cmp(a.lo(), b.lo(), tol);
    const int h = cmp(a.hi(), b.hi(), tol);
    if (l == 0 && h == 0)
        return Dominance::EQUAL;
    // a ⪯ b with a != b always has a strict endpoint, so the non-strict
    // kinds never come out of this function.
    if (l <= 0 && h <= 0)
        return Dominance::STRICTLY_DOMINATES;
    if (l >= 0 && h >= 0)
        return Dominance::STRICTLY_DOMINATED;
    return Dominance::INCOMPARABLE;
}

bool precedes(const Interval& a, const Interval& b, double tol)
{
    return a.lo() <= b.lo() + tol && a.hi() <= b.hi() + tol;
}

bool strictly_precedes(const Interval& a, const Interval& b)
{
    return precedes(a, b) && (a.lo() < b.lo() || a.hi() < b.hi());
}

std::string format_real(double v)
{
    char buf[64];
    auto res = std::to_chars(std::begin(buf), std::end(buf), v + 0.0);
    return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

double parse_real(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ParseError("invalid number '" + std::string(text) + "'", 0, 1);
    return v;
}

std::string format(const Interval& a)
{
    return "[" + format_real(a.lo()) + "," + format_real(a.hi()) + "]";
}

Interval parse_interval(std::string_view text)
{
    const std::string_view t = trim(text);
    if (t.empty() || t.front() != '[')
        return Interval(parse_real(t));
    if (t.back() != ']')
        throw ParseError("missing ']' in '" + std::string(t) + "'", 0, t.size());
    const std::string_view body = t.substr(1, t.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
        throw ParseError("expected exactly one ',' in '" + std::string(t) + "'", 0, 1);
    return Interval(parse_real(body.substr(0, comma)), parse_real(body.substr(comma + 1)));
}

} // namespace ghsub
