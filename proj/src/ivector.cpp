#include "ghsub/ivector.hpp"

#include "ghsub/error.hpp"

#include <cctype>
#include <cmath>

namespace ghsub {

IVector::IVector(std::vector<Interval> components) : c_(std::move(components))
{
    if (c_.empty())
        throw Error(ErrorCode::InvalidArgument, "interval vector needs at least one component");
}

IVector::IVector(std::initializer_list<Interval> components) : IVector(std::vector<Interval>(components)) {}

IVector IVector::zeros(std::size_t n)
{
    return IVector(std::vector<Interval>(n, ZERO));
}

namespace {

void require_same_length(std::size_t a, std::size_t b)
{
    if (a != b)
        throw Error(ErrorCode::LengthMismatch,
                    "lengths " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

} // namespace

IVector vec_op(const IVector& a, const IVector& b, VecOp star)
{
    require_same_length(a.size(), b.size());
    std::vector<Interval> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        switch (star) {
        case VecOp::ADD: out.push_back(add(a[i], b[i])); break;
        case VecOp::SUB: out.push_back(sub(a[i], b[i])); break;
        case VecOp::GH_SUB: out.push_back(gh_diff(a[i], b[i])); break;
        }
    }
    return IVector(std::move(out));
}

double vec_norm(const IVector& a)
{
    double s = 0.0;
    for (const auto& c : a.components()) {
        const double n = norm(c);
        s += n * n;
    }
    return std::sqrt(s);
}

Interval dot(std::span<const double> d, const IVector& a)
{
    require_same_length(d.size(), a.size());
    Interval acc = ZERO;
    for (std::size_t i = 0; i < d.size(); ++i)
        acc = add(acc, scalar_mul(d[i], a[i]));
    return acc;
}

void WMapConfig::validate() const
{
    if (!(w >= 0.0 && w <= 1.0 && w_prime >= 0.0 && w_prime <= 1.0) || std::abs(w + w_prime - 1.0) > 1e-12)
        throw Error(ErrorCode::InvalidWeights,
                    "weights must lie in [0,1] and sum to 1, got w=" + format_real(w) + " w'=" + format_real(w_prime));
}

double w_map(const Interval& a, const WMapConfig& cfg)
{
    return cfg.w * a.lo() + cfg.w_prime * a.hi();
}

RealVector w_map(const IVector& a, const WMapConfig& cfg)
{
    cfg.validate();
    RealVector out;
    out.reserve(a.size());
    for (const auto& c : a.components())
        out.push_back(w_map(c, cfg));
    return out;
}

VecOrder vec_compare(const IVector& a, const IVector& b)
{
    require_same_length(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!precedes(a[i], b[i]))
            return VecOrder::NOT_LEQ;
    return VecOrder::LEQ;
}

double gh_distance(const IVector& a, const IVector& b)
{
    return vec_norm(vec_op(a, b, VecOp::GH_SUB));
}

std::string format(const IVector& a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ",";
        s += format(a[i]);
    }
    return s + ")";
}

std::string format(std::span<const double> x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            s += ",";
        s += format_real(x[i]);
    }
    return s + ")";
}

std::string format_csv_row(const IVector& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ",";
        s += format_real(a[i].lo()) + "," + format_real(a[i].hi());
    }
    return s;
}

IVector parse_ivector(std::string_view text)
{
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    std::string_view t = text.substr(b, e - b);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')')
            throw ParseError("missing ')' in interval vector", 0, t.size());
        t = t.substr(1, t.size() - 2);
    }
    std::vector<Interval> parts;
    std::size_t pos = 0;
    while (pos < t.size()) {
        while (pos < t.size() && (std::isspace(static_cast<unsigned char>(t[pos])) || t[pos] == ','))
            ++pos;
        if (pos >= t.size())
            break;
        std::size_t end;
        if (t[pos] == '[') {
            end = t.find(']', pos);
            if (end == std::string_view::npos)
                throw ParseError("missing ']' in interval vector", 0, pos + 1);
            ++end;
        } else {
            end = t.find(',', pos);
            if (end == std::string_view::npos)
                end = t.size();
        }
        parts.push_back(parse_interval(t.substr(pos, end - pos)));
        pos = end;
    }
    if (parts.empty())
        throw ParseError("empty interval vector", 0, 1);
    return IVector(std::move(parts));
}

} // namespace ghsub
