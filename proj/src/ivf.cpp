#include "ghsub/ivf.hpp"

#include "ghsub/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace ghsub {

namespace {

double domain_slack(const Interval& axis)
{
    return 1e-12 * (1.0 + norm(axis));
}

} // namespace

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes))
{
    if (axes_.empty())
        throw Error(ErrorCode::InvalidArgument, "box needs at least one axis");
}

bool Box::contains(std::span<const double> x) const
{
    if (x.size() != axes_.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double s = domain_slack(axes_[i]);
        if (!(x[i] >= axes_[i].lo() - s && x[i] <= axes_[i].hi() + s))
            return false;
    }
    return true;
}

RealVector Box::project(std::span<const double> x) const
{
    if (x.size() != axes_.size())
        throw Error(ErrorCode::DimensionMismatch, "point and box dimensions differ");
    RealVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::clamp(out[i], axes_[i].lo(), axes_[i].hi());
    return out;
}

Box Box::intersect(const Box& other) const
{
    if (other.dim() != dim())
        throw Error(ErrorCode::DimensionMismatch, "box dimensions differ");
    std::vector<Interval> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        const double lo = std::max(axes_[i].lo(), other[i].lo());
        const double hi = std::min(axes_[i].hi(), other[i].hi());
        if (lo > hi)
            throw Error(ErrorCode::InvalidArgument, "boxes do not intersect");
        out.emplace_back(lo, hi);
    }
    return Box(std::move(out));
}

std::string format(const Box& b)
{
    std::string s;
    for (std::size_t i = 0; i < b.dim(); ++i)
        s += (i ? "," : "") + format(b[i]);
    return s;
}

Box parse_box(std::string_view text)
{
    return Box(parse_ivector(text).components());
}

Grid::Grid(Box box, std::vector<std::size_t> counts) : box_(std::move(box)), counts_(std::move(counts)), size_(1)
{
    if (counts_.size() != box_.dim())
        throw Error(ErrorCode::DimensionMismatch, "grid needs one sample count per axis");
    for (std::size_t c : counts_) {
        if (c < 2)
            throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 samples per axis");
        size_ *= c;
    }
}

Grid::Grid(Box box, std::size_t per_axis) : Grid(box, std::vector<std::size_t>(box.dim(), per_axis)) {}

double Grid::step(std::size_t axis) const
{
    return box_[axis].width() / static_cast<double>(counts_[axis] - 1);
}

double Grid::coordinate(std::size_t axis, std::size_t k) const
{
    const Interval& a = box_[axis];
    if (k + 1 == counts_[axis])
        return a.hi();
    return a.lo() + static_cast<double>(k) * a.width() / static_cast<double>(counts_[axis] - 1);
}

RealVector Grid::point(std::size_t flat) const
{
    RealVector x(dim());
    for (std::size_t i = dim(); i-- > 0;) {
        x[i] = coordinate(i, flat % counts_[i]);
        flat /= counts_[i];
    }
    return x;
}

std::vector<RealVector> Grid::points() const
{
    std::vector<RealVector> out;
    out.reserve(size_);
    for (std::size_t k = 0; k < size_; ++k)
        out.push_back(point(k));
    return out;
}

Ivf::Ivf(std::size_t arity, Expr body, Box domain) : arity_(arity), body_(std::move(body)), domain_(std::move(domain))
{
    if (arity_ == 0)
        throw Error(ErrorCode::InvalidArgument, "arity must be at least 1");
    if (domain_.dim() != arity_)
        throw Error(ErrorCode::ArityMismatch, "domain has " + std::to_string(domain_.dim()) + " axes but arity is " +
                                                  std::to_string(arity_));
    if (body_.min_arity() > arity_)
        throw Error(ErrorCode::ArityMismatch, "expression reads x" + std::to_string(body_.min_arity()) +
                                                  " but arity is " + std::to_string(arity_));
}

Ivf Ivf::parse(std::size_t arity, std::string_view text, Box domain)
{
    return Ivf(arity, parse_expr(text), std::move(domain));
}

Interval Ivf::eval(std::span<const double> x) const
{
    if (x.size() != arity_)
        throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(x.size()) + " coordinates, arity is " +
                                                  std::to_string(arity_));
    if (!domain_.contains(x))
        throw Error(ErrorCode::OutOfDomain, "x=" + format(x) + " outside " + format(domain_));
    return body_.eval(x);
}

std::pair<double, double> boundary(const Ivf& f, std::span<const double> x)
{
    const Interval v = f.eval(x);
    return {v.lo(), v.hi()};
}

GridSamples sample(const Ivf& f, const Grid& grid)
{
    if (grid.dim() != f.arity())
        throw Error(ErrorCode::DimensionMismatch, "grid and function dimensions differ");
    GridSamples s;
    s.points = grid.points();
    s.values.reserve(s.points.size());
    for (const auto& p : s.points)
        s.values.push_back(f.eval(p));
    return s;
}

double euclidean_norm(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

namespace {

constexpr double kStepScale = 1e-4;
constexpr double kKinkTol = 1e-6;

struct Pt {
    double lo;
    double hi;
};

// Boundary values along one axis through x.
class AxisSlice {
public:
    AxisSlice(const Ivf& f, std::span<const double> x, std::size_t axis) : f_(f), x_(x.begin(), x.end()), axis_(axis)
    {
        if (axis >= f.arity())
            throw Error(ErrorCode::InvalidArgument, "axis " + std::to_string(axis) + " out of range");
        if (!f.domain().contains(x))
            throw Error(ErrorCode::OutOfDomain, "x=" + format(x) + " outside " + format(f.domain()));
    }

    Pt at(double offset) const
    {
        RealVector y = x_;
        y[axis_] += offset;
        const Interval v = f_.eval(y);
        return {v.lo(), v.hi()};
    }

    double coord() const { return x_[axis_]; }
    double room_left() const { return std::max(0.0, x_[axis_] - f_.domain()[axis_].lo()); }
    double room_right() const { return std::max(0.0, f_.domain()[axis_].hi() - x_[axis_]); }

private:
    const Ivf& f_;
    RealVector x_;
    std::size_t axis_;
};

// Forward (sign=+1) or backward (sign=-1) quotient, two Richardson levels.
Pt one_sided_slope(const AxisSlice& s, double h, double sign)
{
    const Pt g0 = s.at(0.0);
    double lo[3];
    double hi[3];
    for (int k = 0; k < 3; ++k) {
        const double step = h / static_cast<double>(1 << k);
        const Pt g = s.at(sign * step);
        lo[k] = sign * (g.lo - g0.lo) / step;
        hi[k] = sign * (g.hi - g0.hi) / step;
    }
    auto rich = [](const double* a) {
        const double r0 = 2.0 * a[1] - a[0];
        const double r1 = 2.0 * a[2] - a[1];
        return (4.0 * r1 - r0) / 3.0;
    };
    return {rich(lo), rich(hi)};
}

Pt central_slope(const AxisSlice& s, double h)
{
    double lo[3];
    double hi[3];
    for (int k = 0; k < 3; ++k) {
        const double step = h / static_cast<double>(1 << k);
        const Pt p = s.at(step);
        const Pt m = s.at(-step);
        lo[k] = (p.lo - m.lo) / (2.0 * step);
        hi[k] = (p.hi - m.hi) / (2.0 * step);
    }
    auto rich = [](const double* a) {
        const double r0 = (4.0 * a[1] - a[0]) / 3.0;
        const double r1 = (4.0 * a[2] - a[1]) / 3.0;
        return (16.0 * r1 - r0) / 15.0;
    };
    return {rich(lo), rich(hi)};
}

Interval fold(const Pt& p, double where)
{
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi))
        throw Error(ErrorCode::NonFiniteDerivative, "difference quotients diverge at coordinate " + format_real(where));
    return {std::min(p.lo, p.hi), std::max(p.lo, p.hi)};
}

bool slopes_disagree(double a, double b)
{
    return std::abs(a - b) > kKinkTol * (1.0 + std::abs(a) + std::abs(b));
}

} // namespace

DerivativeEstimate estimate_partial(const Ivf& f, std::span<const double> x, std::size_t axis)
{
    const AxisSlice s(f, x, axis);
    const double h0 = kStepScale * (1.0 + std::abs(s.coord()));
    const double rl = s.room_left();
    const double rr = s.room_right();
    if (rl >= h0 && rr >= h0) {
        const Pt left = one_sided_slope(s, h0, -1.0);
        const Pt right = one_sided_slope(s, h0, +1.0);
        if (!slopes_disagree(left.lo, right.lo) && !slopes_disagree(left.hi, right.hi))
            return {fold(central_slope(s, h0), s.coord()), false};
        // boundary slopes swap across x: the one-sided gH quotients can still agree
        const Interval l = fold(left, s.coord());
        const Interval r = fold(right, s.coord());
        if (slopes_disagree(l.lo(), r.lo()) || slopes_disagree(l.hi(), r.hi()))
            throw Error(ErrorCode::NonFiniteDerivative, "one-sided gH quotients disagree along axis " +
                                                            std::to_string(axis + 1) + " at x=" + format(x) + " (left " +
                                                            format(l) + ", right " + format(r) + ")");
        return {Interval(0.5 * (l.lo() + r.lo()), 0.5 * (l.hi() + r.hi())), false};
    }
    if (rl == 0.0 && rr == 0.0)
        throw Error(ErrorCode::InvalidArgument, "degenerate domain along axis " + std::to_string(axis + 1));
    const bool go_right = rr >= rl;
    const double h = std::min(h0, go_right ? rr : rl);
    return {fold(one_sided_slope(s, h, go_right ? 1.0 : -1.0), s.coord()), true};
}

OneSidedPair one_sided_partials(const Ivf& f, std::span<const double> x, std::size_t axis)
{
    const AxisSlice s(f, x, axis);
    const double h0 = kStepScale * (1.0 + std::abs(s.coord()));
    OneSidedPair out;
    if (s.room_left() > 0.0)
        out.left = fold(one_sided_slope(s, std::min(h0, s.room_left()), -1.0), s.coord());
    if (s.room_right() > 0.0)
        out.right = fold(one_sided_slope(s, std::min(h0, s.room_right()), +1.0), s.coord());
    return out;
}

Interval partial_gh_derivative(const Ivf& f, std::span<const double> x, std::size_t axis)
{
    return estimate_partial(f, x, axis).value;
}

Interval gh_derivative_1d(const Ivf& f, double x)
{
    if (f.arity() != 1)
        throw Error(ErrorCode::ArityMismatch, "gh_derivative_1d needs arity 1");
    return partial_gh_derivative(f, std::span<const double>(&x, 1), 0);
}

IVector gh_gradient(const Ivf& f, std::span<const double> x)
{
    std::vector<Interval> g;
    g.reserve(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i)
        g.push_back(partial_gh_derivative(f, x, i));
    return IVector(std::move(g));
}

Interval directional_gh_derivative(const Ivf& f, std::span<const double> x, std::span<const double> h,
                                   const DirectionalConfig& cfg)
{
    if (h.size() != f.arity() || x.size() != f.arity())
        throw Error(ErrorCode::ArityMismatch, "point/direction length differs from arity");
    const Interval base = f.eval(x);
    if (euclidean_norm(h) == 0.0)
        return ZERO;
    auto shifted = [&](double lam) {
        RealVector y(x.begin(), x.end());
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] += lam * h[i];
        return y;
    };
    auto inside = [&](double lam) {
        const RealVector y = shifted(lam);
        for (std::size_t i = 0; i < y.size(); ++i)
            if (y[i] < f.domain()[i].lo() || y[i] > f.domain()[i].hi())
                return false;
        return true;
    };
    double lam0 = cfg.lambda0;
    for (int i = 0; i < 30 && !inside(lam0); ++i)
        lam0 *= 0.5;
    if (!inside(lam0))
        throw Error(ErrorCode::OutOfDomain, "direction " + format(h) + " leaves the domain at x=" + format(x));

    const double r = cfg.ratio;
    double prev_lo = 0.0;
    double prev_hi = 0.0;
    std::optional<Interval> prev_est;
    double lam = lam0;
    for (int k = 0; k <= cfg.max_refinements; ++k, lam *= r) {
        const Interval v = f.eval(shifted(lam));
        const double q_lo = (v.lo() - base.lo()) / lam;
        const double q_hi = (v.hi() - base.hi()) / lam;
        if (k > 0) {
            const double r_lo = (q_lo - r * prev_lo) / (1.0 - r);
            const double r_hi = (q_hi - r * prev_hi) / (1.0 - r);
            if (!std::isfinite(r_lo) || !std::isfinite(r_hi))
                break;
            const Interval est(std::min(r_lo, r_hi), std::max(r_lo, r_hi));
            if (prev_est && norm(gh_diff(est, *prev_est)) < cfg.tol)
                return est;
            prev_est = est;
        }
        prev_lo = q_lo;
        prev_hi = q_hi;
    }
    throw Error(ErrorCode::NoConvergence, "directional derivative did not settle at x=" + format(x) + " h=" + format(h));
}

namespace {

RealVector blend(const RealVector& a, const RealVector& b, double lam)
{
    RealVector z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        z[i] = lam * a[i] + (1.0 - lam) * b[i];
    return z;
}

} // namespace

ConvexityResult is_convex_sampled(const Ivf& f, const Grid& grid, const std::vector<double>& lambdas, double slack)
{
    const GridSamples s = sample(f, grid);
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        for (std::size_t j = i + 1; j < s.points.size(); ++j) {
            for (double lam : lambdas) {
                const Interval lhs = f.eval(blend(s.points[i], s.points[j], lam));
                const Interval rhs = add(scalar_mul(lam, s.values[i]), scalar_mul(1.0 - lam, s.values[j]));
                if (!precedes(lhs, rhs, slack))
                    return {false, ConvexityWitness{s.points[i], s.points[j], lam, lhs, rhs}};
            }
        }
    }
    return {};
}

bool is_boundary_convex_sampled(const Ivf& f, const Grid& grid, int which, const std::vector<double>& lambdas,
                                double slack)
{
    const GridSamples s = sample(f, grid);
    auto pick = [which](const Interval& v) { return which == 0 ? v.lo() : v.hi(); };
    for (std::size_t i = 0; i < s.points.size(); ++i)
        for (std::size_t j = i + 1; j < s.points.size(); ++j)
            for (double lam : lambdas) {
                const double lhs = pick(f.eval(blend(s.points[i], s.points[j], lam)));
                const double rhs = lam * pick(s.values[i]) + (1.0 - lam) * pick(s.values[j]);
                if (lhs > rhs + slack)
                    return false;
            }
    return true;
}

std::vector<double> default_radii()
{
    std::vector<double> r;
    for (int k = 1; k <= 10; ++k)
        r.push_back(std::pow(10.0, -k));
    return r;
}

bool is_gh_continuous_at(const Ivf& f, std::span<const double> x, double tol, const std::vector<double>& radii)
{
    const Interval base = f.eval(x);
    const std::size_t n = f.arity();
    std::vector<RealVector> dirs;
    for (std::size_t i = 0; i < n; ++i) {
        RealVector e(n, 0.0);
        e[i] = 1.0;
        dirs.push_back(e);
        e[i] = -1.0;
        dirs.push_back(e);
    }
    if (n > 1) {
        const double c = 1.0 / std::sqrt(static_cast<double>(n));
        dirs.emplace_back(n, c);
        dirs.emplace_back(n, -c);
    }
    std::optional<double> last;
    for (double r : radii) {
        double worst = -1.0;
        for (const auto& d : dirs) {
            RealVector y(x.begin(), x.end());
            for (std::size_t i = 0; i < n; ++i)
                y[i] += r * d[i];
            if (!f.domain().contains(y))
                continue;
            worst = std::max(worst, norm(gh_diff(f.eval(y), base)));
        }
        if (worst >= 0.0)
            last = worst;
    }
    return !last || *last <= tol;
}

double lipschitz_estimate(const Ivf& f, const Grid& grid)
{
    const GridSamples s = sample(f, grid);
    double best = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i)
        for (std::size_t j = i + 1; j < s.points.size(); ++j) {
            RealVector d(s.points[i].size());
            for (std::size_t k = 0; k < d.size(); ++k)
                d[k] = s.points[i][k] - s.points[j][k];
            const double dist = euclidean_norm(d);
            if (dist > 0.0)
                best = std::max(best, norm(gh_diff(s.values[i], s.values[j])) / dist);
        }
    return best;
}

} // namespace ghsub
