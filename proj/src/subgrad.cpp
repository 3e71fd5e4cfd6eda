#include "ghsub/subgrad.hpp"

#include "ghsub/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace ghsub {

namespace {

void require_candidate_shape(const Ivf& f, const SubgradientCandidate& cand)
{
    if (cand.g.size() != f.arity() || cand.base_point.size() != f.arity())
        throw Error(ErrorCode::DimensionMismatch, "candidate has " + std::to_string(cand.g.size()) +
                                                      " components for an arity-" + std::to_string(f.arity()) +
                                                      " function");
}

RealVector offset(const RealVector& x, const RealVector& x_bar)
{
    RealVector d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        d[i] = x[i] - x_bar[i];
    return d;
}

double excess(const Interval& lhs, const Interval& rhs)
{
    return std::max(lhs.lo() - rhs.lo(), lhs.hi() - rhs.hi());
}

template <class Rhs>
SubgradientResult check_all(const Ivf& f, const SubgradientCandidate& cand, const GridSamples& samples, double slack,
                            Rhs rhs_of)
{
    require_candidate_shape(f, cand);
    const Interval f_bar = f.eval(cand.base_point);
    SubgradientResult r;
    r.violation = -std::numeric_limits<double>::infinity();
    std::size_t worst = 0;
    for (std::size_t k = 0; k < samples.points.size(); ++k) {
        const Interval lhs = dot(offset(samples.points[k], cand.base_point), cand.g);
        const double v = rhs_of(lhs, samples.values[k], f_bar);
        if (v > r.violation) {
            r.violation = v;
            worst = k;
        }
    }
    r.holds = r.violation <= slack;
    if (!r.holds)
        r.witness = samples.points[worst];
    return r;
}

} // namespace

SubgradientResult is_subgradient(const Ivf& f, const SubgradientCandidate& cand, const GridSamples& samples,
                                 double slack)
{
    return check_all(f, cand, samples, slack, [](const Interval& lhs, const Interval& fx, const Interval& fb) {
        return excess(lhs, gh_diff(fx, fb));
    });
}

SubgradientResult is_subgradient(const Ivf& f, const SubgradientCandidate& cand, const Grid& grid, double slack)
{
    return is_subgradient(f, cand, sample(f, grid), slack);
}

SubgradientResult is_subgradient_strict_variant(const Ivf& f, const SubgradientCandidate& cand, const Grid& grid,
                                                double slack)
{
    return check_all(f, cand, sample(f, grid), slack, [](const Interval& lhs, const Interval& fx, const Interval& fb) {
        return excess(add(lhs, fb), fx);
    });
}

double subgradient_violation(const Ivf& f, const IVector& g, const RealVector& x_bar, const GridSamples& samples)
{
    return is_subgradient(f, {g, x_bar}, samples, std::numeric_limits<double>::infinity()).violation;
}

ScanWindow window_1d(ScanAxis g_lo, ScanAxis g_hi)
{
    return ScanWindow{{g_lo, g_hi}};
}

ScanWindow default_window(const Ivf& f, const RealVector& x_bar, std::size_t cells, double half_width)
{
    ScanWindow w;
    for (std::size_t i = 0; i < f.arity(); ++i) {
        std::vector<Interval> cands;
        try {
            cands.push_back(partial_gh_derivative(f, x_bar, i));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonFiniteDerivative)
                throw;
            const OneSidedPair p = one_sided_partials(f, x_bar, i);
            if (p.left)
                cands.push_back(*p.left);
            if (p.right)
                cands.push_back(*p.right);
        }
        double lo_min = cands.front().lo(), lo_max = lo_min;
        double hi_min = cands.front().hi(), hi_max = hi_min;
        for (const auto& c : cands) {
            lo_min = std::min(lo_min, c.lo());
            lo_max = std::max(lo_max, c.lo());
            hi_min = std::min(hi_min, c.hi());
            hi_max = std::max(hi_max, c.hi());
        }
        w.axes.push_back({lo_min - half_width, lo_max + half_width, cells});
        w.axes.push_back({hi_min - half_width, hi_max + half_width, cells});
    }
    return w;
}

SubdiffRegion::SubdiffRegion(ScanWindow window, RealVector base_point)
    : window_(std::move(window)), base_(std::move(base_point))
{
    if (window_.axes.empty() || window_.axes.size() % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "scan window needs a (lo, hi) axis pair per component");
    std::size_t total = 1;
    for (const auto& a : window_.axes) {
        if (a.cells == 0 || !(a.hi > a.lo))
            throw Error(ErrorCode::InvalidArgument, "scan axis needs lo < hi and at least one cell");
        total *= a.cells;
    }
    marked_.assign(total, 0);
}

std::vector<std::size_t> SubdiffRegion::cell_index(std::size_t flat) const
{
    std::vector<std::size_t> idx(window_.axes.size());
    for (std::size_t k = idx.size(); k-- > 0;) {
        idx[k] = flat % window_.axes[k].cells;
        flat /= window_.axes[k].cells;
    }
    return idx;
}

std::size_t SubdiffRegion::flat_index(const std::vector<std::size_t>& idx) const
{
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
        flat = flat * window_.axes[k].cells + idx[k];
    return flat;
}

bool SubdiffRegion::valid(std::size_t flat) const
{
    const auto idx = cell_index(flat);
    for (std::size_t c = 0; c < dim(); ++c)
        if (window_.axes[2 * c].center(idx[2 * c]) > window_.axes[2 * c + 1].center(idx[2 * c + 1]))
            return false;
    return true;
}

IVector SubdiffRegion::center(std::size_t flat) const
{
    const auto idx = cell_index(flat);
    std::vector<Interval> comps;
    for (std::size_t c = 0; c < dim(); ++c)
        comps.emplace_back(window_.axes[2 * c].center(idx[2 * c]), window_.axes[2 * c + 1].center(idx[2 * c + 1]));
    return IVector(std::move(comps));
}

std::size_t SubdiffRegion::marked_count() const
{
    return static_cast<std::size_t>(std::count(marked_.begin(), marked_.end(), std::uint8_t{1}));
}

std::vector<std::size_t> SubdiffRegion::marked_cells() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < marked_.size(); ++k)
        if (marked_[k])
            out.push_back(k);
    return out;
}

std::vector<IVector> SubdiffRegion::marked_candidates() const
{
    std::vector<IVector> out;
    for (std::size_t k : marked_cells())
        out.push_back(center(k));
    return out;
}

std::string SubdiffRegion::to_csv() const
{
    std::string s;
    if (dim() == 1) {
        s = "g_lo,g_hi,feasible\n";
    } else {
        for (std::size_t c = 0; c < dim(); ++c)
            s += "g" + std::to_string(c + 1) + "_lo,g" + std::to_string(c + 1) + "_hi,";
        s += "feasible\n";
    }
    for (std::size_t k = 0; k < marked_.size(); ++k) {
        if (!valid(k))
            continue;
        s += format_csv_row(center(k)) + "," + (marked_[k] ? "1" : "0") + "\n";
    }
    return s;
}

namespace {

struct PreparedSamples {
    std::vector<RealVector> offsets;
    std::vector<Interval> rhs;
};

// Offsets and gH-differences, farthest points first so that most
// infeasible candidates are rejected after a few checks.
PreparedSamples prepare(const Ivf& f, const RealVector& x_bar, const GridSamples& samples)
{
    const Interval f_bar = f.eval(x_bar);
    std::vector<std::size_t> order(samples.points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> reach(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        double m = 0.0;
        for (std::size_t i = 0; i < x_bar.size(); ++i)
            m = std::max(m, std::abs(samples.points[k][i] - x_bar[i]));
        reach[k] = m;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reach[a] > reach[b]; });
    PreparedSamples p;
    for (std::size_t k : order) {
        p.offsets.push_back(offset(samples.points[k], x_bar));
        p.rhs.push_back(gh_diff(samples.values[k], f_bar));
    }
    return p;
}

bool feasible(const PreparedSamples& p, const IVector& g, double slack)
{
    for (std::size_t k = 0; k < p.offsets.size(); ++k)
        if (excess(dot(p.offsets[k], g), p.rhs[k]) > slack)
            return false;
    return true;
}

double violation(const PreparedSamples& p, const IVector& g)
{
    double v = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.offsets.size(); ++k)
        v = std::max(v, excess(dot(p.offsets[k], g), p.rhs[k]));
    return v;
}

SubdiffRegion scan_prepared(const PreparedSamples& p, const RealVector& x_bar, const ScanWindow& window, double slack)
{
    SubdiffRegion region(window, x_bar);
    for (std::size_t k = 0; k < region.cell_count(); ++k)
        if (region.valid(k) && feasible(p, region.center(k), slack))
            region.mark(k);
    return region;
}

void require_scan_shape(const Ivf& f, const RealVector& x_bar, const ScanWindow& window)
{
    if (f.arity() > 2)
        throw Error(ErrorCode::InvalidArgument, "subdifferential scans support arity 1 and 2 only");
    if (window.dim() != f.arity() || x_bar.size() != f.arity())
        throw Error(ErrorCode::DimensionMismatch, "scan window or base point does not match the arity");
}

} // namespace

SubdiffRegion subdiff_scan(const Ivf& f, const RealVector& x_bar, const ScanWindow& window, const Grid& grid,
                           double slack)
{
    SubdiffRegion r = subdiff_scan(f, x_bar, window, sample(f, grid), slack);
    r.set_grid(grid);
    return r;
}

SubdiffRegion subdiff_scan(const Ivf& f, const RealVector& x_bar, const ScanWindow& window,
                           const GridSamples& samples, double slack)
{
    require_scan_shape(f, x_bar, window);
    return scan_prepared(prepare(f, x_bar, samples), x_bar, window, slack);
}

GridSamples local_samples(const Ivf& f, const RealVector& x_bar, const Grid& grid, const std::vector<double>& radii)
{
    GridSamples s = sample(f, grid);
    const std::size_t n = f.arity();
    std::vector<RealVector> dirs;
    for (std::size_t i = 0; i < n; ++i)
        for (double sg : {1.0, -1.0}) {
            RealVector u(n, 0.0);
            u[i] = sg;
            dirs.push_back(u);
        }
    if (n == 2)
        for (double a : {1.0, -1.0})
            for (double b : {1.0, -1.0})
                dirs.push_back({a, b});
    for (double r : radii)
        for (const auto& u : dirs) {
            RealVector y(x_bar);
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i) {
                y[i] += r * u[i];
                inside = inside && y[i] >= f.domain()[i].lo() && y[i] <= f.domain()[i].hi();
            }
            if (!inside)
                continue;
            s.values.push_back(f.eval(y));
            s.points.push_back(std::move(y));
        }
    return s;
}

SubdiffRegion subdiff_scan_1d(const Ivf& f, double x_bar, const ScanAxis& g_lo, const ScanAxis& g_hi, const Grid& grid,
                              double slack)
{
    if (f.arity() != 1)
        throw Error(ErrorCode::ArityMismatch, "subdiff_scan_1d needs arity 1");
    return subdiff_scan(f, RealVector{x_bar}, window_1d(g_lo, g_hi), grid, slack);
}

bool check_singleton_at_differentiable(const Ivf& f, const RealVector& x_bar, const Grid& grid,
                                       const std::optional<ScanWindow>& window)
{
    IVector grad = IVector::zeros(f.arity());
    try {
        grad = gh_gradient(f, x_bar);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NonFiniteDerivative)
            throw;
        throw Error(ErrorCode::NonDifferentiable, std::string("no gH-gradient at x=") + format(x_bar) + ": " + e.what());
    }
    const ScanWindow w = window ? *window : default_window(f, x_bar);
    const SubdiffRegion region = subdiff_scan(f, x_bar, w, local_samples(f, x_bar, grid));
    if (region.empty())
        return false;
    for (const auto& c : region.marked_candidates())
        for (std::size_t i = 0; i < c.size(); ++i)
            if (std::abs(c[i].lo() - grad[i].lo()) > w.axes[2 * i].width() ||
                std::abs(c[i].hi() - grad[i].hi()) > w.axes[2 * i + 1].width())
                return false;
    return true;
}

namespace {

struct TightSamples {
    std::vector<RealVector> offsets;
    std::vector<Interval> rhs;
    std::vector<double> slack;
};

TightSamples tighten(const Ivf& f, const RealVector& x_bar, const GridSamples& samples)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const Interval f_bar = f.eval(x_bar);
    TightSamples t;
    for (std::size_t k = 0; k < samples.points.size(); ++k) {
        RealVector d = offset(samples.points[k], x_bar);
        double reach = 0.0;
        for (double v : d)
            reach = std::max(reach, std::abs(v));
        t.rhs.push_back(gh_diff(samples.values[k], f_bar));
        t.slack.push_back(kDominanceSlack * std::min(1.0, reach) +
                          16 * eps * (norm(samples.values[k]) + norm(f_bar)));
        t.offsets.push_back(std::move(d));
    }
    return t;
}

bool tight_feasible(const TightSamples& t, const RealVector& params)
{
    const std::size_t n = params.size() / 2;
    std::vector<Interval> comps;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(params[2 * i] <= params[2 * i + 1]))
            return false;
        comps.emplace_back(params[2 * i], params[2 * i + 1]);
    }
    const IVector g(std::move(comps));
    for (std::size_t k = 0; k < t.offsets.size(); ++k)
        if (excess(dot(t.offsets[k], g), t.rhs[k]) > t.slack[k])
            return false;
    return true;
}

double endpoint(const RealVector& h, const RealVector& params, int which)
{
    double v = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const bool pick_lo = (h[i] >= 0.0) == (which == 0);
        v += h[i] * (pick_lo ? params[2 * i] : params[2 * i + 1]);
    }
    return v;
}

RealVector flatten(const IVector& g)
{
    RealVector p;
    for (std::size_t i = 0; i < g.size(); ++i) {
        p.push_back(g[i].lo());
        p.push_back(g[i].hi());
    }
    return p;
}

// Ascent objective: endpoint `which` of hᵀ⊙G, with a small weight on the
// other endpoint so that moves freeing the g_lo <= g_hi constraint still pay.
double objective(const RealVector& h, const RealVector& params, int which)
{
    return endpoint(h, params, which) + 1e-3 * endpoint(h, params, 1 - which);
}

// Coordinate ascent over the sampled subdifferential, a convex polytope, so
// each axis move is a bisection. Returns endpoint `which` at the final point.
double push_up(const TightSamples& t, const RealVector& h, RealVector params, int which, const ScanWindow& w)
{
    for (int sweep = 0; sweep < 6; ++sweep) {
        for (std::size_t k = 0; k < params.size(); ++k) {
            const double delta = w.axes[k].width();
            const double base = objective(h, params, which);
            RealVector up = params;
            up[k] += delta;
            RealVector down = params;
            down[k] -= delta;
            const double gain_up = objective(h, up, which) - base;
            const double gain_down = objective(h, down, which) - base;
            if (std::max(gain_up, gain_down) <= 0.0)
                continue;
            const double dir = gain_up >= gain_down ? 1.0 : -1.0;
            const double span = w.axes[k].hi - w.axes[k].lo;
            auto at = [&](double tau) {
                RealVector q = params;
                q[k] += dir * tau;
                return q;
            };
            double ok = 0.0;
            double bad = span;
            if (tight_feasible(t, at(bad))) {
                ok = bad;
            } else {
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (ok + bad);
                    (tight_feasible(t, at(mid)) ? ok : bad) = mid;
                }
            }
            params = at(ok);
        }
    }
    return endpoint(h, params, which);
}

} // namespace

DirectionalMax directional_max_check(const Ivf& f, const RealVector& x_bar, const RealVector& h,
                                     const SubdiffRegion& region, double match_tol)
{
    if (h.size() != region.dim())
        throw Error(ErrorCode::DimensionMismatch, "direction length differs from region dimension");
    const auto cands = region.marked_candidates();
    if (cands.empty())
        throw Error(ErrorCode::EmptySubdifferential, "region has no marked cell");
    std::vector<Interval> products;
    double m_lo = -std::numeric_limits<double>::infinity();
    double m_hi = -std::numeric_limits<double>::infinity();
    for (const auto& g : cands) {
        products.push_back(dot(h, g));
        m_lo = std::max(m_lo, products.back().lo());
        m_hi = std::max(m_hi, products.back().hi());
    }
    {
        const Grid grid = region.grid() ? *region.grid() : Grid(f.domain(), 201);
        const TightSamples t = tighten(f, x_bar, local_samples(f, x_bar, grid));
        std::vector<RealVector> starts;
        try {
            starts.push_back(flatten(gh_gradient(f, x_bar)));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonFiniteDerivative)
                throw;
        }
        for (const auto& g : cands)
            starts.push_back(flatten(g));
        for (int which : {0, 1}) {
            double& m = which == 0 ? m_lo : m_hi;
            std::optional<std::size_t> best;
            for (std::size_t s = 0; s < starts.size(); ++s)
                if (tight_feasible(t, starts[s]) &&
                    (!best || objective(h, starts[s], which) > objective(h, starts[*best], which)))
                    best = s;
            if (best)
                m = std::max(m, push_up(t, h, starts[*best], which, region.window()));
        }
    }
    double reach = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
        reach += std::abs(h[i]) *
                 std::max(region.window().axes[2 * i].width(), region.window().axes[2 * i + 1].width());
    const bool attained = std::any_of(products.begin(), products.end(), [&](const Interval& p) {
        return m_lo - p.lo() <= reach && m_hi - p.hi() <= reach;
    });
    if (!attained)
        throw Error(ErrorCode::MaxNotAttained, "no sampled hᵀ⊙Ĝ reaches the upper bound [" + format_real(m_lo) + "," +
                                                   format_real(m_hi) + "]");
    DirectionalMax out{Interval(m_lo, m_hi), directional_gh_derivative(f, x_bar, h), false};
    out.matches = norm(gh_diff(out.maximum, out.directional)) <= match_tol;
    return out;
}

namespace {

double van_der_corput(std::uint64_t k)
{
    double v = 0.0;
    double base = 0.5;
    while (k) {
        if (k & 1)
            v += base;
        base *= 0.5;
        k >>= 1;
    }
    return v;
}

} // namespace

std::vector<RealVector> sphere_samples(std::size_t n, std::size_t count, std::uint64_t seed)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "sphere dimension must be positive");
    std::vector<RealVector> out;
    for (std::size_t i = 0; i < n; ++i)
        for (double s : {1.0, -1.0}) {
            RealVector e(n, 0.0);
            e[i] = s;
            out.push_back(e);
        }
    if (n == 2) {
        for (std::size_t k = 1; k <= count; ++k) {
            const double t = 2.0 * std::numbers::pi * van_der_corput(k);
            out.push_back({std::cos(t), std::sin(t)});
        }
    } else if (n >= 3) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss;
        for (std::size_t k = 0; k < count; ++k) {
            RealVector v(n);
            double len = 0.0;
            while (len == 0.0) {
                for (auto& c : v)
                    c = gauss(rng);
                len = euclidean_norm(v);
            }
            for (auto& c : v)
                c /= len;
            out.push_back(std::move(v));
        }
    }
    return out;
}

double operator_norm(const LinearIvf& l, const std::vector<RealVector>& unit_samples)
{
    if (unit_samples.empty())
        throw Error(ErrorCode::InvalidArgument, "operator_norm needs at least one sample");
    double best = 0.0;
    for (const auto& x : unit_samples)
        best = std::max(best, norm(l(x)));
    return best;
}

double operator_norm(const LinearIvf& l, std::size_t samples, std::uint64_t seed)
{
    return operator_norm(l, sphere_samples(l.arity(), samples, seed));
}

NormBallReport norm_ball_membership_check(const Ivf& f, const LinearIvf& l, const Grid& grid)
{
    const Expr& body = f.body();
    std::optional<Interval> c;
    if (body.kind() == NodeKind::MUL) {
        const auto& ch = body.children();
        if (ch[0].kind() == NodeKind::CONST && ch[1].kind() == NodeKind::NORM)
            c = ch[0].value();
        else if (ch[0].kind() == NodeKind::NORM && ch[1].kind() == NodeKind::CONST)
            c = ch[1].value();
    }
    if (!c)
        throw Error(ErrorCode::MalformedNormIvf, "expected C*norm(x), got " + body.to_string());
    if (c->lo() < 0.0)
        throw Error(ErrorCode::MalformedNormIvf, "C=" + format(*c) + " is not contained in [0, inf)");
    if (l.arity() != f.arity())
        throw Error(ErrorCode::DimensionMismatch, "linear IVF arity differs from the function arity");
    NormBallReport r;
    r.bound = norm(*c);
    r.is_subgradient = is_subgradient(f, {l.coeffs, RealVector(f.arity(), 0.0)}, grid).holds;
    r.operator_norm = operator_norm(l);
    r.holds = !r.is_subgradient || r.operator_norm <= r.bound + 1e-8;
    return r;
}

IVector chain_rule_transport(const Matrix& a, const IVector& g_m)
{
    if (a.empty() || a.size() != g_m.size())
        throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(a.size()) + " rows for " +
                                                      std::to_string(g_m.size()) + " subgradient components");
    const std::size_t n = a.front().size();
    if (n == 0 || std::any_of(a.begin(), a.end(), [n](const RealVector& r) { return r.size() != n; }))
        throw Error(ErrorCode::DimensionMismatch, "matrix rows must be nonempty and of equal length");
    std::vector<Interval> out;
    for (std::size_t j = 0; j < n; ++j) {
        Interval acc = ZERO;
        for (std::size_t i = 0; i < a.size(); ++i)
            acc = add(acc, scalar_mul(a[i][j], g_m[i]));
        out.push_back(acc);
    }
    return IVector(std::move(out));
}

Ivf compose_linear(const Ivf& h, const Matrix& a, Box domain)
{
    if (a.size() != h.arity())
        throw Error(ErrorCode::DimensionMismatch, "matrix rows must equal the inner function arity");
    const std::size_t n = domain.dim();
    std::vector<Expr> repl;
    for (const auto& row : a) {
        if (row.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "matrix columns must equal the domain dimension");
        std::optional<Expr> e;
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0.0)
                continue;
            Expr t = row[j] == 1.0 ? Expr::var(j) : Expr::constant(row[j]) * Expr::var(j);
            e = e ? *e + t : t;
        }
        repl.push_back(e ? *e : Expr::constant(0.0));
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        RealVector corner(n);
        for (std::size_t j = 0; j < n; ++j)
            corner[j] = (mask >> j) & 1 ? domain[j].hi() : domain[j].lo();
        RealVector y(a.size(), 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                y[i] += a[i][j] * corner[j];
        if (!h.domain().contains(y))
            throw Error(ErrorCode::OutOfDomain, "A maps corner " + format(corner) + " to " + format(y) +
                                                    " outside the inner domain");
    }
    return Ivf(n, h.body().substitute(repl), std::move(domain));
}

IVector sum_rule(const std::vector<IVector>& parts)
{
    if (parts.empty())
        throw Error(ErrorCode::InvalidArgument, "sum_rule needs at least one part");
    IVector acc = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k)
        acc = vec_op(acc, parts[k], VecOp::ADD);
    return acc;
}

Ivf sum_ivf(const std::vector<Ivf>& parts)
{
    if (parts.empty())
        throw Error(ErrorCode::InvalidArgument, "sum_ivf needs at least one part");
    Expr body = parts.front().body();
    Box domain = parts.front().domain();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        if (parts[k].arity() != parts.front().arity())
            throw Error(ErrorCode::ArityMismatch, "summands have different arities");
        body = body + parts[k].body();
        domain = domain.intersect(parts[k].domain());
    }
    return Ivf(parts.front().arity(), body, domain);
}

std::vector<RealVector> probe_base_points(const Grid& grid, double inset)
{
    auto pts = grid.points();
    for (auto& p : pts)
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Interval& ax = grid.box()[i];
            if (p[i] == ax.lo())
                p[i] = ax.lo() + inset * ax.width();
            else if (p[i] == ax.hi())
                p[i] = ax.hi() - inset * ax.width();
        }
    return pts;
}

namespace {

IVector from_params(const RealVector& p)
{
    std::vector<Interval> comps;
    for (std::size_t c = 0; c + 1 < p.size(); c += 2)
        comps.emplace_back(p[c], p[c + 1]);
    return IVector(std::move(comps));
}

RealVector params_of(const IVector& g)
{
    RealVector p;
    for (const auto& c : g.components()) {
        p.push_back(c.lo());
        p.push_back(c.hi());
    }
    return p;
}

// Bisects from a marked center toward an unmarked neighbour; the set is
// closed there when the infeasible side of the final bracket is feasible
// within tol (the violation is continuous up to the boundary).
bool closed_towards(const PreparedSamples& p, RealVector a, RealVector b, const ProbeConfig& cfg)
{
    for (int s = 0; s < cfg.bisection_steps; ++s) {
        RealVector m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            m[i] = 0.5 * (a[i] + b[i]);
        if (violation(p, from_params(m)) <= kDominanceSlack)
            a = std::move(m);
        else
            b = std::move(m);
    }
    return violation(p, from_params(b)) <= cfg.closed_tol;
}

} // namespace

ProbeReport union_boundedness_probe(const Ivf& f, const Grid& grid, const ProbeConfig& cfg)
{
    if (f.arity() > 2)
        throw Error(ErrorCode::InvalidArgument, "subdifferential scans support arity 1 and 2 only");
    const GridSamples samples = sample(f, grid);
    ProbeReport r;
    for (const auto& base : probe_base_points(grid, cfg.inset)) {
        ++r.base_points;
        const ScanWindow w = default_window(f, base, cfg.cells, cfg.half_width);
        const PreparedSamples prep = prepare(f, base, samples);
        const SubdiffRegion region = scan_prepared(prep, base, w, kDominanceSlack);
        const auto marked = region.marked_cells();
        if (marked.empty()) {
            ++r.empty_regions;
            continue;
        }
        for (std::size_t k : marked) {
            r.sup_norm = std::max(r.sup_norm, vec_norm(region.center(k)));
            const auto idx = region.cell_index(k);
            for (std::size_t ax = 0; ax < idx.size(); ++ax) {
                if (idx[ax] == 0 || idx[ax] + 1 == w.axes[ax].cells)
                    r.truncated = true;
                for (int dir : {-1, 1}) {
                    if ((dir < 0 && idx[ax] == 0) || (dir > 0 && idx[ax] + 1 == w.axes[ax].cells))
                        continue;
                    auto nidx = idx;
                    nidx[ax] = dir < 0 ? idx[ax] - 1 : idx[ax] + 1;
                    const std::size_t nb = region.flat_index(nidx);
                    if (region.marked(nb) || !region.valid(nb))
                        continue;
                    if (!closed_towards(prep, params_of(region.center(k)), params_of(region.center(nb)), cfg))
                        r.all_closed = false;
                }
            }
        }
    }
    return r;
}

LipschitzCheck lipschitz_from_subgradients_check(const Ivf& f, const Grid& grid, const ProbeConfig& cfg)
{
    const ProbeReport probe = union_boundedness_probe(f, grid, cfg);
    if (probe.empty_regions > 0)
        throw Error(ErrorCode::EmptySubdifferential,
                    std::to_string(probe.empty_regions) + " base points have an empty scanned subdifferential");
    LipschitzCheck c;
    c.estimate = lipschitz_estimate(f, grid);
    c.subgradient_bound = probe.sup_norm;
    c.holds = c.estimate <= c.subgradient_bound + 1e-6;
    return c;
}

} // namespace ghsub
