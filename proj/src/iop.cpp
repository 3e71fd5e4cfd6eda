#include "ghsub/iop.hpp"

#include "ghsub/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ghsub {

Iop::Iop(Ivf objective, std::optional<Grid> convexity_grid) : f_(std::move(objective))
{
    const Grid g = convexity_grid ? *convexity_grid : Grid(f_.domain(), f_.arity() == 1 ? 41 : 11);
    const ConvexityResult c = is_convex_sampled(f_, g);
    if (!c)
        throw Error(ErrorCode::NonConvexObjective,
                    "convexity fails between x=" + format(c.witness->x1) + " and x=" + format(c.witness->x2) +
                        " at lambda=" + format_real(c.witness->lambda) + ": " + format(c.witness->lhs) + " is not below " +
                        format(c.witness->rhs));
}

std::size_t EfficiencyReport::flagged_count() const
{
    return static_cast<std::size_t>(std::count(efficient.begin(), efficient.end(), true));
}

std::vector<RealVector> EfficiencyReport::flagged_points() const
{
    std::vector<RealVector> out;
    for (std::size_t k = 0; k < points.size(); ++k)
        if (efficient[k])
            out.push_back(points[k]);
    return out;
}

std::size_t EfficiencyReport::nearest(std::span<const double> x) const
{
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points.size(); ++k) {
        double d = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            d += (points[k][i] - x[i]) * (points[k][i] - x[i]);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

std::string EfficiencyReport::to_csv() const
{
    const std::size_t n = points.empty() ? steps.size() : points.front().size();
    std::string s;
    if (n == 1) {
        s = "x,";
    } else {
        for (std::size_t i = 0; i < n; ++i)
            s += "x" + std::to_string(i + 1) + ",";
    }
    s += "f_lo,f_hi,efficient\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (double v : points[k])
            s += format_real(v) + ",";
        s += format_real(values[k].lo()) + "," + format_real(values[k].hi()) + "," + (efficient[k] ? "1" : "0") + "\n";
    }
    return s;
}

EfficiencyReport efficient_on_grid(const Iop& p, const Grid& grid)
{
    const GridSamples s = sample(p.objective(), grid);
    EfficiencyReport r;
    r.points = s.points;
    r.values = s.values;
    for (std::size_t i = 0; i < grid.dim(); ++i)
        r.steps.push_back(grid.step(i));
    const std::size_t n = s.values.size();
    r.efficient.assign(n, true);
    r.dominator.assign(n, std::nullopt);

    // A point is strictly dominated exactly by the lexicographically smaller
    // (lo, hi) pairs whose hi does not exceed its own.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Interval& x = s.values[a];
        const Interval& y = s.values[b];
        return x.lo() < y.lo() || (x.lo() == y.lo() && x.hi() < y.hi());
    });
    std::optional<std::size_t> best;
    for (std::size_t g = 0; g < n;) {
        std::size_t e = g;
        while (e < n && s.values[order[e]] == s.values[order[g]])
            ++e;
        const double hi = s.values[order[g]].hi();
        if (best && s.values[*best].hi() <= hi) {
            for (std::size_t k = g; k < e; ++k) {
                r.efficient[order[k]] = false;
                r.dominator[order[k]] = *best;
            }
        }
        if (!best || hi < s.values[*best].hi())
            best = order[g];
        g = e;
    }
    return r;
}

bool is_efficient_against_grid(const Iop& p, std::span<const double> x_bar, const Grid& grid)
{
    const Interval fb = p.objective().eval(x_bar);
    const GridSamples s = sample(p.objective(), grid);
    return std::none_of(s.values.begin(), s.values.end(),
                        [&](const Interval& v) { return strictly_precedes(v, fb); });
}

bool optimality_zero_condition(const Iop& p, const RealVector& x_bar, const Grid& grid)
{
    const Ivf& f = p.objective();
    if (!f.domain().contains(x_bar))
        throw Error(ErrorCode::OutOfDomain, "x=" + format(x_bar) + " outside " + format(f.domain()));
    const bool zero_in = is_subgradient(f, {IVector::zeros(f.arity()), x_bar}, grid).holds;
    if (zero_in && !is_efficient_against_grid(p, x_bar, grid))
        throw Error(ErrorCode::TheoremViolation, "0 is a subgradient at x=" + format(x_bar) + " yet it is dominated");
    return zero_in;
}

bool optimality_nprec_condition(const Iop& p, const SubgradientCandidate& cand, const Grid& grid)
{
    const Ivf& f = p.objective();
    const SubgradientResult sg = is_subgradient(f, cand, grid);
    if (!sg)
        throw Error(ErrorCode::CandidateNotSubgradient,
                    format(cand.g) + " is not a subgradient at x=" + format(cand.base_point) +
                        " (witness x=" + format(*sg.witness) + ")");
    for (const auto& x : grid.points()) {
        RealVector d(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            d[i] = x[i] - cand.base_point[i];
        if (strictly_precedes(dot(d, cand.g), ZERO))
            return false;
    }
    if (!is_efficient_against_grid(p, cand.base_point, grid))
        throw Error(ErrorCode::TheoremViolation,
                    "the nprec condition holds at x=" + format(cand.base_point) + " yet it is dominated");
    return true;
}

double StepSchedule::step(std::size_t k) const
{
    return scale / std::sqrt(static_cast<double>(k) + 1.0);
}

std::string DescentResult::trace_csv() const
{
    const std::size_t n = trace.empty() ? 1 : trace.front().x.size();
    std::string s = "iter,";
    if (n == 1) {
        s += "x,";
    } else {
        for (std::size_t i = 0; i < n; ++i)
            s += "x" + std::to_string(i + 1) + ",";
    }
    s += "f_lo,f_hi,scalarized_value,step\n";
    for (const auto& r : trace) {
        s += std::to_string(r.iter) + ",";
        for (double v : r.x)
            s += format_real(v) + ",";
        s += format_real(r.value.lo()) + "," + format_real(r.value.hi()) + "," + format_real(r.scalarized) + "," +
             format_real(r.step) + "\n";
    }
    return s;
}

namespace {

// Candidate subgradients at x: the gradient, then one-sided slope
// combinations, each checked against the verification samples; the scan's
// minimum-norm marked cell is the last resort.
std::optional<IVector> find_subgradient(const Ivf& f, const RealVector& x, const GridSamples& samples,
                                        const DescentConfig& cfg)
{
    const std::size_t n = f.arity();
    std::vector<std::vector<Interval>> per_axis(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            per_axis[i].push_back(partial_gh_derivative(f, x, i));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonFiniteDerivative)
                throw;
        }
        const OneSidedPair p = one_sided_partials(f, x, i);
        if (p.left)
            per_axis[i].push_back(*p.left);
        if (p.right)
            per_axis[i].push_back(*p.right);
    }
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<Interval> comps;
        for (std::size_t i = 0; i < n; ++i)
            comps.push_back(per_axis[i][pick[i]]);
        IVector g(std::move(comps));
        if (is_subgradient(f, {g, x}, samples).holds)
            return g;
        std::size_t i = 0;
        while (i < n && ++pick[i] == per_axis[i].size())
            pick[i++] = 0;
        if (i == n)
            break;
    }
    if (n > 2)
        return std::nullopt;
    const Grid grid(f.domain(), std::vector<std::size_t>(n, cfg.verify_points));
    const SubdiffRegion region = subdiff_scan(f, x, default_window(f, x, cfg.fallback_cells), grid);
    std::optional<IVector> best;
    for (const auto& g : region.marked_candidates())
        if (!best || vec_norm(g) < vec_norm(*best))
            best = g;
    return best;
}

} // namespace

DescentResult scalarized_descent(const Iop& p, const RealVector& x0, const DescentConfig& cfg)
{
    cfg.weights.validate();
    if (cfg.max_iters == 0)
        throw Error(ErrorCode::InvalidArgument, "descent needs at least one iteration");
    const Ivf& f = p.objective();
    if (!f.domain().contains(x0))
        throw Error(ErrorCode::OutOfDomain, "x0=" + format(x0) + " outside " + format(f.domain()));
    const Grid grid(f.domain(), std::vector<std::size_t>(f.arity(), cfg.verify_points));
    const GridSamples samples = sample(f, grid);
    const IVector zero = IVector::zeros(f.arity());

    DescentResult r;
    RealVector x = f.domain().project(x0);
    for (std::size_t k = 0; k < cfg.max_iters; ++k) {
        const Interval v = f.eval(x);
        TraceRow row{k, x, v, w_map(v, cfg.weights), 0.0};
        r.iterations = k + 1;
        if (is_subgradient(f, {zero, x}, samples).holds) {
            r.trace.push_back(row);
            r.stopped_at_zero = true;
            break;
        }
        const auto g = find_subgradient(f, x, samples, cfg);
        if (!g)
            throw Error(ErrorCode::NoSubgradientFound, "no verified subgradient at x=" + format(x));
        row.step = cfg.schedule.step(k);
        r.trace.push_back(row);
        const RealVector dir = w_map(*g, cfg.weights);
        RealVector next = x;
        for (std::size_t i = 0; i < x.size(); ++i)
            next[i] -= row.step * dir[i];
        x = f.domain().project(next);
    }

    // best: not strictly dominated within the trace, then smallest
    // scalarized value, then earliest
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
        const Interval& vk = r.trace[k].value;
        const bool dominated = std::any_of(r.trace.begin(), r.trace.end(),
                                           [&](const TraceRow& o) { return strictly_precedes(o.value, vk); });
        if (dominated)
            continue;
        if (!best || r.trace[k].scalarized < r.trace[*best].scalarized)
            best = k;
    }
    r.best_x = r.trace[*best].x;
    r.best_value = r.trace[*best].value;
    const EfficiencyReport eff = efficient_on_grid(p, grid);
    r.efficient_flag = eff.efficient[eff.nearest(r.best_x)];
    return r;
}

bool smoothed_nonincreasing(const std::vector<double>& values, std::size_t window, double tol)
{
    if (window == 0 || values.size() < window + 1)
        return true;
    auto average = [&](std::size_t start) {
        double sum = 0.0;
        for (std::size_t k = start; k < start + window; ++k)
            sum += values[k];
        return sum / static_cast<double>(window);
    };
    double prev = average(0);
    for (std::size_t s = 1; s + window <= values.size(); ++s) {
        const double avg = average(s);
        if (avg > prev + tol * (1.0 + std::abs(prev)))
            return false;
        prev = avg;
    }
    return true;
}

} // namespace ghsub
