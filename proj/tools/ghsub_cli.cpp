#include "runners.hpp"

#include "ghsub/error.hpp"
#include "ghsub/iop.hpp"
#include "ghsub/problem.hpp"
#include "ghsub/subgrad.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace ghsub;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2 };

struct Common {
    std::size_t grid = 201;
    double tol = kDominanceSlack;
    double w = 0.5;
    std::uint64_t seed = 1;
};

Grid make_grid(const Ivf& f, std::size_t n)
{
    return Grid(f.domain(), std::vector<std::size_t>(f.arity(), n));
}

RealVector pick_base(const ProblemFile& p, const std::optional<std::string>& flag)
{
    if (flag)
        return parse_point(*flag);
    if (p.base_points.empty())
        throw Error(ErrorCode::InvalidArgument, "no base point: pass --x-bar or add base= to the problem file");
    return p.base_points.front();
}

int cmd_eval(const std::string& file, const std::vector<std::string>& at, bool use_grid, const Common& c)
{
    const ProblemFile p = load_problem(file);
    const Ivf f = p.objective();
    std::vector<RealVector> pts;
    if (!at.empty()) {
        for (const auto& s : at)
            pts.push_back(parse_point(s));
    } else if (use_grid) {
        pts = make_grid(f, c.grid).points();
    } else {
        pts = p.base_points;
    }
    std::string out = f.arity() == 1 ? "x," : "";
    if (f.arity() > 1)
        for (std::size_t i = 0; i < f.arity(); ++i)
            out += "x" + std::to_string(i + 1) + ",";
    out += "f_lo,f_hi\n";
    for (const auto& x : pts) {
        const Interval v = f.eval(x);
        for (double xi : x)
            out += format_real(xi) + ",";
        out += format_real(v.lo()) + "," + format_real(v.hi()) + "\n";
    }
    std::cout << out;
    return kOk;
}

int cmd_subgrad_check(const std::string& file, const std::optional<std::string>& x_bar,
                      const std::optional<std::string>& g, bool strict, const Common& c)
{
    const ProblemFile p = load_problem(file);
    const Ivf f = p.objective();
    const RealVector base = pick_base(p, x_bar);
    std::optional<IVector> cand;
    if (g)
        cand = parse_ivector(*g);
    else if (!p.candidates.empty())
        cand = p.candidates.front();
    else
        throw Error(ErrorCode::InvalidArgument, "no candidate: pass --g or add candidate= to the problem file");
    const SubgradientCandidate sc{*cand, base};
    const Grid grid = make_grid(f, c.grid);
    const SubgradientResult r =
        strict ? is_subgradient_strict_variant(f, sc, grid, c.tol) : is_subgradient(f, sc, grid, c.tol);
    if (r.holds) {
        std::cout << "YES\n";
        return kOk;
    }
    const auto& w = *r.witness;
    std::cout << "NO witness=" << (w.size() == 1 ? format_real(w[0]) : format(w)) << "\n";
    return kNegative;
}

int cmd_subdiff_scan(const std::string& file, const std::optional<std::string>& x_bar, std::size_t cells,
                     const std::vector<double>& window, const Common& c)
{
    const ProblemFile p = load_problem(file);
    const Ivf f = p.objective();
    const RealVector base = pick_base(p, x_bar);
    ScanWindow w;
    if (window.empty()) {
        w = default_window(f, base, cells);
    } else {
        if (window.size() != 4 * f.arity())
            throw Error(ErrorCode::InvalidArgument, "--window needs 4 numbers per component (lo range, hi range)");
        for (std::size_t k = 0; k < window.size(); k += 2)
            w.axes.push_back({window[k], window[k + 1], cells});
    }
    const SubdiffRegion r = subdiff_scan(f, base, w, make_grid(f, c.grid), c.tol);
    std::cout << r.to_csv();
    return kOk;
}

int cmd_efficient(const std::string& file, const Common& c)
{
    const ProblemFile p = load_problem(file);
    const Iop iop(p.objective());
    std::cout << efficient_on_grid(iop, make_grid(iop.objective(), c.grid)).to_csv();
    return kOk;
}

int cmd_descent(const std::string& file, const std::optional<std::string>& x0, std::optional<double> step,
                std::optional<std::size_t> iters, const Common& c)
{
    const ProblemFile p = load_problem(file);
    const Iop iop(p.objective());
    DescentConfig cfg;
    cfg.weights = WMapConfig::from_w(c.w);
    cfg.verify_points = c.grid;
    if (step)
        cfg.schedule.scale = *step;
    else if (p.step)
        cfg.schedule.scale = *p.step;
    if (iters)
        cfg.max_iters = *iters;
    else if (p.iters)
        cfg.max_iters = *p.iters;
    RealVector start;
    if (x0)
        start = parse_point(*x0);
    else if (p.x0)
        start = *p.x0;
    else
        throw Error(ErrorCode::InvalidArgument, "no start point: pass --x0 or add x0= to the problem file");
    const DescentResult r = scalarized_descent(iop, start, cfg);
    std::cout << r.trace_csv();
    std::cerr << "best x=" << format(r.best_x) << " F=" << format(r.best_value) << " iterations=" << r.iterations
              << " efficient=" << (r.efficient_flag ? 1 : 0) << (r.stopped_at_zero ? " (zero subgradient)" : "")
              << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gH-subgradient toolkit for interval-valued functions"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--grid", c.grid, "Samples per axis")->check(CLI::Range(2, 100000));
        s->add_option("--tol", c.tol, "Dominance slack")->check(CLI::NonNegativeNumber);
        s->add_option("--w", c.w, "Lower-endpoint weight of the W-map")->check(CLI::Range(0.0, 1.0));
    };

    std::string file;
    std::vector<std::string> at;
    bool use_grid = false;
    auto* eval = app.add_subcommand("eval", "Evaluate the objective: CSV x,f_lo,f_hi");
    eval->add_option("file", file, "Problem file")->required();
    eval->add_option("--at", at, "Point (repeatable); defaults to the file's base points");
    eval->add_flag("--sample", use_grid, "Evaluate on the --grid sampling of the domain");
    add_common(eval);

    std::optional<std::string> x_bar, g, x0;
    bool strict = false;
    auto* check = app.add_subcommand("subgrad-check", "Check the subgradient inequality: YES or NO witness=<x>");
    check->add_option("file", file, "Problem file")->required();
    check->add_option("--x-bar", x_bar, "Base point");
    check->add_option("--g", g, "Candidate interval vector, e.g. [0,0] or ([1,2],[0,1])");
    check->add_flag("--strict", strict, "Use the restrictive variant (x-x̄)ᵀ⊙G ⊕ F(x̄) ⪯ F(x)");
    add_common(check);

    std::size_t cells = 121;
    std::vector<double> window;
    auto* scan = app.add_subcommand("subdiff-scan", "Scan the subdifferential: CSV g_lo,g_hi,feasible");
    scan->add_option("file", file, "Problem file")->required();
    scan->add_option("--x-bar", x_bar, "Base point");
    scan->add_option("--cells", cells, "Cells per parameter axis")->check(CLI::Range(1, 100000));
    scan->add_option("--window", window, "lo_min,lo_max,hi_min,hi_max per component")->delimiter(',');
    add_common(scan);

    auto* eff = app.add_subcommand("efficient", "Flag efficient grid points: CSV x,f_lo,f_hi,efficient");
    eff->add_option("file", file, "Problem file")->required();
    add_common(eff);

    std::optional<double> step;
    std::optional<std::size_t> iters;
    auto* desc = app.add_subcommand("descent", "Scalarized subgradient descent: trace CSV");
    desc->add_option("file", file, "Problem file")->required();
    desc->add_option("--x0", x0, "Start point");
    desc->add_option("--step", step, "Step scale c in c/sqrt(k+1)")->check(CLI::PositiveNumber);
    desc->add_option("--iters", iters, "Iteration budget")->check(CLI::PositiveNumber);
    add_common(desc);

    auto* ex = app.add_subcommand("examples", "Reproduce the worked examples");

    int trials = 1000;
    auto* props = app.add_subcommand("properties", "Randomized algebraic law checks");
    props->add_option("--seed", c.seed, "Random seed");
    props->add_option("--trials", trials, "Trials per law")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*eval)
            return cmd_eval(file, at, use_grid, c);
        if (*check)
            return cmd_subgrad_check(file, x_bar, g, strict, c);
        if (*scan)
            return cmd_subdiff_scan(file, x_bar, cells, window, c);
        if (*eff)
            return cmd_efficient(file, c);
        if (*desc)
            return cmd_descent(file, x0, step, iters, c);
        if (*ex)
            return tools::run_examples(std::cout) ? kOk : kNegative;
        if (*props)
            return tools::run_properties(std::cout, c.seed, trials) ? kOk : kNegative;
    } catch (const ParseError& e) {
        std::cerr << "error: " << file << ": " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
