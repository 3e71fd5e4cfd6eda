#include "runners.hpp"

#include "ghsub/catalog.hpp"
#include "ghsub/error.hpp"
#include "ghsub/iop.hpp"
#include "ghsub/subgrad.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace ghsub::tools {

namespace {

bool close(const Interval& a, const Interval& b, double tol)
{
    return std::abs(a.lo() - b.lo()) <= tol && std::abs(a.hi() - b.hi()) <= tol;
}

struct Runner {
    std::ostream& out;
    bool ok = true;

    void check(const std::string& name, const std::function<bool()>& fn)
    {
        bool pass = false;
        std::string why;
        try {
            pass = fn();
        } catch (const Error& e) {
            why = std::string(" (") + e.what() + ")";
        }
        out << (pass ? "PASS " : "FAIL ") << name << why << "\n";
        ok = ok && pass;
    }
};

} // namespace

bool run_examples(std::ostream& out)
{
    Runner r{out};
    const Ivf quartic = catalog::quartic();
    const Ivf parabolas = catalog::parabolas();
    const Ivf kink = catalog::kink();
    const Ivf abs13 = catalog::abs13();

    r.check("quartic: F(1)=[2,41], F(2)=[17,44]", [&] {
        return quartic(1.0) == Interval(2, 41) && quartic(2.0) == Interval(17, 44);
    });
    r.check("quartic: gradient at 1 is [2,4]", [&] {
        return close(gh_derivative_1d(quartic, 1.0), Interval(2, 4), 1e-6);
    });
    r.check("quartic: [2,4] is a subgradient at 1, fails the additive variant at x=2", [&] {
        const Grid g(quartic.domain(), 201);
        const SubgradientCandidate c{IVector{Interval(2, 4)}, {1.0}};
        const auto strict = is_subgradient_strict_variant(quartic, c, g);
        return is_subgradient(quartic, c, g).holds && !strict.holds && strict.witness &&
               std::abs((*strict.witness)[0] - 2.0) < 1e-12;
    });

    r.check("ex: subdifferential of |x|[1,3] at 0 is the box -3<=g_lo<=1, -1<=g_hi<=3", [&] {
        const auto region = subdiff_scan_1d(abs13, 0.0, {-4, 2, 121}, {-2, 4, 121}, Grid(abs13.domain(), 201));
        for (std::size_t k = 0; k < region.cell_count(); ++k) {
            if (!region.valid(k))
                continue;
            const Interval c = region.center(k)[0];
            const bool inside = c.lo() >= -3 && c.lo() <= 1 && c.hi() >= -1 && c.hi() <= 3;
            if (inside != region.marked(k))
                return false;
        }
        return true;
    });

    r.check("kink: F(2)=[-2,5], 0 in subdifferential, x=2 efficient", [&] {
        const Iop p(kink);
        const Grid g(kink.domain(), 321);
        const auto rep = efficient_on_grid(p, g);
        return kink(2.0) == Interval(-2, 5) && optimality_zero_condition(p, {2.0}, g) &&
               rep.efficient[rep.nearest(RealVector{2.0})];
    });

    r.check("parabolas: subdifferential is the gradient [2x-2,4x] at 0, 0.5, 1", [&] {
        const Grid g(parabolas.domain(), 201);
        for (double x : {0.0, 0.5, 1.0}) {
            const ScanWindow w = default_window(parabolas, {x});
            const auto region = subdiff_scan(parabolas, {x}, w, g);
            if (region.marked_count() != 1)
                return false;
            if (!close(region.marked_candidates()[0][0], Interval(2 * x - 2, 4 * x), w.axes[0].width()))
                return false;
        }
        return true;
    });
    r.check("parabolas: efficient set is [0,1] on a 301-point grid", [&] {
        const auto rep = efficient_on_grid(Iop(parabolas), Grid(parabolas.domain(), 301));
        for (std::size_t k = 0; k < rep.points.size(); ++k) {
            const double x = rep.points[k][0];
            if (rep.efficient[k] != (x >= 0.0 && x <= 1.0))
                return false;
        }
        return true;
    });
    r.check("parabolas: x=0.5 efficient but 0 not a subgradient", [&] {
        const Iop p(parabolas);
        const Grid g(parabolas.domain(), 301);
        return !optimality_zero_condition(p, {0.5}, g) && is_efficient_against_grid(p, RealVector{0.5}, g);
    });
    r.check("parabolas: at x=0, [-2,0] (x) x < 0 for x > 0 although 0 is efficient", [&] {
        const Iop p(parabolas);
        const Grid g(parabolas.domain(), 301);
        return !optimality_nprec_condition(p, {IVector{Interval(-2, 0)}, {0.0}}, g) &&
               is_efficient_against_grid(p, RealVector{0.0}, g);
    });
    return r.ok;
}

} // namespace ghsub::tools
