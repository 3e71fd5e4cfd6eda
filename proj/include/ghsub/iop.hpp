#pragma once

#include "ghsub/ivf.hpp"
#include "ghsub/subgrad.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ghsub {

// Convex interval optimization problem min F(x) over the domain box.
class Iop {
public:
    // Throws NonConvexObjective when is_convex_sampled fails on the check grid
    // (41 points per axis for arity 1, 11 otherwise, unless given).
    explicit Iop(Ivf objective, std::optional<Grid> convexity_grid = std::nullopt);

    const Ivf& objective() const noexcept { return f_; }
    const Box& domain() const noexcept { return f_.domain(); }

private:
    Ivf f_;
};

struct EfficiencyReport {
    std::vector<RealVector> points;
    std::vector<Interval> values;
    std::vector<bool> efficient;
    // for a non-efficient point, the index of a point that strictly dominates it
    std::vector<std::optional<std::size_t>> dominator;
    std::vector<double> steps;

    std::size_t flagged_count() const;
    std::vector<RealVector> flagged_points() const;
    // index of the grid point nearest to x
    std::size_t nearest(std::span<const double> x) const;
    // Header x (or x1,x2,...), f_lo, f_hi, efficient.
    std::string to_csv() const;
};

EfficiencyReport efficient_on_grid(const Iop& p, const Grid& grid);

// No grid point x with F(x) ≺ F(x̄).
bool is_efficient_against_grid(const Iop& p, std::span<const double> x_bar, const Grid& grid);

// 0̂ ∈ ∂F(x̄) on the grid. When true, x̄ must be efficient against the
// grid; a counterexample raises TheoremViolation.
bool optimality_zero_condition(const Iop& p, const RealVector& x_bar, const Grid& grid);

// (x−x̄)ᵀ⊙Ĝ ⊀ 0 at every grid point, for a verified subgradient Ĝ.
// CandidateNotSubgradient when Ĝ fails the subgradient check.
bool optimality_nprec_condition(const Iop& p, const SubgradientCandidate& cand, const Grid& grid);

struct StepSchedule {
    double scale = 0.1;
    double step(std::size_t k) const; // scale / sqrt(k + 1)
};

struct DescentConfig {
    WMapConfig weights{};
    StepSchedule schedule{};
    std::size_t max_iters = 200;
    std::size_t verify_points = 201; // per axis, for subgradient verification and efficiency
    std::size_t fallback_cells = 61;
};

struct TraceRow {
    std::size_t iter = 0;
    RealVector x;
    Interval value;
    double scalarized = 0.0;
    double step = 0.0;
};

struct DescentResult {
    RealVector best_x;
    Interval best_value;
    std::size_t iterations = 0;
    bool stopped_at_zero = false; // 0̂ verified as a subgradient at the last iterate
    bool efficient_flag = false;  // nearest grid point is flagged by efficient_on_grid
    std::vector<TraceRow> trace;

    std::string trace_csv() const;
};

// Projected scalarized subgradient steps x ← proj(x − t_k·W(Ĝ_k)).
DescentResult scalarized_descent(const Iop& p, const RealVector& x0, const DescentConfig& cfg = {});

// Moving average over `window` consecutive values is nonincreasing within tol.
bool smoothed_nonincreasing(const std::vector<double>& values, std::size_t window = 10, double tol = 1e-12);

} // namespace ghsub
