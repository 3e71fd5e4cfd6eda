#pragma once

#include "ghsub/interval.hpp"
#include "ghsub/ivector.hpp"
#include "ghsub/ivf.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ghsub {

inline constexpr double kDominanceSlack = 1e-10;

struct SubgradientCandidate {
    IVector g;
    RealVector base_point;
};

struct SubgradientResult {
    bool holds = true;
    std::optional<RealVector> witness; // grid point of largest violation
    double violation = 0.0;            // max over grid of the endpoint excess; <= slack when holds
    explicit operator bool() const noexcept { return holds; }
};

// (x−x̄)ᵀ⊙Ĝ ⪯ F(x) ⊖_gH F(x̄) at every grid point.
SubgradientResult is_subgradient(const Ivf& f, const SubgradientCandidate& cand, const Grid& grid,
                                 double slack = kDominanceSlack);
SubgradientResult is_subgradient(const Ivf& f, const SubgradientCandidate& cand, const GridSamples& samples,
                                 double slack = kDominanceSlack);

// (x−x̄)ᵀ⊙Ĝ ⊕ F(x̄) ⪯ F(x) at every grid point.
SubgradientResult is_subgradient_strict_variant(const Ivf& f, const SubgradientCandidate& cand, const Grid& grid,
                                                double slack = kDominanceSlack);

// Uniform cells on [lo, hi]; candidates are cell centers.
struct ScanAxis {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t cells = 1;

    double width() const { return (hi - lo) / static_cast<double>(cells); }
    double center(std::size_t i) const { return lo + (static_cast<double>(i) + 0.5) * width(); }
};

// Parameter window for a scan: axes ordered (g1_lo, g1_hi, g2_lo, g2_hi, ...).
struct ScanWindow {
    std::vector<ScanAxis> axes;
    std::size_t dim() const { return axes.size() / 2; }
};

ScanWindow window_1d(ScanAxis g_lo, ScanAxis g_hi);

// gradient ± half_width on every endpoint axis when the gradient exists;
// at kinks the window spans the one-sided slope candidates ± half_width.
ScanWindow default_window(const Ivf& f, const RealVector& x_bar, std::size_t cells = 121, double half_width = 3.0);

class SubdiffRegion {
public:
    SubdiffRegion(ScanWindow window, RealVector base_point);

    const ScanWindow& window() const noexcept { return window_; }
    const RealVector& base_point() const noexcept { return base_; }
    std::size_t dim() const noexcept { return window_.dim(); }
    std::size_t cell_count() const noexcept { return marked_.size(); }

    std::vector<std::size_t> cell_index(std::size_t flat) const;
    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
    IVector center(std::size_t flat) const;
    // g_lo <= g_hi on every component at the cell center.
    bool valid(std::size_t flat) const;

    bool marked(std::size_t flat) const { return marked_[flat] != 0; }
    void mark(std::size_t flat, bool on = true) { marked_[flat] = on ? 1 : 0; }
    std::size_t marked_count() const;
    std::vector<std::size_t> marked_cells() const;
    std::vector<IVector> marked_candidates() const;
    bool empty() const { return marked_count() == 0; }

    // Grid the region was scanned against, when known.
    const std::optional<Grid>& grid() const noexcept { return grid_; }
    void set_grid(Grid g) { grid_ = std::move(g); }

    // Header g_lo,g_hi,feasible (n=1) or g1_lo,g1_hi,...,feasible; one row per valid cell.
    std::string to_csv() const;

private:
    ScanWindow window_;
    RealVector base_;
    std::vector<std::uint8_t> marked_;
    std::optional<Grid> grid_;
};

// Grid samples plus points x̄ ± r·u for each radius r and each direction u in
// {±e_i} (and the diagonals when n = 2) that lie in the domain. The extra
// points pin the inequality down near x̄, where a uniform grid is coarsest.
GridSamples local_samples(const Ivf& f, const RealVector& x_bar, const Grid& grid,
                          const std::vector<double>& radii = default_radii());

// Marks each valid cell center that passes is_subgradient. Supports n <= 2.
SubdiffRegion subdiff_scan(const Ivf& f, const RealVector& x_bar, const ScanWindow& window, const Grid& grid,
                           double slack = kDominanceSlack);
SubdiffRegion subdiff_scan(const Ivf& f, const RealVector& x_bar, const ScanWindow& window,
                           const GridSamples& samples, double slack = kDominanceSlack);
SubdiffRegion subdiff_scan_1d(const Ivf& f, double x_bar, const ScanAxis& g_lo, const ScanAxis& g_hi, const Grid& grid,
                              double slack = kDominanceSlack);

// Largest per-point excess of the subgradient inequality; <= 0 means Ĝ is a subgradient.
double subgradient_violation(const Ivf& f, const IVector& g, const RealVector& x_bar, const GridSamples& samples);

// Scans against local_samples, so the region collapses onto the gradient cell.
bool check_singleton_at_differentiable(const Ivf& f, const RealVector& x_bar, const Grid& grid,
                                       const std::optional<ScanWindow>& window = std::nullopt);

struct DirectionalMax {
    Interval maximum;     // componentwise least upper bound of {hᵀ⊙Ĝ}
    Interval directional; // F′(x̄)(h)
    bool matches = false;
};

// The bound is refined past cell centers by bisecting each parameter axis to
// the edge of the sampled subdifferential (local_samples around x̄, per-point
// slack shrinking with |x−x̄|). MaxNotAttained when no marked cell reaches the
// bound within |h|·cell width.
DirectionalMax directional_max_check(const Ivf& f, const RealVector& x_bar, const RealVector& h,
                                     const SubdiffRegion& region, double match_tol = 1e-5);

struct LinearIvf {
    IVector coeffs;
    Interval operator()(std::span<const double> x) const { return dot(x, coeffs); }
    std::size_t arity() const { return coeffs.size(); }
};

std::vector<RealVector> sphere_samples(std::size_t n, std::size_t count, std::uint64_t seed = 1);

// max over unit-sphere samples of ‖L(x)‖; the ±e_i directions are always included.
double operator_norm(const LinearIvf& l, std::size_t samples = 1024, std::uint64_t seed = 1);
double operator_norm(const LinearIvf& l, const std::vector<RealVector>& unit_samples);

struct NormBallReport {
    bool is_subgradient = false;
    double operator_norm = 0.0;
    double bound = 0.0; // ‖C‖
    bool holds = true;  // is_subgradient ⇒ operator_norm ≤ ‖C‖ + 1e-8
};

// f must be C⊙norm(x) with C ⊆ [0, ∞); checks the subgradient inequality at 0.
NormBallReport norm_ball_membership_check(const Ivf& f, const LinearIvf& l, const Grid& grid);

using Matrix = std::vector<RealVector>; // row-major, rows of equal length

// component j ↦ ⊕ᵢ A[i][j] ⊙ g_m[i]
IVector chain_rule_transport(const Matrix& a, const IVector& g_m);
// F(x) = H(Ax) on the given box (A·box must lie in H's domain).
Ivf compose_linear(const Ivf& h, const Matrix& a, Box domain);

IVector sum_rule(const std::vector<IVector>& parts);
// F = ⊕ Fᵢ on the intersection of the domains.
Ivf sum_ivf(const std::vector<Ivf>& parts);

struct ProbeReport {
    double sup_norm = 0.0;
    bool all_closed = true;
    bool truncated = false;         // a marked cell touched the scan window edge
    std::size_t base_points = 0;
    std::size_t empty_regions = 0;
};

struct ProbeConfig {
    std::size_t cells = 61;
    double half_width = 3.0;
    double inset = 1e-6; // relative pull-in of boundary base points
    int bisection_steps = 40;
    double closed_tol = 1e-8;
};

// Base points are the grid points with boundary coordinates pulled into the
// interior by inset·width.
std::vector<RealVector> probe_base_points(const Grid& grid, double inset);

ProbeReport union_boundedness_probe(const Ivf& f, const Grid& grid, const ProbeConfig& cfg = {});

struct LipschitzCheck {
    double estimate = 0.0;
    double subgradient_bound = 0.0;
    bool holds = false;
    explicit operator bool() const noexcept { return holds; }
};

// EmptySubdifferential when some base point has no marked cell.
LipschitzCheck lipschitz_from_subgradients_check(const Ivf& f, const Grid& grid, const ProbeConfig& cfg = {});

} // namespace ghsub
