#pragma once

#include "ghsub/expr.hpp"
#include "ghsub/interval.hpp"
#include "ghsub/ivector.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ghsub {

// Axis-aligned compact box; one Interval per coordinate.
class Box {
public:
    explicit Box(std::vector<Interval> axes);
    Box(std::initializer_list<Interval> axes) : Box(std::vector<Interval>(axes)) {}

    std::size_t dim() const noexcept { return axes_.size(); }
    const Interval& operator[](std::size_t i) const { return axes_[i]; }
    const std::vector<Interval>& axes() const noexcept { return axes_; }

    bool contains(std::span<const double> x) const;
    RealVector project(std::span<const double> x) const;
    Box intersect(const Box& other) const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> axes_;
};

std::string format(const Box& b);
// "[l1,u1],[l2,u2],..." (optional surrounding parentheses)
Box parse_box(std::string_view text);

// Rectangular sampling of a box. Axis 0 varies slowest; both endpoints of
// every axis are sample points.
class Grid {
public:
    Grid(Box box, std::vector<std::size_t> counts);
    Grid(Box box, std::size_t per_axis);

    const Box& box() const noexcept { return box_; }
    std::size_t dim() const noexcept { return box_.dim(); }
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }
    std::size_t size() const noexcept { return size_; }
    double step(std::size_t axis) const;
    double coordinate(std::size_t axis, std::size_t k) const;
    RealVector point(std::size_t flat) const;
    std::vector<RealVector> points() const;

private:
    Box box_;
    std::vector<std::size_t> counts_;
    std::size_t size_;
};

class Ivf {
public:
    Ivf(std::size_t arity, Expr body, Box domain);
    static Ivf parse(std::size_t arity, std::string_view text, Box domain);

    std::size_t arity() const noexcept { return arity_; }
    const Expr& body() const noexcept { return body_; }
    const Box& domain() const noexcept { return domain_; }
    Ivf with_domain(Box domain) const { return Ivf(arity_, body_, std::move(domain)); }

    // OutOfDomain outside the box, ArityMismatch on wrong length.
    Interval eval(std::span<const double> x) const;
    Interval operator()(std::span<const double> x) const { return eval(x); }
    Interval operator()(double x) const { return eval(std::span<const double>(&x, 1)); }

private:
    std::size_t arity_;
    Expr body_;
    Box domain_;
};

std::pair<double, double> boundary(const Ivf& f, std::span<const double> x);

// Grid points paired with F values, computed once and reused by scans.
struct GridSamples {
    std::vector<RealVector> points;
    std::vector<Interval> values;
};

GridSamples sample(const Ivf& f, const Grid& grid);

struct DerivativeEstimate {
    Interval value;
    bool one_sided = false;
};

// Left/right one-sided slopes of the boundary functions along an axis,
// each folded into [min, max]. Absent when the point sits on that side of
// the domain boundary.
struct OneSidedPair {
    std::optional<Interval> left;
    std::optional<Interval> right;
};

DerivativeEstimate estimate_partial(const Ivf& f, std::span<const double> x, std::size_t axis);
OneSidedPair one_sided_partials(const Ivf& f, std::span<const double> x, std::size_t axis);

Interval gh_derivative_1d(const Ivf& f, double x);
Interval partial_gh_derivative(const Ivf& f, std::span<const double> x, std::size_t axis);
IVector gh_gradient(const Ivf& f, std::span<const double> x);

struct DirectionalConfig {
    double lambda0 = 1e-2;
    double ratio = 0.5;
    double tol = 1e-7;
    int max_refinements = 40;
};

Interval directional_gh_derivative(const Ivf& f, std::span<const double> x, std::span<const double> h,
                                   const DirectionalConfig& cfg = {});

struct ConvexityWitness {
    RealVector x1;
    RealVector x2;
    double lambda = 0.0;
    Interval lhs;
    Interval rhs;
};

struct ConvexityResult {
    bool convex = true;
    std::optional<ConvexityWitness> witness;
    explicit operator bool() const noexcept { return convex; }
};

ConvexityResult is_convex_sampled(const Ivf& f, const Grid& grid, const std::vector<double>& lambdas = {0.25, 0.5, 0.75},
                                  double slack = 1e-10);

// Convexity of a single boundary function (0 = lower, 1 = upper) on the same sample pairs.
bool is_boundary_convex_sampled(const Ivf& f, const Grid& grid, int which,
                                const std::vector<double>& lambdas = {0.25, 0.5, 0.75}, double slack = 1e-10);

std::vector<double> default_radii();

bool is_gh_continuous_at(const Ivf& f, std::span<const double> x, double tol = 1e-6,
                         const std::vector<double>& radii = default_radii());

double lipschitz_estimate(const Ivf& f, const Grid& grid);

double euclidean_norm(std::span<const double> x);

} // namespace ghsub
