#pragma once

#include "ghsub/interval.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghsub {

using RealVector = std::vector<double>;

class IVector {
public:
    explicit IVector(std::vector<Interval> components);
    IVector(std::initializer_list<Interval> components);

    static IVector zeros(std::size_t n);

    std::size_t size() const noexcept { return c_.size(); }
    const Interval& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Interval>& components() const noexcept { return c_; }

    friend bool operator==(const IVector&, const IVector&) = default;

private:
    std::vector<Interval> c_;
};

enum class VecOp { ADD, SUB, GH_SUB };

IVector vec_op(const IVector& a, const IVector& b, VecOp star);
double vec_norm(const IVector& a);

// dᵀ⊙Â, summed left to right.
Interval dot(std::span<const double> d, const IVector& a);

struct WMapConfig {
    double w = 0.5;
    double w_prime = 0.5;

    static WMapConfig from_w(double w) { return {w, 1.0 - w}; }
    void validate() const;
};

RealVector w_map(const IVector& a, const WMapConfig& cfg = {});
double w_map(const Interval& a, const WMapConfig& cfg = {});

enum class VecOrder { LEQ, NOT_LEQ };

VecOrder vec_compare(const IVector& a, const IVector& b);
double gh_distance(const IVector& a, const IVector& b);

// "([a,b],[c,d],...)"
std::string format(const IVector& a);
IVector parse_ivector(std::string_view text);
// lo1,hi1,lo2,hi2,...
std::string format_csv_row(const IVector& a);

std::string format(std::span<const double> x);

} // namespace ghsub
