#pragma once

#include "ghsub/ivector.hpp"
#include "ghsub/ivf.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ghsub {

// Plain-text problem description, one `key=value` per line, '#' comments:
//   arity=1
//   domain=[-2,6]
//   objective=piecewise{ x1 >= 1 & x1 <= 3 => ...; otherwise => ...; }
//   base=2            (repeatable; a point, "(1,2)" for arity 2)
//   candidate=[0,0]   (repeatable; an interval vector)
//   x0=-2  step=1  iters=300   (descent defaults)
struct ProblemFile {
    std::size_t arity = 0;
    std::optional<Box> domain;
    std::string objective_text;
    std::vector<RealVector> base_points;
    std::vector<IVector> candidates;
    std::optional<RealVector> x0;
    std::optional<double> step;
    std::optional<std::size_t> iters;

    Ivf objective() const;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

// "2", "(1,2)" or "1,2"
RealVector parse_point(std::string_view text);

} // namespace ghsub
