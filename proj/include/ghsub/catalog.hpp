#pragma once

#include "ghsub/ivf.hpp"

#include <string>
#include <vector>

namespace ghsub::catalog {

// [1,1]x⁴ ⊕ [0,1](x²−x⁴+34) ⊕ [1,6] = [x⁴+1, x²+40] on [0, 2.5]
inline constexpr const char* kQuartic = "[1,1]*pow4(x1) + [0,1]*(pow2(x1) - pow4(x1) + 34) + [1,6]";
// [1,2]x² ⊖ [0,2](x+1) ⊕ [4,6] = [x²−2x+2, 2x²+6] on [−1, 2]
inline constexpr const char* kParabolas = "[1,2]*pow2(x1) - [0,2]*(x1 + 1) + [4,6]";
// piecewise objective with efficient point 2 on [−2, 6]
inline constexpr const char* kKink =
    "piecewise{ x1 >= 1 & x1 <= 3 => [-2,5] ghsub [-1,0]*abs(x1 - 2); otherwise => [-2,3] + [1,2]*abs(x1 - 2); }";
// |x|⊙[1,3] on [−2, 2]
inline constexpr const char* kAbs13 = "abs(x1)*[1,3]";

Ivf quartic();
Ivf parabolas();
Ivf kink();
Ivf abs13();

struct Entry {
    std::string name;
    std::string text;
    Box domain;
};

std::vector<Entry> entries();

} // namespace ghsub::catalog
