#include "ghsub/catalog.hpp"

namespace ghsub::catalog {

Ivf quartic() { return Ivf::parse(1, kQuartic, Box{Interval(0.0, 2.5)}); }
Ivf parabolas() { return Ivf::parse(1, kParabolas, Box{Interval(-1.0, 2.0)}); }
Ivf kink() { return Ivf::parse(1, kKink, Box{Interval(-2.0, 6.0)}); }
Ivf abs13() { return Ivf::parse(1, kAbs13, Box{Interval(-2.0, 2.0)}); }

std::vector<Entry> entries()
{
    return {
        {"quartic", kQuartic, Box{Interval(0.0, 2.5)}},
        {"parabolas", kParabolas, Box{Interval(-1.0, 2.0)}},
        {"kink", kKink, Box{Interval(-2.0, 6.0)}},
        {"abs13", kAbs13, Box{Interval(-2.0, 2.0)}},
    };
}

} // namespace ghsub::catalog
