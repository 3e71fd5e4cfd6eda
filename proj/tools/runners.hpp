#pragma once

#include <cstdint>
#include <ostream>

namespace ghsub::tools {

// Canned reproduction of the worked examples; one PASS/FAIL line each.
bool run_examples(std::ostream& out);

// Randomized algebraic law checks; one line per law.
bool run_properties(std::ostream& out, std::uint64_t seed, int trials);

} // namespace ghsub::tools
