// precision.hpp — shared tolerance/budget knobs for summation and quadrature.
#pragma once

#include <cstdint>

namespace lopt {

struct Precision {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    // Cap on lattice points enumerated by one summation pass.
    std::int64_t max_terms = 1'000'000;
};

// Hard ceiling on enumerated points regardless of Precision::max_terms.
inline constexpr std::int64_t kHardPointBudget = 100'000'000;

}  // namespace lopt
