#pragma once

#include "ttk/base.hpp"

#include <optional>

namespace ttk {

// maximize c.x subject to A x = b, x >= 0, solved exactly (two-phase simplex,
// Bland's rule). Returns nullopt when infeasible; throws on unboundedness.
struct LPResult {
    Rational value;
    RVec x;
};

std::optional<LPResult> lp_maximize(const std::vector<RVec>& A, const RVec& b, const RVec& c);

}  // namespace ttk
