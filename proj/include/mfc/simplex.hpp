#pragma once

#include "mfc/lp.hpp"

namespace mfc {

/// Bounded-variable primal simplex on a dense tableau. Two phases with
/// artificial columns; Dantzig pricing switching to Bland's rule for
/// anti-cycling. Deterministic for identical inputs.
class SimplexBackend : public LpBackend {
public:
    LpSolution solve(const LinearProgram& lp,
                     const std::vector<BoundOverride>& overrides = {}) override;
};

} // namespace mfc
