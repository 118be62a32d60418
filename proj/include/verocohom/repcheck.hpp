#pragma once

#include <string>
#include <vector>

#include "verocohom/operators.hpp"

namespace verocohom {

struct RepcheckResult {
    bool ok = true;
    std::vector<std::string> lines;
    std::vector<unsigned long> summand_dims; // dim A_t for t = 0..k
};

/// Runs the decomposition and operator-identity checks on S^kU (x) S^dU:
/// the summand dimensions and direct-sum property, the two kernel
/// characterizations, and the polarization identities on sample elements.
/// Requires 1 <= k <= d; throws BudgetExceeded when the space is too large.
RepcheckResult repcheck(unsigned n, unsigned d, unsigned k);

} // namespace verocohom
