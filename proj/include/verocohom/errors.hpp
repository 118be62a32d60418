#pragma once

#include <stdexcept>
#include <string>

namespace verocohom {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RouteNotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};

struct DegenerateMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A result that two theorems force to agree failed to; signals a bug.
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace verocohom
