#pragma once

#include "lebnorm/numbers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lebnorm {

/// One failed identity: which one, where, and both sides' exact values.
struct CheckFailure {
    std::string identity;
    std::string location;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one machine check over a stated index range.
struct CheckReport {
    std::string name;
    std::string range;
    std::int64_t checked = 0;
    std::vector<CheckFailure> failures;
    /// Largest |defect| seen; set by the gram inverse check only.
    std::optional<Rational> max_defect;

    bool passed() const { return failures.empty(); }
};

}  // namespace lebnorm
