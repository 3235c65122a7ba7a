#pragma once

#include <string>
#include <vector>

namespace essmod {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Deterministic built-in verification: the staircase curve constants, the
// shortest-path duality of the modulus on graphs, the modulus laws, the
// essential-metric axioms, and the agreement of the two essential-distance
// routes. Every check runs even if an earlier one fails.
VerifyReport run_verification();

}  // namespace essmod
