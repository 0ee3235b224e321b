#pragma once

// Self-check battery behind `qcorr validate`: analytic vs integrated
// dynamics, closed forms vs brute-force oracles, structural invariants, and
// the measured weak-measurement scaling.

#include <cstdint>
#include <string>
#include <vector>

namespace qcorr {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    bool informational = false;  // never affects the exit status
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    /// True iff every non-informational check passed.
    bool passed() const;
    const ValidationCheck* find(const std::string& name) const;
    std::string text() const;
};

/// Deterministic for given arguments. `rk4_steps` is the step count over
/// gamma*t in [0, 5] for the analytic-vs-RK4 check. Throws Error{InvalidConfig}
/// if sample_count < 1 or rk4_steps < 1.
ValidationReport run_validation(int sample_count, std::uint64_t seed, int rk4_steps = 500);

} // namespace qcorr
