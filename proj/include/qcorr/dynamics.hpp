#pragma once

// Two atoms, each coupled to its own thermal reservoir with equal decay rate
// gamma and mean photon number n. All public times are scaled times gamma*t.

#include <optional>
#include <vector>

#include "qcorr/qstate.hpp"

namespace qcorr {

class ModelParams {
public:
    /// Throws Error{InvalidConfig} unless gamma > 0, n >= 0, 0 <= r <= 1.
    static ModelParams make(double gamma, double n, double r);

    double gamma() const noexcept { return gamma_; }
    double n() const noexcept { return n_; }
    double r() const noexcept { return r_; }

private:
    ModelParams(double gamma, double n, double r) : gamma_(gamma), n_(n), r_(r) {}
    double gamma_, n_, r_;
};

struct Trajectory {
    std::vector<double> times;  // gamma*t, strictly increasing
    std::vector<DensityMatrix> states;
};

/// Nonzero elements of the X-structured solution (rho_22 = rho_33, rho_23 real).
struct XStateElements {
    double p11 = 0.0;
    double p22 = 0.0;
    double p44 = 0.0;
    double p23 = 0.0;
};

/// (1 - r)|11><11| + r|Phi+><Phi+| with |Phi+> = (|01> + |10>)/sqrt(2).
DensityMatrix initial_state(const ModelParams& p);

XStateElements analytic_elements(const ModelParams& p, double gamma_t);
DensityMatrix analytic_state_at(const ModelParams& p, double gamma_t);

/// Thermal Lindblad generator, summed over both atoms:
///   gamma (n+1) D[sigma_-] + gamma n D[sigma_+],  D[L]rho = L rho L^+ - {L^+ L, rho}/2.
Mat4 lindblad_rhs(const ModelParams& p, const Mat4& rho);
inline Mat4 lindblad_rhs(const ModelParams& p, const DensityMatrix& rho) { return lindblad_rhs(p, rho.matrix()); }

/// Fixed-step RK4 from initial_state(p) over [0, t_max] (scaled time) in
/// `steps` steps; stores steps + 1 states. Throws Error{StepTooLarge} if an
/// intermediate state has an eigenvalue below -1e-8.
Trajectory integrate(const ModelParams& p, double t_max, int steps);

/// Default RK4 resolution used by the sweeps.
inline constexpr int default_steps_per_unit = 100;

/// Upper end of the sudden-death search window in scaled time.
inline constexpr double sudden_death_search_max = 50.0;

/// First scaled time at which the concurrence of the analytic solution
/// vanishes, to 1e-9. Empty if the initial state is already unentangled.
/// Throws Error{NoBracket} if entanglement survives the whole search window.
std::optional<double> sudden_death_time(const ModelParams& p);

} // namespace qcorr
