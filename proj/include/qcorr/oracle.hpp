#pragma once

// Definition-level evaluation of the optimized correlation quantities. These
// routines construct post-measurement states explicitly and maximize the
// disturbance over local measurements on subsystem a; they exist to check the
// closed forms in measures.hpp and never call them.

#include <Eigen/Dense>

#include "qcorr/measures.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

/// Unit Bloch vector m(theta, phi) defining Pi_1 = (1 + m.sigma)/2 and
/// Pi_2 = (1 - m.sigma)/2 on subsystem a.
class MeasurementDirection {
public:
    /// Throws Error{InvalidConfig} unless theta in [0, pi] and phi in [0, 2 pi).
    static MeasurementDirection make(double theta, double phi);
    /// Direction of a nonzero vector.
    static MeasurementDirection along(const Eigen::Vector3d& v);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }
    Eigen::Vector3d unit_vector() const;
    /// {Pi_1, Pi_2}.
    std::pair<Mat2, Mat2> projectors() const;

private:
    MeasurementDirection(double theta, double phi) : theta_(theta), phi_(phi) {}
    double theta_, phi_;
};

enum class Norm { HilbertSchmidt, Trace };

/// sum_k (Pi_k (x) 1) rho (Pi_k (x) 1).
DensityMatrix projective_post_state(const DensityMatrix& rho, const MeasurementDirection& d);

/// P(+) rho P(+) + P(-) rho P(-), P(+) = t1 Pi_1 + t2 Pi_2, P(-) = t2 Pi_1 + t1 Pi_2.
DensityMatrix weak_post_state(const DensityMatrix& rho, const MeasurementDirection& d, const WeakStrength& w);

/// ||rho - M(rho)||_2^2 or ||rho - M(rho)||_1 for the projective measurement
/// along d, or the weak one when `w` is given.
double disturbance(const DensityMatrix& rho, const MeasurementDirection& d, Norm norm,
                   const WeakStrength* w = nullptr);

struct GridOptions {
    int resolution = 100;       // G: theta gets G points, phi gets 2G
    int refine_factor = 10;     // refinement resolution relative to the grid
    double degeneracy_gap = 1e-9;
};

struct OracleResult {
    double value = 0.0;
    MeasurementDirection direction = MeasurementDirection::make(0.0, 0.0);
    bool searched = false;  // false when fixed by a non-degenerate marginal
};

/// Unconstrained grid + refinement maximum of the disturbance. Ties go to the
/// lexicographically smallest (theta, phi).
OracleResult grid_maximize(const DensityMatrix& rho, Norm norm, const WeakStrength* w = nullptr,
                           const GridOptions& opts = {});

/// Maximum over marginal-preserving measurements: fixed to the marginal
/// eigenbasis if it is non-degenerate, grid search otherwise.
OracleResult constrained_maximize(const DensityMatrix& rho, Norm norm, const WeakStrength* w = nullptr,
                                  const GridOptions& opts = {});

double brute_force_hs_min(const DensityMatrix& rho, const GridOptions& opts = {});
double brute_force_trace_min(const DensityMatrix& rho, const GridOptions& opts = {});
double brute_force_weak_min(const DensityMatrix& rho, const WeakStrength& w, Norm norm,
                            const GridOptions& opts = {});

} // namespace qcorr
