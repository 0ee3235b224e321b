#pragma once

// Correlation measures on two-qubit states: concurrence, Hilbert-Schmidt and
// trace-norm measurement-induced nonlocality (MIN), and their weak-measurement
// counterparts.

#include <Eigen/Dense>

#include "qcorr/qstate.hpp"

namespace qcorr {

/// Below this Bloch-vector length the marginal of subsystem a is treated as
/// degenerate and the x = 0 branch of the MIN formulas is used.
inline constexpr double degenerate_marginal_threshold = 1e-9;

/// Measurement strength x >= 0 with amplitudes
/// t1 = sqrt((1 - tanh x)/2), t2 = sqrt((1 + tanh x)/2).
class WeakStrength {
public:
    /// Throws Error{NegativeStrength} for x < 0 or NaN.
    static WeakStrength make(double x);

    double x() const noexcept { return x_; }
    double t1() const noexcept { return t1_; }
    double t2() const noexcept { return t2_; }

private:
    WeakStrength(double x, double t1, double t2) : x_(x), t1_(t1), t2_(t2) {}
    double x_, t1_, t2_;
};

/// Correlation matrix brought to diagonal form by local rotations.
struct TraceMinCanonicalForm {
    Eigen::Vector3d c;   // singular values of C, descending
    Eigen::Vector3d xr;  // Bloch vector of a in the frame of the left singular vectors
    double alpha = 0.0;
    double beta_tilde = 0.0;
    double chi_plus = 0.0;
    double chi_minus = 0.0;
};

TraceMinCanonicalForm canonicalize_correlations(const BlochRep& b);

/// Wootters concurrence, general eigenvalue route.
double concurrence(const DensityMatrix& rho);

/// 2 max{0, |rho_23| - sqrt(rho_11 rho_44)}; requires the X structure with
/// only the (2,3)/(3,2) coherence (throws Error{NotXState} otherwise).
double concurrence_xstate(const DensityMatrix& rho);

/// Hilbert-Schmidt MIN (squared norm).
double hs_min(const DensityMatrix& rho);

/// Trace-norm MIN via canonical form.
double trace_min(const DensityMatrix& rho);
double trace_min(const TraceMinCanonicalForm& form);

/// 1 - t1 t2 = 1 - sech(x)/2.
double weak_factor(const WeakStrength& w);

double weak_hs_min(const DensityMatrix& rho, const WeakStrength& w);
double weak_trace_min(const DensityMatrix& rho, const WeakStrength& w);

struct MeasureReport {
    double C = 0.0;
    double N2 = 0.0;
    double N1 = 0.0;
    double N2W = 0.0;
    double N1W = 0.0;
};

MeasureReport measure_report(const DensityMatrix& rho, const WeakStrength& w);

} // namespace qcorr
