#include "qcorr/measures.hpp"

#include <cmath>
#include <string>

namespace qcorr {

WeakStrength WeakStrength::make(double x) {
    if (!(x >= 0.0))
        throw Error(ErrorCode::NegativeStrength, "measurement strength must be >= 0, got " + std::to_string(x), x);
    // (1 -+ tanh x)/2 = 1/(1 + e^{+-2x}); this form keeps t1 accurate for large x.
    const double t1 = std::sqrt(1.0 / (1.0 + std::exp(2.0 * x)));
    const double t2 = std::sqrt(1.0 / (1.0 + std::exp(-2.0 * x)));
    return WeakStrength(x, t1, t2);
}

namespace {

bool degenerate(const Eigen::Vector3d& a) { return a.norm() < degenerate_marginal_threshold; }

} // namespace

TraceMinCanonicalForm canonicalize_correlations(const BlochRep& b) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(b.C, Eigen::ComputeFullU | Eigen::ComputeFullV);
    TraceMinCanonicalForm f;
    f.c = svd.singularValues();
    f.xr = svd.matrixU().transpose() * b.x;

    const Eigen::Vector3d c2 = f.c.cwiseAbs2();
    const Eigen::Vector3d x2 = f.xr.cwiseAbs2();
    const double xnorm = f.xr.norm();
    // |c|^2 |x|^2 - sum c_i^2 x_i^2, expanded to avoid cancellation.
    f.alpha = x2(0) * (c2(1) + c2(2)) + x2(1) * (c2(2) + c2(0)) + x2(2) * (c2(0) + c2(1));
    f.beta_tilde = x2(0) * c2(1) * c2(2) + x2(1) * c2(2) * c2(0) + x2(2) * c2(0) * c2(1);
    const double root = 2.0 * std::sqrt(f.beta_tilde) * xnorm;
    f.chi_plus = f.alpha + root;
    // alpha - root cancels exactly on X states, and sqrt(chi_minus) would turn
    // that roundoff into ~1e-8 errors. Use chi_minus = (alpha^2 - root^2)/chi_plus
    // with the numerator written in differences of the c_i^2.
    const double d12 = c2(0) - c2(1), d23 = c2(1) - c2(2), d31 = c2(2) - c2(0);
    const double numer = x2(0) * x2(0) * d23 * d23 + x2(1) * x2(1) * d31 * d31 + x2(2) * x2(2) * d12 * d12 -
                         2.0 * x2(0) * x2(1) * d31 * d23 - 2.0 * x2(1) * x2(2) * d12 * d31 -
                         2.0 * x2(0) * x2(2) * d12 * d23;
    f.chi_minus = f.chi_plus > 0.0 ? std::max(0.0, numer) / f.chi_plus : 0.0;
    return f;
}

double concurrence(const DensityMatrix& rho) {
    const Mat4 yy = kron(pauli(2), pauli(2));
    const Mat4 flipped = yy * rho.matrix().conjugate() * yy;
    const Mat4 sq = matrix_sqrt_psd<4>(rho.matrix());
    Mat4 inner = sq * flipped * sq;
    inner = 0.5 * (inner + inner.adjoint());
    // Eigenvalues of sqrt(inner) are the square roots of those of inner.
    const Eigen::Vector4d lam = hermitian_eigensystem<4>(inner).values.cwiseMax(0.0).cwiseSqrt();
    return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double concurrence_xstate(const DensityMatrix& rho) {
    const Mat4& m = rho.matrix();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j || (i == 1 && j == 2) || (i == 2 && j == 1)) continue;
            if (std::abs(m(i, j)) > 1e-12)
                throw Error(ErrorCode::NotXState,
                            "element (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is nonzero",
                            std::abs(m(i, j)));
        }
    }
    const double p11 = std::max(0.0, m(0, 0).real());
    const double p44 = std::max(0.0, m(3, 3).real());
    return 2.0 * std::max(0.0, std::abs(m(1, 2)) - std::sqrt(p11 * p44));
}

double hs_min(const DensityMatrix& rho) {
    const BlochRep b = bloch_decompose(rho);
    // Orthonormal-operator correlation matrix T = C/2.
    const Eigen::Matrix3d T = 0.5 * b.C;
    const Eigen::Matrix3d TT = T * T.transpose();
    double value;
    if (degenerate(b.x)) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(TT, Eigen::EigenvaluesOnly);
        value = TT.trace() - es.eigenvalues()(0);
    } else {
        // Tr(T T^t) - a^t T T^t a = ||(1 - a a^t) T||^2 for unit a; no cancellation.
        const Eigen::Vector3d a = b.x.normalized();
        value = ((Eigen::Matrix3d::Identity() - a * a.transpose()) * T).squaredNorm();
    }
    return std::max(0.0, value);
}

double trace_min(const TraceMinCanonicalForm& f) {
    const double xnorm = f.xr.norm();
    if (xnorm < degenerate_marginal_threshold) return f.c.cwiseAbs().maxCoeff();
    return (std::sqrt(f.chi_plus) + std::sqrt(f.chi_minus)) / (2.0 * xnorm);
}

double trace_min(const DensityMatrix& rho) {
    return trace_min(canonicalize_correlations(bloch_decompose(rho)));
}

double weak_factor(const WeakStrength& w) {
    return 1.0 - w.t1() * w.t2();
}

double weak_hs_min(const DensityMatrix& rho, const WeakStrength& w) {
    return weak_factor(w) * hs_min(rho);
}

double weak_trace_min(const DensityMatrix& rho, const WeakStrength& w) {
    return weak_factor(w) * trace_min(rho);
}

MeasureReport measure_report(const DensityMatrix& rho, const WeakStrength& w) {
    MeasureReport r;
    r.C = concurrence(rho);
    r.N2 = hs_min(rho);
    r.N1 = trace_min(rho);
    const double k = weak_factor(w);
    r.N2W = k * r.N2;
    r.N1W = k * r.N1;
    return r;
}

} // namespace qcorr
