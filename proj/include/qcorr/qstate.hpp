#pragma once

// Dense two-qubit state numerics.
//
// Basis ordering for the 4-dim space: index 0 <-> |11>, 1 <-> |10>,
// 2 <-> |01>, 3 <-> |00>, where |1> is the excited level. Single-qubit
// matrices use the ordering (|1>, |0>), so sigma_z = diag(+1, -1) and the
// two-qubit operators are plain Kronecker products A (x) B with subsystem a
// on the left.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qcorr/error.hpp"

namespace qcorr {

using cplx = std::complex<double>;

template <int N>
using CMatrix = Eigen::Matrix<cplx, N, N>;
using Mat2 = CMatrix<2>;
using Mat4 = CMatrix<4>;

namespace tolerance {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double psd_slack = 1e-10;
} // namespace tolerance

/// Pauli matrix sigma_i for i = 1, 2, 3; i = 0 gives the identity.
Mat2 pauli(int i);

Mat4 kron(const Mat2& a, const Mat2& b);

/// Largest element-wise deviation |m - m^dagger|.
template <int N>
double hermiticity_error(const CMatrix<N>& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
class DensityMatrix {
public:
    /// Throws Error{NotHermitian | TraceNotOne | NotPositive}.
    static DensityMatrix validate(const Mat4& m);

    const Mat4& matrix() const noexcept { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }

private:
    explicit DensityMatrix(const Mat4& m) : m_(m) {}
    Mat4 m_;
};

inline DensityMatrix validate_state(const Mat4& m) { return DensityMatrix::validate(m); }

template <int N>
struct EigenSystem {
    Eigen::Matrix<double, N, 1> values;  // descending
    CMatrix<N> vectors;                   // column k pairs with values(k)
};

namespace detail {

// Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair
// (p, q) by first removing the phase of a_pq and then applying a real
// Givens rotation.
template <int N>
EigenSystem<N> jacobi_eigensystem(CMatrix<N> a) {
    constexpr int max_sweeps = 100;
    CMatrix<N> v = CMatrix<N>::Identity();
    const double scale = std::max(1.0, a.norm());

    auto off_norm = [&a] {
        double s = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps && off_norm() >= 1e-14 * scale; ++sweep) {
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag < 1e-300) continue;
                const cplx phase = a(p, q) / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rotation block U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
                const cplx upp = c, upq = s;
                const cplx uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

                const auto ap = a.col(p).eval();
                const auto aq = a.col(q).eval();
                a.col(p) = upp * ap + uqp * aq;
                a.col(q) = upq * ap + uqq * aq;
                const auto rp = a.row(p).eval();
                const auto rq = a.row(q).eval();
                a.row(p) = std::conj(upp) * rp + std::conj(uqp) * rq;
                a.row(q) = std::conj(upq) * rp + std::conj(uqq) * rq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                const auto vp = v.col(p).eval();
                const auto vq = v.col(q).eval();
                v.col(p) = upp * vp + uqp * vq;
                v.col(q) = upq * vp + uqq * vq;
            }
        }
    }

    std::array<int, N> order;
    for (int i = 0; i < N; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem<N> out;
    for (int k = 0; k < N; ++k) {
        out.values(k) = a(order[k], order[k]).real();
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

} // namespace detail

/// Eigen-decomposition of a Hermitian matrix (dim 2 or 4).
/// Throws Error{NotHermitian} if |m - m^dagger| exceeds 1e-12 (relative to max(1, |m|_max)).
template <int N>
EigenSystem<N> hermitian_eigensystem(const CMatrix<N>& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double herr = hermiticity_error(m);
    if (herr > tolerance::hermitian * scale)
        throw Error(ErrorCode::NotHermitian, "eigensolver input deviates from its adjoint by " + std::to_string(herr), herr);
    return detail::jacobi_eigensystem<N>(0.5 * (m + m.adjoint()));
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything more negative is NotPositive.
template <int N>
CMatrix<N> matrix_sqrt_psd(const CMatrix<N>& m) {
    const auto es = hermitian_eigensystem<N>(m);
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double lmin = es.values(N - 1);
    if (lmin < -tolerance::psd_slack * scale)
        throw Error(ErrorCode::NotPositive, "smallest eigenvalue " + std::to_string(lmin), lmin);
    Eigen::Matrix<double, N, 1> roots = es.values.cwiseMax(0.0).cwiseSqrt();
    return es.vectors * roots.template cast<cplx>().asDiagonal() * es.vectors.adjoint();
}

/// Squared Hilbert-Schmidt norm Tr(A A^dagger).
template <int N>
double hs_norm_sq(const CMatrix<N>& m) {
    return m.squaredNorm();
}

/// Schatten-1 norm. Hermitian input uses sum |eigenvalue|; otherwise the
/// singular values come from the eigenvalues of A^dagger A.
template <int N>
double trace_norm(const CMatrix<N>& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (hermiticity_error(m) <= tolerance::hermitian * scale) {
        const auto es = detail::jacobi_eigensystem<N>(0.5 * (m + m.adjoint()));
        return es.values.cwiseAbs().sum();
    }
    const auto es = detail::jacobi_eigensystem<N>(m.adjoint() * m);
    return es.values.cwiseMax(0.0).cwiseSqrt().sum();
}

enum class Subsystem { A, B };

/// Reduced 2x2 state after tracing out `traced_out`.
Mat2 partial_trace(const DensityMatrix& rho, Subsystem traced_out);

/// Standard Pauli convention: x_i = Tr(rho sigma_i (x) 1),
/// y_j = Tr(rho 1 (x) sigma_j), C_ij = Tr(rho sigma_i (x) sigma_j).
struct BlochRep {
    Eigen::Vector3d x = Eigen::Vector3d::Zero();
    Eigen::Vector3d y = Eigen::Vector3d::Zero();
    Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
};

BlochRep bloch_decompose(const DensityMatrix& rho);

/// Inverse of bloch_decompose; throws NotPositive if the data is not a state.
DensityMatrix bloch_compose(const BlochRep& b);

} // namespace qcorr
