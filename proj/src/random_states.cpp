#include "qcorr/random_states.hpp"

#include <cmath>

namespace qcorr {

namespace {

// Box-Muller on the raw engine output, so draws are identical across
// standard libraries for a given seed.
double gaussian(Rng& rng) {
    constexpr double scale = 1.0 / 18446744073709551616.0;  // 2^-64
    const double u1 = (static_cast<double>(rng()) + 0.5) * scale;
    const double u2 = (static_cast<double>(rng()) + 0.5) * scale;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

cplx complex_gaussian(Rng& rng) {
    const double re = gaussian(rng);
    return {re, gaussian(rng)};
}

} // namespace

DensityMatrix random_state(Rng& rng) {
    Mat4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = complex_gaussian(rng);
    Mat4 m = g * g.adjoint();
    m = 0.5 * (m + m.adjoint());
    m /= m.trace().real();
    return DensityMatrix::validate(m);
}

DensityMatrix random_degenerate_marginal_state(Rng& rng) {
    const Mat4 rho = random_state(rng).matrix();
    const Mat4 yy = kron(pauli(2), pauli(2));
    Mat4 m = 0.5 * (rho + yy * rho.conjugate() * yy);
    m = 0.5 * (m + m.adjoint());
    m /= m.trace().real();
    return DensityMatrix::validate(m);
}

Mat2 random_unitary(Rng& rng) {
    Mat2 g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g(i, j) = complex_gaussian(rng);
    // QR of a Ginibre matrix with the R-diagonal phases removed.
    Eigen::HouseholderQR<Mat2> qr(g);
    Mat2 q = qr.householderQ();
    const Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 2; ++k) {
        const cplx d = r(k, k);
        if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
    }
    return q;
}

Mat4 random_hermitian(Rng& rng) {
    Mat4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = complex_gaussian(rng);
    return 0.5 * (g + g.adjoint());
}

} // namespace qcorr
