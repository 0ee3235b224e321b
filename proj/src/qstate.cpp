#include "qcorr/qstate.hpp"

#include <string>

namespace qcorr {

Mat2 pauli(int i) {
    const cplx I(0.0, 1.0);
    Mat2 s;
    switch (i) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli index must be 0..3");
    }
    return s;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

DensityMatrix DensityMatrix::validate(const Mat4& m) {
    if (!m.allFinite())
        throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");

    const double herr = hermiticity_error(m);
    if (herr > tolerance::hermitian)
        throw Error(ErrorCode::NotHermitian, "|m - m^dagger| = " + std::to_string(herr), herr);

    const double terr = std::abs(m.trace() - 1.0);
    if (terr > tolerance::trace)
        throw Error(ErrorCode::TraceNotOne, "|Tr m - 1| = " + std::to_string(terr), terr);

    const auto es = detail::jacobi_eigensystem<4>(0.5 * (m + m.adjoint()));
    const double lmin = es.values(3);
    if (lmin < -tolerance::psd_slack)
        throw Error(ErrorCode::NotPositive, "smallest eigenvalue " + std::to_string(lmin), lmin);

    return DensityMatrix(m);
}

Mat2 partial_trace(const DensityMatrix& rho, Subsystem traced_out) {
    const Mat4& m = rho.matrix();
    Mat2 out = Mat2::Zero();
    // m(2a + b, 2a' + b')
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                if (traced_out == Subsystem::B)
                    out(i, j) += m(2 * i + k, 2 * j + k);
                else
                    out(i, j) += m(2 * k + i, 2 * k + j);
            }
        }
    }
    return out;
}

BlochRep bloch_decompose(const DensityMatrix& rho) {
    const Mat4& m = rho.matrix();
    const Mat2 id = pauli(0);
    BlochRep b;
    for (int i = 0; i < 3; ++i) {
        b.x(i) = (m * kron(pauli(i + 1), id)).trace().real();
        b.y(i) = (m * kron(id, pauli(i + 1))).trace().real();
        for (int j = 0; j < 3; ++j)
            b.C(i, j) = (m * kron(pauli(i + 1), pauli(j + 1))).trace().real();
    }
    return b;
}

DensityMatrix bloch_compose(const BlochRep& b) {
    const Mat2 id = pauli(0);
    Mat4 m = kron(id, id);
    for (int i = 0; i < 3; ++i) {
        m += b.x(i) * kron(pauli(i + 1), id);
        m += b.y(i) * kron(id, pauli(i + 1));
        for (int j = 0; j < 3; ++j)
            m += b.C(i, j) * kron(pauli(i + 1), pauli(j + 1));
    }
    return DensityMatrix::validate(0.25 * m);
}

} // namespace qcorr
