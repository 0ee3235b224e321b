#include "qcorr/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcorr {

using std::numbers::pi;

MeasurementDirection MeasurementDirection::make(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= pi))
        throw Error(ErrorCode::InvalidConfig, "theta must lie in [0, pi], got " + std::to_string(theta));
    if (!(phi >= 0.0 && phi < 2.0 * pi))
        throw Error(ErrorCode::InvalidConfig, "phi must lie in [0, 2 pi), got " + std::to_string(phi));
    return MeasurementDirection(theta, phi);
}

MeasurementDirection MeasurementDirection::along(const Eigen::Vector3d& v) {
    const Eigen::Vector3d u = v.normalized();
    const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
    double phi = std::atan2(u.y(), u.x());
    if (phi < 0.0) phi += 2.0 * pi;
    if (phi >= 2.0 * pi) phi = 0.0;
    return MeasurementDirection(theta, phi);
}

Eigen::Vector3d MeasurementDirection::unit_vector() const {
    return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
}

std::pair<Mat2, Mat2> MeasurementDirection::projectors() const {
    const Eigen::Vector3d m = unit_vector();
    const Mat2 ms = m.x() * pauli(1) + m.y() * pauli(2) + m.z() * pauli(3);
    const Mat2 id = Mat2::Identity();
    return {0.5 * (id + ms), 0.5 * (id - ms)};
}

namespace {

Mat4 projective_map(const Mat4& rho, const MeasurementDirection& d) {
    const auto [p1, p2] = d.projectors();
    const Mat2 id = Mat2::Identity();
    const Mat4 a = kron(p1, id);
    const Mat4 b = kron(p2, id);
    return a * rho * a + b * rho * b;
}

Mat4 weak_map(const Mat4& rho, const MeasurementDirection& d, const WeakStrength& w) {
    const auto [p1, p2] = d.projectors();
    const Mat2 id = Mat2::Identity();
    const Mat4 plus = kron(w.t1() * p1 + w.t2() * p2, id);
    const Mat4 minus = kron(w.t2() * p1 + w.t1() * p2, id);
    return plus * rho * plus.adjoint() + minus * rho * minus.adjoint();
}

double norm_of(const Mat4& m, Norm norm) {
    return norm == Norm::HilbertSchmidt ? hs_norm_sq<4>(m) : trace_norm<4>(m);
}

bool lex_less(double t1, double p1, double t2, double p2) {
    return t1 < t2 || (t1 == t2 && p1 < p2);
}

} // namespace

DensityMatrix projective_post_state(const DensityMatrix& rho, const MeasurementDirection& d) {
    return DensityMatrix::validate(projective_map(rho.matrix(), d));
}

DensityMatrix weak_post_state(const DensityMatrix& rho, const MeasurementDirection& d, const WeakStrength& w) {
    return DensityMatrix::validate(weak_map(rho.matrix(), d, w));
}

double disturbance(const DensityMatrix& rho, const MeasurementDirection& d, Norm norm, const WeakStrength* w) {
    const Mat4& m = rho.matrix();
    const Mat4 post = w ? weak_map(m, d, *w) : projective_map(m, d);
    return norm_of(m - post, norm);
}

OracleResult grid_maximize(const DensityMatrix& rho, Norm norm, const WeakStrength* w, const GridOptions& opts) {
    const int g = opts.resolution;
    const double dtheta = pi / (g - 1);
    const double dphi = pi / g;  // 2G points over [0, 2 pi)

    OracleResult best;
    best.value = -1.0;
    best.searched = true;

    auto consider = [&](double theta, double phi) {
        const auto d = MeasurementDirection::make(theta, phi);
        const double v = disturbance(rho, d, norm, w);
        if (v > best.value ||
            (v == best.value && lex_less(theta, phi, best.direction.theta(), best.direction.phi()))) {
            best.value = v;
            best.direction = d;
        }
    };

    for (int i = 0; i < g; ++i)
        for (int j = 0; j < 2 * g; ++j)
            consider(i == g - 1 ? pi : i * dtheta, j * dphi);

    // One refinement pass over the neighbouring cells at finer spacing.
    const double theta0 = best.direction.theta();
    const double phi0 = best.direction.phi();
    const int k = opts.refine_factor;
    for (int i = -k; i <= k; ++i) {
        const double theta = theta0 + i * dtheta / k;
        if (theta < 0.0 || theta > pi) continue;
        for (int j = -k; j <= k; ++j) {
            double phi = std::fmod(phi0 + j * dphi / k, 2.0 * pi);
            if (phi < 0.0) phi += 2.0 * pi;
            if (phi >= 2.0 * pi) phi = 0.0;
            consider(theta, phi);
        }
    }
    return best;
}

OracleResult constrained_maximize(const DensityMatrix& rho, Norm norm, const WeakStrength* w,
                                  const GridOptions& opts) {
    const Mat2 marginal = partial_trace(rho, Subsystem::B);
    const auto es = hermitian_eigensystem<2>(marginal);
    if (es.values(0) - es.values(1) > opts.degeneracy_gap) {
        // Bloch vector of the dominant eigenprojector.
        const Eigen::Vector2cd v = es.vectors.col(0);
        Eigen::Vector3d m;
        for (int i = 0; i < 3; ++i) m(i) = (v.adjoint() * pauli(i + 1) * v)(0, 0).real();
        OracleResult r;
        r.direction = MeasurementDirection::along(m);
        r.value = disturbance(rho, r.direction, norm, w);
        r.searched = false;
        return r;
    }
    return grid_maximize(rho, norm, w, opts);
}

double brute_force_hs_min(const DensityMatrix& rho, const GridOptions& opts) {
    return constrained_maximize(rho, Norm::HilbertSchmidt, nullptr, opts).value;
}

double brute_force_trace_min(const DensityMatrix& rho, const GridOptions& opts) {
    return constrained_maximize(rho, Norm::Trace, nullptr, opts).value;
}

double brute_force_weak_min(const DensityMatrix& rho, const WeakStrength& w, Norm norm, const GridOptions& opts) {
    return constrained_maximize(rho, norm, &w, opts).value;
}

} // namespace qcorr
