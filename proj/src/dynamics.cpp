#include "qcorr/dynamics.hpp"

#include <cmath>
#include <string>

namespace qcorr {

ModelParams ModelParams::make(double gamma, double n, double r) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw Error(ErrorCode::InvalidConfig, "gamma must be > 0, got " + std::to_string(gamma));
    if (!(n >= 0.0) || !std::isfinite(n))
        throw Error(ErrorCode::InvalidConfig, "n must be >= 0, got " + std::to_string(n));
    if (!(r >= 0.0 && r <= 1.0))
        throw Error(ErrorCode::InvalidConfig, "r must lie in [0, 1], got " + std::to_string(r));
    return ModelParams(gamma, n, r);
}

namespace {

Mat2 lowering() {
    Mat2 s = Mat2::Zero();
    s(1, 0) = 1.0;  // |1> (index 0) -> |0> (index 1)
    return s;
}

Mat4 from_elements(const XStateElements& e) {
    Mat4 m = Mat4::Zero();
    m(0, 0) = e.p11;
    m(1, 1) = e.p22;
    m(2, 2) = e.p22;
    m(3, 3) = e.p44;
    m(1, 2) = e.p23;
    m(2, 1) = e.p23;
    return m;
}

double min_eigenvalue(const Mat4& m) {
    return detail::jacobi_eigensystem<4>(m).values(3);
}

} // namespace

DensityMatrix initial_state(const ModelParams& p) {
    const double r = p.r();
    return DensityMatrix::validate(from_elements({1.0 - r, r / 2.0, 0.0, r / 2.0}));
}

XStateElements analytic_elements(const ModelParams& p, double gamma_t) {
    const double n = p.n();
    const double r = p.r();
    const double k = 2.0 * n + 1.0;
    const double e1 = std::exp(-k * gamma_t);
    const double e2 = e1 * e1;
    const double pre = 1.0 / (2.0 * k * k);
    const double a = r * k - 2.0 * (n + 1.0);
    // The doubly-excited/ground coefficient is r(n+1)(4n+2) in all three
    // populations; any other value breaks Tr rho = 1.
    const double b = r * (n + 1.0) * (4.0 * n + 2.0) - 2.0 * (n + 1.0) * (n + 1.0);

    XStateElements e;
    e.p11 = pre * (2.0 * n * n - 2.0 * n * a * e1 - b * e2);
    e.p22 = pre * (2.0 * n * (n + 1.0) - a * e1 + b * e2);
    e.p44 = pre * (2.0 * (n + 1.0) * (n + 1.0) + 2.0 * (n + 1.0) * a * e1 - b * e2);
    e.p23 = 0.5 * r * e1;
    return e;
}

DensityMatrix analytic_state_at(const ModelParams& p, double gamma_t) {
    return DensityMatrix::validate(from_elements(analytic_elements(p, gamma_t)));
}

Mat4 lindblad_rhs(const ModelParams& p, const Mat4& rho) {
    const Mat2 id = Mat2::Identity();
    const Mat2 sm = lowering();
    const Mat2 sp = sm.adjoint();
    const double down = p.gamma() * (p.n() + 1.0);
    const double up = p.gamma() * p.n();

    auto dissipator = [&rho](const Mat4& l) -> Mat4 {
        const Mat4 ld = l.adjoint();
        const Mat4 ldl = ld * l;
        return l * rho * ld - 0.5 * (ldl * rho + rho * ldl);
    };

    Mat4 out = Mat4::Zero();
    for (const Mat4& l : {kron(sm, id), kron(id, sm)}) out += down * dissipator(l);
    for (const Mat4& l : {kron(sp, id), kron(id, sp)}) out += up * dissipator(l);
    return out;
}

Trajectory integrate(const ModelParams& p, double t_max, int steps) {
    if (steps < 1) throw Error(ErrorCode::InvalidConfig, "steps must be >= 1");
    if (!(t_max > 0.0)) throw Error(ErrorCode::InvalidConfig, "t_max must be > 0");

    constexpr double intermediate_slack = 1e-8;
    const double h = t_max / (p.gamma() * steps);  // real-time step

    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);

    Mat4 rho = initial_state(p).matrix();
    traj.times.push_back(0.0);
    traj.states.push_back(DensityMatrix::validate(rho));

    for (int k = 1; k <= steps; ++k) {
        const Mat4 k1 = lindblad_rhs(p, rho);
        const Mat4 k2 = lindblad_rhs(p, rho + 0.5 * h * k1);
        const Mat4 k3 = lindblad_rhs(p, rho + 0.5 * h * k2);
        const Mat4 k4 = lindblad_rhs(p, rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        rho = 0.5 * (rho + rho.adjoint());
        rho /= rho.trace().real();

        const double lmin = min_eigenvalue(rho);
        if (lmin < -intermediate_slack)
            throw Error(ErrorCode::StepTooLarge,
                        "eigenvalue " + std::to_string(lmin) + " at step " + std::to_string(k), lmin);

        traj.times.push_back(t_max * static_cast<double>(k) / steps);
        traj.states.push_back(DensityMatrix::validate(rho));
    }
    return traj;
}

std::optional<double> sudden_death_time(const ModelParams& p) {
    // C = 2 max{0, f} on the X-state family.
    auto f = [&p](double gt) {
        const XStateElements e = analytic_elements(p, gt);
        return std::abs(e.p23) - std::sqrt(std::max(0.0, e.p11 * e.p44));
    };

    if (f(0.0) <= 0.0) return std::nullopt;

    constexpr double scan_step = 0.01;
    double lo = 0.0;
    double hi = -1.0;
    const int scan_points = static_cast<int>(std::lround(sudden_death_search_max / scan_step));
    for (int k = 1; k <= scan_points; ++k) {
        const double t = k * scan_step;
        if (f(t) <= 0.0) {
            hi = t;
            break;
        }
        lo = t;
    }
    if (hi < 0.0)
        throw Error(ErrorCode::NoBracket, "concurrence stays positive on [0, " +
                                              std::to_string(sudden_death_search_max) + "] for n = " +
                                              std::to_string(p.n()) + ", r = " + std::to_string(p.r()));

    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace qcorr
