#include "qcorr/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qcorr/dynamics.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/oracle.hpp"
#include "qcorr/random_states.hpp"

namespace qcorr {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ValidationCheck make_check(std::string name, double observed, double tol, std::string what = "max_err") {
    ValidationCheck c;
    c.name = std::move(name);
    c.passed = observed <= tol;
    c.detail = what + "=" + sci(observed) + " tol=" + sci(tol);
    return c;
}

struct TrajectorySample {
    double n, r, gamma_t;
};

std::vector<TrajectorySample> trajectory_samples() {
    const double ns[] = {0.1, 0.5, 1.0};
    const double rs[] = {0.3, 0.5, 1.0};
    std::vector<TrajectorySample> out;
    for (int i = 0; i < 50; ++i) out.push_back({ns[i % 3], rs[(i / 3) % 3], 0.1 * (i % 25)});
    return out;
}

std::vector<DensityMatrix> seeded_states(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<DensityMatrix> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(i % 2 == 0 ? random_state(rng) : random_degenerate_marginal_state(rng));
    return out;
}

// Worst closed-form vs oracle deviation, normalized by the tolerance that
// applies to each state (direct eigenbasis vs grid search).
struct OracleAgreement {
    double direct_err = 0.0;
    double grid_err = 0.0;
    double grid_overshoot = -1.0;  // oracle - closed, must stay <= 1e-9
    int direct_count = 0;
    int grid_count = 0;
};

void accumulate(OracleAgreement& acc, const DensityMatrix& rho) {
    for (Norm norm : {Norm::HilbertSchmidt, Norm::Trace}) {
        const double closed = norm == Norm::HilbertSchmidt ? hs_min(rho) : trace_min(rho);
        const OracleResult o = constrained_maximize(rho, norm);
        const double err = std::abs(closed - o.value);
        if (o.searched) {
            acc.grid_err = std::max(acc.grid_err, err);
            acc.grid_overshoot = std::max(acc.grid_overshoot, o.value - closed);
            ++acc.grid_count;
        } else {
            acc.direct_err = std::max(acc.direct_err, err);
            ++acc.direct_count;
        }
    }
}

ValidationCheck oracle_check(const std::string& name, const OracleAgreement& acc) {
    ValidationCheck c;
    c.name = name;
    c.passed = acc.direct_err <= 1e-9 && acc.grid_err <= 1e-3 && acc.grid_overshoot <= 1e-9;
    c.detail = "direct(" + std::to_string(acc.direct_count) + ") max_err=" + sci(acc.direct_err) +
               " tol=1e-09; grid(" + std::to_string(acc.grid_count) + ") max_err=" + sci(acc.grid_err) +
               " tol=0.001 overshoot=" + sci(std::max(0.0, acc.grid_overshoot)) + " tol=1e-09";
    return c;
}

} // namespace

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.informational || c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string ValidationReport::text() const {
    std::ostringstream out;
    int failed = 0;
    for (const auto& c : checks) {
        const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
        if (!c.informational && !c.passed) ++failed;
        out << tag << "  " << c.name << ": " << c.detail << '\n';
    }
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    return out.str();
}

ValidationReport run_validation(int sample_count, std::uint64_t seed, int rk4_steps) {
    if (sample_count < 1) throw Error(ErrorCode::InvalidConfig, "sample count must be >= 1");
    if (rk4_steps < 1) throw Error(ErrorCode::InvalidConfig, "rk4 steps must be >= 1");

    ValidationReport report;
    auto& checks = report.checks;
    const double ns[] = {0.1, 0.5, 1.0};
    const double rs[] = {0.3, 0.5, 1.0};

    // (a) analytic propagator vs RK4 on the thermal generator
    {
        double err = 0.0;
        for (double n : ns) {
            for (double r : rs) {
                const auto p = ModelParams::make(1.0, n, r);
                const Trajectory traj = integrate(p, 5.0, rk4_steps);
                for (std::size_t k = 0; k < traj.times.size(); ++k) {
                    const Mat4 diff = traj.states[k].matrix() - analytic_state_at(p, traj.times[k]).matrix();
                    err = std::max(err, diff.cwiseAbs().maxCoeff());
                }
            }
        }
        checks.push_back(make_check("analytic_vs_rk4", err, 1e-8, "steps=" + std::to_string(rk4_steps) + " max_err"));
    }

    // (b) closed forms vs brute-force maximization
    {
        OracleAgreement acc;
        for (const auto& s : trajectory_samples())
            accumulate(acc, analytic_state_at(ModelParams::make(1.0, s.n, s.r), s.gamma_t));
        checks.push_back(oracle_check("closed_vs_oracle_trajectory", acc));
    }
    const auto states = seeded_states(sample_count, seed);
    {
        OracleAgreement acc;
        for (const auto& rho : states) accumulate(acc, rho);
        checks.push_back(oracle_check("closed_vs_oracle_random", acc));
    }

    // (c) invariants
    {
        double err = 0.0;
        for (const auto& rho : states)
            err = std::max(err, (bloch_compose(bloch_decompose(rho)).matrix() - rho.matrix()).cwiseAbs().maxCoeff());
        checks.push_back(make_check("bloch_round_trip", err, 1e-12));
    }
    {
        Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
        double err = 0.0;
        for (int i = 0; i < sample_count; ++i) {
            const Mat4 h = random_hermitian(rng);
            const auto es = hermitian_eigensystem<4>(h);
            const Mat4 rebuilt = es.vectors * es.values.cast<cplx>().asDiagonal() * es.vectors.adjoint();
            err = std::max(err, (rebuilt - h).cwiseAbs().maxCoeff());
        }
        checks.push_back(make_check("eigensystem_reconstruction", err, 1e-10));
    }
    {
        double worst = 0.0;
        for (const auto& rho : states) {
            const Mat4 a = rho.matrix() - Mat4::Identity() / 4.0;
            worst = std::max(worst, std::sqrt(hs_norm_sq<4>(a)) - trace_norm<4>(a));
        }
        checks.push_back(make_check("trace_norm_dominates_hs", worst, 1e-12, "max(sqrt(hs)-trace)"));
    }
    {
        double err = 0.0, range = 0.0;
        for (const auto& rho : states) {
            for (Subsystem s : {Subsystem::A, Subsystem::B})
                err = std::max(err, std::abs(partial_trace(rho, s).trace() - 1.0));
            const double c = concurrence(rho);
            range = std::max({range, -c, c - 1.0});
        }
        checks.push_back(make_check("partial_trace_preserves_trace", err, 1e-12));
        checks.push_back(make_check("concurrence_in_unit_interval", std::max(0.0, range), 0.0, "max_violation"));
    }
    {
        Rng rng(seed + 1);
        double err = 0.0;
        for (const auto& rho : states) {
            const Mat4 u = kron(random_unitary(rng), random_unitary(rng));
            const auto rotated = DensityMatrix::validate(u * rho.matrix() * u.adjoint());
            err = std::max({err, std::abs(hs_min(rotated) - hs_min(rho)),
                            std::abs(trace_min(rotated) - trace_min(rho))});
        }
        checks.push_back(make_check("local_unitary_invariance", err, 1e-8));
    }
    {
        double worst = -1.0;
        double prev = weak_factor(WeakStrength::make(0.0));
        for (int i = 1; i <= 400; ++i) {
            const double cur = weak_factor(WeakStrength::make(0.05 * i));
            worst = std::max(worst, prev - cur);
            prev = cur;
        }
        ValidationCheck c;
        c.name = "weak_factor_strictly_increasing";
        c.passed = worst < 0.0;
        c.detail = "max(f(x)-f(x+0.05)) on [0,20]=" + sci(worst) + " must be < 0";
        checks.push_back(c);
    }
    {
        double worst = 0.0;
        for (const auto& rho : states) {
            for (double x : {0.0, 0.1, 1.0, 3.0, 30.0}) {
                const auto w = WeakStrength::make(x);
                worst = std::max({worst, weak_hs_min(rho, w) - hs_min(rho), weak_trace_min(rho, w) - trace_min(rho)});
            }
        }
        checks.push_back(make_check("weak_not_above_projective", worst, 0.0, "max(weak-projective)"));
    }
    {
        double herm = 0.0, trace = 0.0, neg = 0.0, mono = 0.0, xerr = 0.0;
        for (double n : ns) {
            for (double r : rs) {
                const auto p = ModelParams::make(1.0, n, r);
                double prev[3] = {1e300, 1e300, 1e300};
                for (int k = 0; k <= 200; ++k) {
                    const double t = 0.05 * k;
                    const DensityMatrix rho = analytic_state_at(p, t);
                    const Mat4& m = rho.matrix();
                    herm = std::max(herm, hermiticity_error(m));
                    trace = std::max(trace, std::abs(m.trace() - 1.0));
                    neg = std::max(neg, -hermitian_eigensystem<4>(m).values(3));
                    const double cur[3] = {concurrence(rho), hs_min(rho), trace_min(rho)};
                    for (int j = 0; j < 3; ++j) {
                        mono = std::max(mono, cur[j] - prev[j]);
                        prev[j] = cur[j];
                    }
                    const double p23 = std::abs(m(1, 2));
                    xerr = std::max({xerr, std::abs(concurrence_xstate(rho) - cur[0]),
                                     std::abs(2.0 * p23 * p23 - cur[1]), std::abs(2.0 * p23 - cur[2])});
                }
            }
        }
        checks.push_back(make_check("trajectory_hermiticity", herm, 1e-12));
        checks.push_back(make_check("trajectory_unit_trace", trace, 1e-12));
        checks.push_back(make_check("trajectory_psd", neg, 1e-10, "max(-lambda_min)"));
        checks.push_back(make_check("trajectory_measures_nonincreasing", mono, 1e-12, "max_increase"));
        checks.push_back(make_check("xstate_identities", xerr, 1e-10));
    }

    // (d) weak-measurement scaling measured through the post-measurement state
    {
        const auto p = ModelParams::make(1.0, 0.5, 0.5);
        const DensityMatrix rho = analytic_state_at(p, 1.0);
        const double n2 = hs_min(rho);
        const double n1 = trace_min(rho);
        double hs_err = 0.0, tr_err = 0.0;
        std::string info;
        for (double x : {0.1, 1.0, 3.0, 30.0}) {
            const auto w = WeakStrength::make(x);
            const double sech = 1.0 / std::cosh(x);
            const double hs_ratio = brute_force_weak_min(rho, w, Norm::HilbertSchmidt) / n2;
            const double tr_ratio = brute_force_weak_min(rho, w, Norm::Trace) / n1;
            hs_err = std::max(hs_err, std::abs(hs_ratio - (1.0 - sech) * (1.0 - sech)));
            tr_err = std::max(tr_err, std::abs(tr_ratio - (1.0 - sech)));
            info += " x=" + sci(x) + ": hs_ratio=" + sci(hs_ratio) + " trace_ratio=" + sci(tr_ratio) +
                    " closed_form_factor=" + sci(weak_factor(w)) + ";";
        }
        checks.push_back(make_check("weak_hs_ratio_is_(1-2t1t2)^2", hs_err, 1e-6));
        checks.push_back(make_check("weak_trace_ratio_is_(1-2t1t2)", tr_err, 1e-6));
        ValidationCheck c;
        c.name = "weak_scaling_discrepancy";
        c.informational = true;
        c.passed = true;
        c.detail = "direct post-measurement ratios vs closed-form factor 1-t1t2 at n=0.5 r=0.5 gamma_t=1;" + info;
        checks.push_back(c);
    }

    return report;
}

} // namespace qcorr
