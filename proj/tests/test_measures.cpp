#include <doctest.h>

#include <cmath>

#include "qcorr/dynamics.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random_states.hpp"
#include "test_support.hpp"

using namespace qcorr;
using qcorr::test::diag4;
using qcorr::test::phi_plus;
using qcorr::test::qubit;

namespace {

DensityMatrix x_state(double p11, double p22, double p33, double p44, double p23) {
    Mat4 m = diag4(p11, p22, p33, p44);
    m(1, 2) = m(2, 1) = p23;
    return validate_state(m);
}

} // namespace

TEST_CASE("WeakStrength amplitudes") {
    for (double x : {0.0, 0.1, 0.5, 1.0, 3.0, 10.0, 30.0}) {
        const auto w = WeakStrength::make(x);
        CHECK(std::abs(w.t1() * w.t1() + w.t2() * w.t2() - 1.0) <= 1e-14);
        CHECK(std::abs(w.t1() * w.t2() - 0.5 / std::cosh(x)) <= 1e-14);
        // (1 - tanh x)/2 = e^{-x} / (2 cosh x), which stays accurate for large x
        CHECK(std::abs(w.t1() / std::sqrt(std::exp(-x) / (2.0 * std::cosh(x))) - 1.0) <= 1e-14);
        CHECK(std::abs(w.t2() - std::sqrt((1.0 + std::tanh(x)) / 2.0)) <= 1e-14);
    }
    try {
        WeakStrength::make(-0.1);
        FAIL("expected NegativeStrength");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeStrength);
    }
    CHECK_THROWS_AS(WeakStrength::make(std::nan("")), Error);
}

TEST_CASE("weak_factor values") {
    // Frozen from 1 - sech(x)/2 at 50 digits (tests/oracles/derive_constants.py).
    CHECK(std::abs(weak_factor(WeakStrength::make(0.0)) - 0.5) <= 1e-14);
    CHECK(std::abs(weak_factor(WeakStrength::make(0.1)) - 0.50248962552338675) <= 1e-14);
    CHECK(std::abs(weak_factor(WeakStrength::make(1.0)) - 0.6759728631680573) <= 1e-14);
    CHECK(std::abs(weak_factor(WeakStrength::make(3.0)) - 0.9503360362902834) <= 1e-14);
    CHECK(std::abs(weak_factor(WeakStrength::make(30.0)) - 1.0) <= 1e-12);
}

TEST_CASE("weak_factor is strictly increasing with range [1/2, 1)") {
    double prev = weak_factor(WeakStrength::make(0.0));
    for (int i = 1; i <= 2000; ++i) {
        const double cur = weak_factor(WeakStrength::make(0.01 * i));
        REQUIRE(cur > prev);
        REQUIRE(cur < 1.0);
        prev = cur;
    }
}

TEST_CASE("concurrence examples") {
    CHECK(concurrence(validate_state(phi_plus())) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(validate_state(Mat4::Identity() / 4.0)) == doctest::Approx(0.0));
    const auto rho0 = initial_state(ModelParams::make(1.0, 0.3, 0.5));
    CHECK(std::abs(concurrence(rho0) - 0.5) <= 1e-10);
    CHECK(std::abs(concurrence_xstate(rho0) - 0.5) <= 1e-12);
}

TEST_CASE("concurrence on product and Werner states") {
    const auto product = validate_state(kron(qubit(0.1, 0.2, 0.3), qubit(-0.5, 0.0, 0.1)));
    CHECK(concurrence(product) <= 1e-7);

    // Werner p|Phi+><Phi+| + (1-p) 1/4 has C = max(0, (3p - 1)/2).
    for (double p : {0.1, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
        const auto w = validate_state(p * phi_plus() + (1.0 - p) * Mat4::Identity() / 4.0);
        CHECK(std::abs(concurrence(w) - std::max(0.0, (3.0 * p - 1.0) / 2.0)) <= 1e-10);
    }
}

TEST_CASE("concurrence stays in [0, 1] on random states") {
    Rng rng(101);
    for (int i = 0; i < 1000; ++i) {
        const double c = concurrence(random_state(rng));
        REQUIRE(c >= 0.0);
        REQUIRE(c <= 1.0);
    }
}

TEST_CASE("concurrence_xstate") {
    CHECK(concurrence_xstate(x_state(0, 0.5, 0.5, 0, 0.5)) == doctest::Approx(1.0));
    CHECK(concurrence_xstate(x_state(0.2, 0.3, 0.3, 0.2, 0.1)) == 0.0);

    // general route as oracle along trajectories
    for (double n : {0.1, 0.5, 1.0}) {
        for (double r : {0.3, 0.7, 1.0}) {
            const auto p = ModelParams::make(1.0, n, r);
            for (int k = 0; k <= 100; ++k) {
                const auto rho = analytic_state_at(p, 0.04 * k);
                REQUIRE(std::abs(concurrence_xstate(rho) - concurrence(rho)) <= 1e-10);
            }
        }
    }

    try {
        concurrence_xstate(validate_state(Mat4::Constant(0.25)));
        FAIL("expected NotXState");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotXState);
    }
}

TEST_CASE("hs_min examples") {
    // Product states with non-degenerate marginal on a.
    CHECK(hs_min(validate_state(kron(qubit(0.0, 0.0, 0.4), qubit(0.1, 0.2, 0.3)))) <= 1e-15);
    CHECK(hs_min(validate_state(kron(qubit(0.3, -0.2, 0.1), qubit(0.0, 0.0, -0.7)))) <= 1e-15);

    CHECK(std::abs(hs_min(validate_state(phi_plus())) - 0.5) <= 1e-14);

    for (double t : {0.0, 0.3, 1.0, 2.5}) {
        const auto rho = analytic_state_at(ModelParams::make(1.0, 0.5, 0.8), t);
        const double p23 = rho(1, 2).real();
        CHECK(std::abs(hs_min(rho) - 2.0 * p23 * p23) <= 1e-14);
    }
}

TEST_CASE("trace_min examples") {
    CHECK(std::abs(trace_min(validate_state(phi_plus())) - 1.0) <= 1e-14);
    CHECK(trace_min(validate_state(kron(qubit(0.0, 0.0, 0.4), qubit(0.1, 0.2, 0.3)))) <= 1e-14);

    // 2 rho23 with rho23 = (1/2) e^{-(2n+1) gamma t}, (n, r, gamma t) = (0.5, 1, 0.5)
    const auto rho = analytic_state_at(ModelParams::make(1.0, 0.5, 1.0), 0.5);
    CHECK(std::abs(trace_min(rho) - 0.36787944117144232) <= 1e-14);
}

TEST_CASE("canonicalize_correlations") {
    BlochRep b;
    b.C = Eigen::Vector3d(0.2, -0.6, 0.4).asDiagonal();
    b.x = Eigen::Vector3d(0.1, 0.2, 0.3);
    const auto f = canonicalize_correlations(b);
    CHECK(f.c(0) == doctest::Approx(0.6));
    CHECK(f.c(1) == doctest::Approx(0.4));
    CHECK(f.c(2) == doctest::Approx(0.2));
    // xr is x permuted along with the singular values, up to signs
    CHECK(std::abs(f.xr(0)) == doctest::Approx(0.2));
    CHECK(std::abs(f.xr(1)) == doctest::Approx(0.3));
    CHECK(std::abs(f.xr(2)) == doctest::Approx(0.1));
    CHECK(f.chi_plus >= f.chi_minus);
    CHECK(f.chi_minus >= 0.0);

    const Eigen::Vector3d c2 = f.c.cwiseAbs2(), x2 = f.xr.cwiseAbs2();
    CHECK(f.alpha == doctest::Approx(c2.sum() * x2.sum() - c2.dot(x2)));
    CHECK(f.chi_minus == doctest::Approx(f.alpha - 2.0 * std::sqrt(f.beta_tilde) * f.xr.norm()));

    BlochRep zero;
    zero.x = Eigen::Vector3d(0.0, 0.3, 0.0);
    const auto fz = canonicalize_correlations(zero);
    CHECK(fz.c.norm() == 0.0);
    CHECK(trace_min(fz) == 0.0);
}

TEST_CASE("MINs are invariant under local unitaries") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto rho = i % 2 ? random_state(rng) : random_degenerate_marginal_state(rng);
        const Mat4 u = kron(random_unitary(rng), random_unitary(rng));
        const auto rotated = validate_state(u * rho.matrix() * u.adjoint());
        REQUIRE(std::abs(hs_min(rotated) - hs_min(rho)) <= 1e-8);
        REQUIRE(std::abs(trace_min(rotated) - trace_min(rho)) <= 1e-8);
    }
}

TEST_CASE("weak MINs") {
    const auto bell = validate_state(phi_plus());
    const auto w0 = WeakStrength::make(0.0);
    CHECK(std::abs(weak_hs_min(bell, w0) - 0.25) <= 1e-14);
    CHECK(std::abs(weak_trace_min(bell, w0) - 0.5) <= 1e-14);

    const auto product = validate_state(kron(qubit(0.0, 0.0, 0.4), qubit(0.1, 0.2, 0.3)));
    for (double x : {0.0, 1.0, 30.0}) CHECK(weak_hs_min(product, WeakStrength::make(x)) <= 1e-15);

    const auto w30 = WeakStrength::make(30.0);
    for (double t : {0.0, 0.5, 2.0}) {
        const auto rho = analytic_state_at(ModelParams::make(1.0, 0.5, 0.5), t);
        CHECK(std::abs(weak_hs_min(rho, w30) - hs_min(rho)) <= 1e-10);
        CHECK(std::abs(weak_trace_min(rho, w30) - trace_min(rho)) <= 1e-10);
    }

    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const auto rho = random_state(rng);
        for (double x : {0.0, 0.1, 1.0, 3.0, 30.0}) {
            const auto w = WeakStrength::make(x);
            REQUIRE(weak_hs_min(rho, w) <= hs_min(rho));
            REQUIRE(weak_trace_min(rho, w) <= trace_min(rho));
        }
    }
}

TEST_CASE("MeasureReport invariants") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const auto r = measure_report(random_state(rng), WeakStrength::make(0.7));
        REQUIRE(r.C >= 0.0);
        REQUIRE(r.C <= 1.0);
        REQUIRE(r.N2 >= 0.0);
        REQUIRE(r.N1 >= 0.0);
        REQUIRE(r.N2W <= r.N2);
        REQUIRE(r.N1W <= r.N1);
        REQUIRE(r.N2W >= 0.0);
    }
}

TEST_CASE("trajectory family: N1 = 2|rho23| >= N2 = 2|rho23|^2") {
    for (double n : {0.1, 1.0}) {
        for (double r : {0.2, 1.0}) {
            for (int k = 0; k <= 40; ++k) {
                const auto rho = analytic_state_at(ModelParams::make(1.0, n, r), 0.1 * k);
                REQUIRE(trace_min(rho) >= hs_min(rho));
            }
        }
    }
}
