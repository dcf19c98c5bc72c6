#include <cmath>

#include "couette3d/linear_theory.hpp"
#include "doctest.h"

using namespace couette;

TEST_CASE("q2 closed form matches the analytic quadrature") {
    const Complex one{1.0, 0.0};
    CHECK(std::abs(q2_closed_form(1, 0.0, 0, one, 10.0, 0.01) -
                   std::exp(-0.01 * (10.0 + 1000.0 / 3.0))) < 1e-15);
    CHECK(q2_closed_form(3, -7.0, 2, Complex{0.4, 0.6}, 25.0, 0.0) == Complex{0.4, 0.6});
    CHECK(std::abs(q2_closed_form(0, 2.0, 0, one, 1.0, 0.1) - std::exp(-0.4)) < 1e-15);
}

TEST_CASE("u2 recovery from q2 shows the Orr envelope") {
    const Complex q{1.0, 0.0};
    for (double t : {0.0, 2.0, 9.0})
        CHECK(std::abs(u2_from_q2(1, 0.0, 0, t, q) + q / (1.0 + t * t)) < 1e-15);
    CHECK(std::abs(u2_from_q2(1, 10.0, 0, 10.0, q) + q) < 1e-15);  // critical time peak
    double prev = 1e300;
    for (int l = 1; l < 40; l *= 2) {
        const double v = std::abs(u2_from_q2(1, 3.0, l, 0.0, q));
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS(u2_from_q2(0, 0.0, 0, 5.0, q));
}

TEST_CASE("lift-up: zero-mode evolution matches the closed form") {
    LinearMode m;
    m.k = 0;
    m.eta = 1.0;
    m.l = -1;
    m.uhat = {1.0, 1.0, 1.0};
    m.nu = 0.0;
    auto out = evolve_linear_mode(m, 0.0, 3.0);
    CHECK(std::abs(out.uhat[0] - Complex{-2.0, 0.0}) < 1e-12);
    CHECK(std::abs(out.uhat[1] - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(out.uhat[2] - Complex{1.0, 0.0}) < 1e-12);

    m.nu = 0.05;
    const double t = 4.0;
    out = evolve_linear_mode(m, 0.0, t);
    const double heat = std::exp(-m.nu * (m.eta * m.eta + m.l * m.l) * t);
    CHECK(std::abs(out.uhat[1] - heat * m.uhat[1]) < 1e-12);
    CHECK(std::abs(out.uhat[0] - heat * (m.uhat[0] - t * m.uhat[1])) < 1e-12);
}

TEST_CASE("inviscid evolution conserves q2 for k != 0") {
    LinearMode m;
    m.k = 1;
    m.eta = 3.0;
    m.l = 2;
    m.nu = 0.0;
    // divergence-free at t=0: k u1 + eta u2 + l u3 = 0
    m.uhat = {Complex{1.0, 0.5}, Complex{0.2, -0.1}, Complex{-0.8, -0.1}};
    const Complex div = 1.0 * m.uhat[0] + 3.0 * m.uhat[1] + 2.0 * m.uhat[2];
    m.uhat[0] -= div;  // absorb into u1 (coefficient k=1)
    REQUIRE(m.div_residual(0.0) < 1e-14);

    const Complex q0 = q2_of(m, 0.0);
    auto out = evolve_linear_mode(m, 0.0, 50.0);
    CHECK(out.div_residual(50.0) < 1e-9);
    CHECK(std::abs(q2_of(out, 50.0) - q0) < 1e-8 * std::abs(q0));
}

TEST_CASE("viscous single mode matches the closed-form q2 decay") {
    LinearMode m;
    m.k = 1;
    m.eta = 0.0;
    m.l = 0;
    m.nu = 0.01;
    m.uhat = {0.0, 1.0, 0.0};  // div = (eta - k t) u2 = 0 at t = 0
    const Complex q0 = q2_of(m, 0.0);
    const double t = 10.0;
    auto out = evolve_linear_mode(m, 0.0, t);
    const Complex qt = q2_of(out, t);
    CHECK(std::abs(qt - q2_closed_form(1, 0.0, 0, q0, t, m.nu)) < 1e-8 * std::abs(q0));
}

TEST_CASE("mode evolution refines at fourth order") {
    LinearMode m;
    m.k = 2;
    m.eta = -5.0;
    m.l = 1;
    m.nu = 1e-3;
    m.uhat = {Complex{0.3, 0.1}, Complex{0.4, -0.2}, Complex{0.0, 0.0}};
    const Complex div = 2.0 * m.uhat[0] - 5.0 * m.uhat[1] + 1.0 * m.uhat[2];
    m.uhat[2] -= div;
    REQUIRE(m.div_residual(0.0) < 1e-13);

    auto ref = evolve_linear_mode(m, 0.0, 8.0, 8.0 / 4096.0);
    auto coarse = evolve_linear_mode(m, 0.0, 8.0, 8.0 / 32.0);
    auto fine = evolve_linear_mode(m, 0.0, 8.0, 8.0 / 64.0);
    const double ec = std::abs(coarse.uhat[0] - ref.uhat[0]);
    const double ef = std::abs(fine.uhat[0] - ref.uhat[0]);
    CHECK(ec / ef > 10.0);
}

TEST_CASE("inviscid damping of u2 and convergence of u1, u3 at mode level") {
    LinearMode m;
    m.k = 1;
    m.eta = 2.0;
    m.l = 1;
    m.nu = 0.0;
    m.uhat = {Complex{0.5, 0.0}, Complex{0.5, 0.0}, Complex{0.0, 0.0}};
    const Complex div = 1.0 * m.uhat[0] + 2.0 * m.uhat[1] + 1.0 * m.uhat[2];
    m.uhat[2] -= div;
    REQUIRE(m.div_residual(0.0) < 1e-13);

    auto a = evolve_linear_mode(m, 0.0, 20.0);
    auto b = evolve_linear_mode(a, 20.0, 40.0);
    auto c = evolve_linear_mode(b, 40.0, 80.0);
    // |u2| ~ t^-2 decay
    CHECK(std::abs(c.uhat[1]) < 0.05 * std::abs(m.uhat[1]));
    // Cauchy shrinkage of u1, u3 over doubling times
    const double d1 = std::abs(b.uhat[0] - a.uhat[0]);
    const double d2 = std::abs(c.uhat[0] - b.uhat[0]);
    CHECK(d2 < d1);
    const double e1 = std::abs(b.uhat[2] - a.uhat[2]);
    const double e2 = std::abs(c.uhat[2] - b.uhat[2]);
    CHECK(e2 < e1);
}

TEST_CASE("damping envelopes and their parameter guard") {
    CHECK(damping_envelope(2, 1.0, 0.0, 0.1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(damping_envelope(3, 10.0, 1e-3, 1.0 / 3.0) ==
          doctest::Approx(std::exp(-1.0 / 3.0)).epsilon(1e-12));
    CHECK_THROWS(damping_envelope(2, 5.0, 0.1, 0.5));
    CHECK_THROWS(damping_envelope(2, 5.0, 0.1, 0.0));
    CHECK_THROWS(damping_envelope(4, 5.0, 0.1, 0.1));
    CHECK_THROWS(damping_envelope(2, 0.5, 0.1, 0.1));
}

TEST_CASE("non divergence-free input is rejected") {
    LinearMode m;
    m.k = 1;
    m.eta = 0.0;
    m.l = 0;
    m.uhat = {1.0, 1.0, 0.0};  // div = 1 at t = 0
    CHECK_THROWS(evolve_linear_mode(m, 0.0, 1.0));
}
