#include <cmath>
#include <vector>

#include "couette3d/fft.hpp"
#include "couette3d/linear_theory.hpp"
#include "couette3d/nonlinear.hpp"
#include "couette3d/spectral_ops.hpp"
#include "couette3d/streak.hpp"
#include "doctest.h"

using namespace couette;

namespace {

SpectralField sample3(const GridSpec& g, double (*f)(double, double, double)) {
    std::vector<double> phys(g.size());
    for (int ix = 0; ix < g.Nx; ++ix)
        for (int iy = 0; iy < g.Ny; ++iy)
            for (int iz = 0; iz < g.Nz; ++iz)
                phys[g.index(ix, iy, iz)] = f(g.x(ix), g.y(iy), g.z(iz));
    return forward_transform(g, phys);
}

double knz_energy(const SpectralVectorField& u) {
    double acc = 0.0;
    const GridSpec& g = u.grid;
    for (int c = 0; c < 3; ++c)
        for (int ix = 1; ix < g.Nx; ++ix)
            if (g.kx(ix) != 0)
                for (int iy = 0; iy < g.Ny; ++iy)
                    for (int iz = 0; iz < g.Nz; ++iz)
                        acc += std::norm(u.comp(c).at(ix, iy, iz)) * g.deta();
    return acc;
}

double rhs_norm(const SpectralVectorField& f) {
    return std::sqrt(l2_norm_sq(f));
}

// divergence-free test field: x-z roll plus a streak component
SimState roll_state(const GridSpec& g, double nu, double a) {
    SimState s(g, nu);
    s.uhat.u1 = sample3(g, [](double x, double, double z) { return std::sin(x) * std::cos(z); });
    s.uhat.u3 = sample3(g, [](double x, double, double z) { return -std::cos(x) * std::sin(z); });
    s.uhat.u2 = sample3(g, [](double, double y, double z) { return std::cos(y) * std::cos(z); });
    // make u2's y-z part solenoidal by pairing with a u3 correction
    SpectralField fix = sample3(g, [](double, double y, double z) { return std::sin(y) * std::sin(z); });
    for (std::size_t i = 0; i < g.size(); ++i) {
        s.uhat.u2.c[i] *= a;
        s.uhat.u3.c[i] = a * (s.uhat.u3.c[i] + fix.c[i]);
        s.uhat.u1.c[i] *= a;
    }
    leray_project(s.uhat);
    return s;
}

}  // namespace

TEST_CASE("linear pressure closed form and zero cases") {
    const GridSpec g(8, 8, 8, 2.0 * pi);
    SimState s(g, 0.0);
    s.uhat.u1 = sample3(g, [](double x, double, double) { return std::cos(x); });
    PressureFields p = compute_pressure(s);
    for (const Complex& c : p.pL_hat.c) CHECK(std::abs(c) == 0.0);  // u2 = 0

    SimState m(g, 0.0);
    m.uhat.u2.at(1, 0, 0) = Complex{1.0, 0.0};
    p = compute_pressure(m);
    CHECK(std::abs(p.pL_hat.at(1, 0, 0) - Complex{0.0, 2.0}) < 1e-15);  // 2 i k u2 / |k|^2
}

TEST_CASE("nonlinear pressure matches a hand-built Poisson solution") {
    const GridSpec g(16, 16, 16, 2.0 * pi);
    SimState s(g, 0.0);
    // u = (dz phi, 0, -dx phi), phi = sin x sin z
    s.uhat.u1 = sample3(g, [](double x, double, double z) { return std::sin(x) * std::cos(z); });
    s.uhat.u3 = sample3(g, [](double x, double, double z) { return -std::cos(x) * std::sin(z); });
    REQUIRE(divergence_residual(s.uhat) < 1e-13);

    // di u^j dj u^i = 2 cos^2 x cos^2 z - 2 sin^2 x sin^2 z, so
    // Lap pNL = -(that); solve by hand in spectral space
    SpectralField rhs = sample3(g, [](double x, double, double z) {
        const double c = std::cos(x) * std::cos(z), v = std::sin(x) * std::sin(z);
        return -2.0 * c * c + 2.0 * v * v;
    });
    PressureFields p = compute_pressure(s);
    double worst = 0.0;
    for (int ix = 0; ix < g.Nx; ++ix)
        for (int iy = 0; iy < g.Ny; ++iy)
            for (int iz = 0; iz < g.Nz; ++iz) {
                const double n2 = double(g.kx(ix)) * g.kx(ix) + g.eta(iy) * g.eta(iy) +
                                  double(g.lz(iz)) * g.lz(iz);
                const Complex want =
                    n2 > 0.0 ? -rhs.at(ix, iy, iz) / n2 : Complex{0.0, 0.0};
                worst = std::max(worst, std::abs(p.pNL_hat.at(ix, iy, iz) - want));
            }
    CHECK(worst < 1e-13);
}

TEST_CASE("tendency basics: zero field, streak subspace, exact quadratic scaling") {
    const GridSpec g(8, 16, 16, 2.0 * pi);
    SimState z(g, 0.1);
    CHECK(rhs_norm(nonlinear_rhs(z)) == 0.0);

    // x-independent data: the k != 0 part of the tendency vanishes identically
    Grid2 g2(16, 16, 2.0 * pi);
    StreakState st(g2, 0.1);
    std::vector<double> phys(g2.size());
    for (int iy = 0; iy < g2.Ny; ++iy)
        for (int iz = 0; iz < g2.Nz; ++iz)
            phys[g2.index(iy, iz)] = std::sin(g2.y(iy)) * std::cos(g2.z(iz));
    st.u2 = forward_transform2(g2, phys);
    for (int iy = 0; iy < g2.Ny; ++iy)
        for (int iz = 0; iz < g2.Nz; ++iz)
            phys[g2.index(iy, iz)] = -std::cos(g2.y(iy)) * std::sin(g2.z(iz));
    st.u3 = forward_transform2(g2, phys);
    SimState emb(g, 0.1);
    emb.uhat = embed_streak(st, g.Nx);
    SpectralVectorField tend = nonlinear_rhs(emb);
    CHECK(knz_energy(tend) == 0.0);

    // the quadratic part of the tendency is exactly bilinear
    const GridSpec g3(16, 16, 16, 2.0 * pi);
    auto quad_norm = [&](double a) {
        SimState s = roll_state(g3, 0.0, a);
        SpectralVectorField full = nonlinear_rhs(s);
        s.linearized = true;
        SpectralVectorField lin = nonlinear_rhs(s);
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < g3.size(); ++i)
                full.comp(c).c[i] -= lin.comp(c).c[i];
        return rhs_norm(full);
    };
    CHECK(quad_norm(0.2) / quad_norm(0.1) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("streak data is an invariant subspace and matches step_streak") {
    const GridSpec g(8, 24, 24, 2.0 * pi);
    Grid2 g2(24, 24, 2.0 * pi);
    StreakState st(g2, 0.05);
    std::vector<double> phys(g2.size());
    auto fill = [&](double (*f)(double, double), Field2& out) {
        for (int iy = 0; iy < g2.Ny; ++iy)
            for (int iz = 0; iz < g2.Nz; ++iz)
                phys[g2.index(iy, iz)] = f(g2.y(iy), g2.z(iz));
        out = forward_transform2(g2, phys);
    };
    fill([](double y, double z) { return 0.3 * std::sin(y) * std::cos(z); }, st.u2);
    fill([](double y, double z) { return -0.3 * std::cos(y) * std::sin(z); }, st.u3);
    fill([](double y, double) { return 0.2 * std::cos(y); }, st.u1);
    REQUIRE(st.div_residual() < 1e-12);

    SimState s(g, st.nu);
    s.uhat = embed_streak(st, g.Nx);
    const double t_end = 2.0, dt = 0.02;
    SimState out3 = advance(s, t_end, dt);
    CHECK(knz_energy(out3.uhat) <= 1e-12 * l2_norm_sq(out3.uhat));
    CHECK(divergence_residual(out3.uhat) < 1e-9);

    StreakState out2 = advance_streak(st, t_end, dt);
    StreakState back = streak_from_3d(out3.uhat, st.nu);
    double worst = 0.0;
    for (int c = 0; c < 3; ++c) {
        const Field2& a = c == 0 ? back.u1 : (c == 1 ? back.u2 : back.u3);
        const Field2& b = c == 0 ? out2.u1 : (c == 1 ? out2.u2 : out2.u3);
        for (std::size_t i = 0; i < g2.size(); ++i)
            worst = std::max(worst, std::abs(a.c[i] - b.c[i]));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("exact streak oracle through the 3D solver") {
    const GridSpec g(8, 16, 16, 2.0 * pi);
    SimState s(g, 0.1);
    s.uhat.u2 = sample3(g, [](double, double, double z) { return std::cos(z); });
    const double t = 5.0;
    SimState out = advance(s, t, 0.02);
    SpectralField want = sample3(g, [](double, double, double z) { return std::cos(z); });
    const double amp = -t * std::exp(-s.nu * t);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        worst = std::max(worst, std::abs(out.uhat.u1.c[i] - amp * want.c[i]));
    CHECK(worst < 1e-6);
}

TEST_CASE("small-amplitude run tracks the single-mode linear theory") {
    const GridSpec g(16, 16, 16, 2.0 * pi);
    const double a = 1e-6;
    LinearMode lm;
    lm.k = 1;
    lm.eta = 1.0;
    lm.l = 1;
    lm.nu = 0.01;
    lm.uhat = {Complex{1.0, 0.5}, Complex{0.5, -0.5}, Complex{0.0, 0.2}};
    auto p = leray_project({lm.uhat[0], lm.uhat[1], lm.uhat[2]}, shear_wavevector(1, 1.0, 1, 0.0));
    lm.uhat = {p[0], p[1], p[2]};
    REQUIRE(lm.div_residual(0.0) < 1e-14);

    SimState s(g, lm.nu);
    for (int c = 0; c < 3; ++c) {
        s.uhat.comp(c).at(1, 1, 1) = a * lm.uhat[c];
        s.uhat.comp(c).at(g.Nx - 1, g.Ny - 1, g.Nz - 1) = a * std::conj(lm.uhat[c]);
    }
    const double t = 20.0;
    SimState out = advance(s, t, 0.01);
    LinearMode ref = evolve_linear_mode(lm, 0.0, t, 0.01);
    double scale = 0.0;
    for (int c = 0; c < 3; ++c) scale = std::max(scale, std::abs(ref.uhat[c]));
    for (int c = 0; c < 3; ++c)
        CHECK(std::abs(out.uhat.comp(c).at(1, 1, 1) / a - ref.uhat[c]) < 1e-4 * scale);
}

TEST_CASE("energy budget closes to high relative accuracy") {
    const GridSpec g(16, 16, 16, 2.0 * pi);
    SimState s0 = roll_state(g, 0.01, 0.3);
    SimState s = advance(s0, 0.5, 0.005);

    // one-sided fourth-order stencil for dE/dt at t = 0.5
    const double h = 0.0025;
    double e[5];
    SimState cur = s;
    e[0] = 0.5 * l2_norm_sq(cur.uhat);
    for (int i = 1; i < 5; ++i) {
        cur = step(cur, h);
        e[i] = 0.5 * l2_norm_sq(cur.uhat);
    }
    const double dEdt = (-25.0 * e[0] + 48.0 * e[1] - 36.0 * e[2] + 16.0 * e[3] - 3.0 * e[4]) /
                        (12.0 * h);

    // -int u1 u2 dV - nu ||grad_L u||^2 at t = 0.5
    double flux = 0.0, diss = 0.0;
    const double tf = s.uhat.time;
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double et = g.eta(iy) - k * tf;
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const auto n = g.index(ix, iy, iz);
                flux += std::real(s.uhat.u1.c[n] * std::conj(s.uhat.u2.c[n])) * g.deta();
                const double n2 = double(k) * k + et * et + double(l) * l;
                for (int c = 0; c < 3; ++c) diss += n2 * std::norm(s.uhat.comp(c).c[n]) * g.deta();
            }
        }
    }
    const double budget = -flux - s.nu * diss;
    CHECK(std::abs(dEdt - budget) < 1e-6 * std::max(std::abs(budget), e[0]));
}

TEST_CASE("shear remap relabels without changing the field") {
    const GridSpec g(8, 16, 16, 2.0 * pi);
    SimState s(g, 0.0);
    s.uhat.u1.at(1, 3, 2) = Complex{0.5, 0.25};
    s.uhat.u1.at(g.Nx - 1, g.Ny - 3, g.Nz - 2) = Complex{0.5, -0.25};

    SimState id = remap_shear(s);  // frame time 0: identity
    CHECK(std::abs(id.uhat.u1.at(1, 3, 2) - Complex{0.5, 0.25}) == 0.0);

    s.uhat.time = 1.0;  // Ly = 2 pi: shift of one lattice unit per k
    s.t = 1.0;
    SimState r = remap_shear(s);
    CHECK(r.uhat.time == 0.0);
    CHECK(std::abs(r.uhat.u1.at(1, 2, 2) - Complex{0.5, 0.25}) == 0.0);
    CHECK(std::abs(r.uhat.u1.at(1, 3, 2)) == 0.0);
    CHECK(l2_norm_sq(r.uhat) == doctest::Approx(l2_norm_sq(s.uhat)).epsilon(1e-14));

    s.uhat.time = 0.5;  // not commensurate with the eta lattice
    CHECK_THROWS(remap_shear(s));
}

TEST_CASE("q fields: hand values and exact inversion") {
    const GridSpec g(8, 8, 8, 2.0 * pi);
    SimState s(g, 0.0);
    s.uhat.u1.at(1, 0, 0) = Complex{1.0, 0.0};
    s.uhat.u2.at(1, 0, 0) = Complex{1.0, 0.0};
    QFields q = q_fields(s);
    CHECK(q.q1.at(1, 0, 0) == Complex{-1.0, 0.0});

    s.uhat.time = 3.0;
    q = q_fields(s);
    CHECK(q.q2.at(1, 0, 0) == Complex{-10.0, 0.0});
    CHECK(u2_from_q2(1, 0.0, 0, 3.0, q.q2.at(1, 0, 0)) == s.uhat.u2.at(1, 0, 0));
}

TEST_CASE("CFL and NaN guards") {
    const GridSpec g(16, 16, 16, 2.0 * pi);
    SimState s = roll_state(g, 0.0, 30.0);
    CHECK_THROWS(step(s, 0.5));  // |u| ~ 30: far past the CFL line

    SimState bad(g, 0.0);
    bad.uhat.u1.at(1, 0, 0) = Complex{std::nan(""), 0.0};
    CHECK_THROWS(step(bad, 1e-3));
}
