#include <cmath>
#include <vector>

#include "couette3d/diagnostics.hpp"
#include "couette3d/fft.hpp"
#include "couette3d/spectral_ops.hpp"
#include "doctest.h"

using namespace couette;

TEST_CASE("component energy split") {
    const GridSpec g(8, 16, 16, 2.0 * pi);
    SpectralVectorField u(g);

    // x-independent field: no E_neq
    u.u2.at(0, 1, 2) = Complex{1.0, 0.0};
    u.u2.at(0, g.Ny - 1, g.Nz - 2) = Complex{1.0, 0.0};
    ComponentEnergies e = component_energies(u);
    CHECK(e.E_neq == 0.0);
    CHECK(e.E0_2 == doctest::Approx(2.0 * g.deta()).epsilon(1e-15));

    // single conjugate pair at k = 1 in u3: E_neq = 2 a^2 deta
    const double a = 0.5;
    u.u3.at(1, 0, 0) = Complex{a, 0.0};
    u.u3.at(g.Nx - 1, 0, 0) = Complex{a, 0.0};
    e = component_energies(u);
    CHECK(e.E_neq == doctest::Approx(2.0 * a * a * g.deta()).epsilon(1e-15));
    CHECK(e.E_total == doctest::Approx(e.E_neq + e.E0_1 + e.E0_2 + e.E0_3).epsilon(1e-12));
    CHECK(e.E_total == doctest::Approx(l2_norm_sq(u)).epsilon(1e-12));
}

TEST_CASE("sobolev norm weights") {
    const GridSpec g(8, 8, 8, 2.0 * pi);
    SpectralField f(g);
    f.at(1, 0, 0) = Complex{1.0, 0.0};

    CHECK(sobolev_norm(f, 0.0) == doctest::Approx(std::sqrt(l2_norm_sq(f))).epsilon(1e-15));
    // weight <1>^2 = 2 relative to L2
    CHECK(sobolev_norm(f, 2.0) / sobolev_norm(f, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    // monotone in sigma
    double prev = sobolev_norm(f, 0.0);
    for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        const double v = sobolev_norm(f, s);
        CHECK(v >= prev);
        prev = v;
    }
    // lab-frame weight grows with the frame time for k != 0
    CHECK(sobolev_norm(f, 1.0, 10.0) > sobolev_norm(f, 1.0, 0.0));
}

TEST_CASE("power-law fitting") {
    TimeSeries s;
    for (int i = 1; i <= 40; ++i) {
        const double t = 0.5 * i;
        s.push(t, t * t);
    }
    PowerLawFit fit = fit_power_law(s, 1.0, 20.0);
    CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));

    TimeSeries c;
    for (int i = 1; i <= 20; ++i) c.push(double(i), 3.0);
    CHECK(fit_power_law(c, 1.0, 20.0).exponent == doctest::Approx(0.0).epsilon(1e-12));

    TimeSeries p;
    for (int i = 1; i <= 60; ++i) {
        const double t = 0.5 * i;
        p.push(t, t * t * (1.0 + 0.01 * std::sin(std::log(t))));
    }
    CHECK(fit_power_law(p, 1.0, 30.0).exponent == doctest::Approx(2.0).epsilon(0.01));

    TimeSeries tiny;
    for (int i = 1; i <= 5; ++i) tiny.push(double(i), double(i));
    CHECK_THROWS(fit_power_law(tiny, 0.5, 10.0));
    CHECK_THROWS(s.push(1.0, 1.0));  // non-monotone t
}

TEST_CASE("forcing series: x-independent data, brute-force oracle, scaling") {
    const GridSpec g(16, 16, 16, 2.0 * pi);

    SimState s0(g, 0.0);
    std::vector<double> phys(g.size());
    for (int ix = 0; ix < g.Nx; ++ix)
        for (int iy = 0; iy < g.Ny; ++iy)
            for (int iz = 0; iz < g.Nz; ++iz)
                phys[g.index(ix, iy, iz)] = std::cos(g.y(iy)) * std::sin(g.z(iz));
    s0.uhat.u1 = forward_transform(g, phys);
    CHECK(l2_norm_sq(forcing_field(s0)) == 0.0);

    // two modes at k = 1: compare against analytically differentiated fields
    const Complex a1{1.0, 0.0}, a2{-1.0, 0.0}, a3{0.0, 0.7};   // mode (1,1,0)
    const Complex b1{0.6, 0.0}, b2{0.0, 0.3}, b3{-0.6, 0.0};  // mode (1,0,1)
    auto field_val = [&](Complex ca, Complex cb, double x, double y, double z) {
        return 2.0 * std::real(ca * std::exp(Complex{0.0, x + y})) +
               2.0 * std::real(cb * std::exp(Complex{0.0, x + z}));
    };
    auto build = [&](Complex ca, Complex cb) {
        std::vector<double> p(g.size());
        for (int ix = 0; ix < g.Nx; ++ix)
            for (int iy = 0; iy < g.Ny; ++iy)
                for (int iz = 0; iz < g.Nz; ++iz)
                    p[g.index(ix, iy, iz)] = field_val(ca, cb, g.x(ix), g.y(iy), g.z(iz));
        return forward_transform(g, p);
    };
    SimState s(g, 0.0);
    s.uhat.u1 = build(a1, b1);
    s.uhat.u2 = build(a2, b2);
    s.uhat.u3 = build(a3, b3);
    REQUIRE(divergence_residual(s.uhat) < 1e-12);

    Field2 got = forcing_field(s);

    // independent path: analytic derivatives, physical product, explicit x-average
    Grid2 g2(g.Ny, g.Nz, g.Ly);
    std::vector<double> avg(g2.size(), 0.0);
    const Complex iux{0.0, 1.0};
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz) {
            double acc = 0.0;
            for (int ix = 0; ix < g.Nx; ++ix) {
                const double x = g.x(ix), y = g.y(iy), z = g.z(iz);
                const double u1 = field_val(a1, b1, x, y, z);
                const double u2 = field_val(a2, b2, x, y, z);
                const double u3 = field_val(a3, b3, x, y, z);
                const double d1 = field_val(iux * a1, iux * b1, x, y, z);  // d/dx
                const double d2 = field_val(iux * a1, 0.0, x, y, z);       // d/dy
                const double d3 = field_val(0.0, iux * b1, x, y, z);       // d/dz
                acc += u1 * d1 + u2 * d2 + u3 * d3;
            }
            avg[g2.index(iy, iz)] = acc / g.Nx;
        }
    Field2 want = forward_transform2(g2, avg);
    double worst = 0.0;
    for (std::size_t i = 0; i < g2.size(); ++i)
        worst = std::max(worst, std::abs(got.c[i] - want.c[i]));
    CHECK(worst < 1e-12);

    // exact quadratic scaling
    SimState half = s;
    for (int c = 0; c < 3; ++c)
        for (auto& v : half.uhat.comp(c).c) v *= 0.5;
    Field2 fh = forcing_field(half);
    CHECK(std::sqrt(l2_norm_sq(got)) / std::sqrt(l2_norm_sq(fh)) ==
          doctest::Approx(4.0).epsilon(1e-12));
}
