#include "couette3d/coord.hpp"

#include <cmath>
#include <stdexcept>

#include "couette3d/fft.hpp"
#include "couette3d/spectral_ops.hpp"

namespace couette {

namespace {

constexpr Complex iu{0.0, 1.0};

std::vector<double> deriv_phys(const Field2& f, bool along_y) {
    const Grid2& g = f.grid;
    Field2 d(g);
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz)
            d.at(iy, iz) = iu * (along_y ? g.eta(iy) : double(g.lz(iz))) * f.at(iy, iz);
    return inverse_transform2_real(d);
}

// advection (a dY + b dZ) f, pseudospectral, returned in spectral space
Field2 advect(const std::vector<double>& a, const std::vector<double>& b, const Field2& f) {
    const Grid2& g = f.grid;
    const std::vector<double> fy = deriv_phys(f, true);
    const std::vector<double> fz = deriv_phys(f, false);
    std::vector<double> prod(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) prod[i] = a[i] * fy[i] + b[i] * fz[i];
    Field2 out = forward_transform2(g, prod);
    dealias2(out);
    return out;
}

// variable-coefficient Laplacian (1+G) dYY + dZZ + 2 psi_z dZY
Field2 lap_t(const JacobianFactors& jac, const Field2& f) {
    const Grid2& g = f.grid;
    Field2 dyy(g), dzz(g), dzy(g);
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz) {
            const double eta = g.eta(iy);
            const double l = g.lz(iz);
            const Complex c = f.at(iy, iz);
            dyy.at(iy, iz) = -eta * eta * c;
            dzz.at(iy, iz) = -l * l * c;
            dzy.at(iy, iz) = -l * eta * c;
        }
    const std::vector<double> pyy = inverse_transform2_real(dyy);
    const std::vector<double> pzz = inverse_transform2_real(dzz);
    const std::vector<double> pzy = inverse_transform2_real(dzy);
    std::vector<double> acc(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        acc[i] = (1.0 + jac.G[i]) * pyy[i] + pzz[i] + 2.0 * jac.psi_z[i] * pzy[i];
    Field2 out = forward_transform2(g, acc);
    dealias2(out);
    return out;
}

struct CG {
    Field2 C, g, u01;
};

CG axpy(const CG& a, double h, const CG& b) {
    CG r = a;
    for (std::size_t i = 0; i < a.C.c.size(); ++i) {
        r.C.c[i] += h * b.C.c[i];
        r.g.c[i] += h * b.g.c[i];
        r.u01.c[i] += h * b.u01.c[i];
    }
    return r;
}

CG rhs(const CG& q, double t, double nu, const Field2& U02, const Field2& U03,
       const Field2& force_g) {
    const Grid2& gr = q.C.grid;
    const JacobianFactors jac = jacobians_from_C(q.C);
    const std::vector<double> adv_y = inverse_transform2_real(q.g);
    const std::vector<double> adv_z = inverse_transform2_real(U03);

    CG d{Field2(gr), Field2(gr), Field2(gr)};
    const Field2 aC = advect(adv_y, adv_z, q.C);
    const Field2 ag = advect(adv_y, adv_z, q.g);
    const Field2 au = advect(adv_y, adv_z, q.u01);
    Field2 lC(gr), lg(gr), lu(gr);
    if (nu != 0.0) {
        lC = lap_t(jac, q.C);
        lg = lap_t(jac, q.g);
        lu = lap_t(jac, q.u01);
    }
    for (std::size_t i = 0; i < gr.size(); ++i) {
        d.C.c[i] = -aC.c[i] + q.g.c[i] - U02.c[i] + nu * lC.c[i];
        d.g.c[i] = -ag.c[i] - 2.0 * q.g.c[i] / t - force_g.c[i] / t + nu * lg.c[i];
        d.u01.c[i] = -au.c[i] - U02.c[i] - force_g.c[i] + nu * lu.c[i];
    }
    return d;
}

}  // namespace

JacobianFactors jacobians_from_C(const Field2& C) {
    const Grid2& g = C.grid;
    JacobianFactors jac;
    jac.grid = g;
    const std::vector<double> cy = deriv_phys(C, true);
    const std::vector<double> cz = deriv_phys(C, false);
    for (double v : cy)
        if (!(std::abs(v) < 0.5))
            throw std::runtime_error("jacobians_from_C: ||dY C||_inf >= 1/2");
    jac.psi_y.resize(g.size());
    jac.psi_z.resize(g.size());
    jac.G.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double den = 1.0 - cy[i];
        jac.psi_y[i] = cy[i] / den;
        jac.psi_z[i] = cz[i] / den;
        const double py1 = 1.0 + jac.psi_y[i];
        jac.G[i] = py1 * py1 + jac.psi_z[i] * jac.psi_z[i] - 1.0;
    }
    return jac;
}

CoordState step_cg(const CoordState& state, const Field2& U02, const Field2& U03,
                   const Field2& force_g, double dt) {
    if (!(state.time >= 1.0)) throw std::invalid_argument("step_cg: time must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("step_cg: dt must be positive");
    const double t = state.time, h = dt;

    CG q{state.C, state.g, state.u01};
    const CG k1 = rhs(q, t, state.nu, U02, U03, force_g);
    const CG k2 = rhs(axpy(q, 0.5 * h, k1), t + 0.5 * h, state.nu, U02, U03, force_g);
    const CG k3 = rhs(axpy(q, 0.5 * h, k2), t + 0.5 * h, state.nu, U02, U03, force_g);
    const CG k4 = rhs(axpy(q, h, k3), t + h, state.nu, U02, U03, force_g);

    CG next = axpy(q, h / 6.0, k1);
    next = axpy(next, h / 3.0, k2);
    next = axpy(next, h / 3.0, k3);
    next = axpy(next, h / 6.0, k4);

    CoordState out = state;
    out.C = next.C;
    out.g = next.g;
    out.u01 = next.u01;
    out.time = t + h;
    return out;
}

std::vector<Field2> psi_from_history(const std::vector<std::array<Field2, 3>>& u0_series,
                                     double dt, double nu) {
    if (u0_series.empty()) throw std::invalid_argument("psi_from_history: empty history");
    if (!(dt > 0.0)) throw std::invalid_argument("psi_from_history: dt must be positive");
    const Grid2& g = u0_series.front()[0].grid;
    for (const auto& s : u0_series)
        for (const auto& f : s)
            if (!(f.grid == g))
                throw std::invalid_argument("psi_from_history: mismatched sampling grids");

    // P = t psi obeys dP/dt = u0^1 - t u0^2 - (u0^2 dY + u0^3 dZ) P + nu Lap P
    auto prhs = [&](const Field2& P, double t, const std::array<Field2, 3>& u0) {
        const std::vector<double> ay = inverse_transform2_real(u0[1]);
        const std::vector<double> az = inverse_transform2_real(u0[2]);
        Field2 d = advect(ay, az, P);
        for (int iy = 0; iy < g.Ny; ++iy)
            for (int iz = 0; iz < g.Nz; ++iz) {
                const double n2 = g.eta(iy) * g.eta(iy) + double(g.lz(iz)) * g.lz(iz);
                d.at(iy, iz) = -d.at(iy, iz) + u0[0].at(iy, iz) - t * u0[1].at(iy, iz) -
                               nu * n2 * P.at(iy, iz);
            }
        return d;
    };
    auto lerp = [](const std::array<Field2, 3>& a, const std::array<Field2, 3>& b, double w) {
        std::array<Field2, 3> r = a;
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < r[c].c.size(); ++i)
                r[c].c[i] = (1.0 - w) * a[c].c[i] + w * b[c].c[i];
        return r;
    };

    std::vector<Field2> psi;
    psi.reserve(u0_series.size());
    // t psi(1) := int_0^1 u0^1 ds, approximated via the lift-up backtrack
    // u0^1(s) ~ u0^1(1) + (1 - s) u0^2(1)
    Field2 P = u0_series.front()[0];
    for (std::size_t i = 0; i < P.c.size(); ++i)
        P.c[i] += 0.5 * u0_series.front()[1].c[i];
    psi.push_back(P);
    for (std::size_t i = 0; i + 1 < u0_series.size(); ++i) {
        const double t = 1.0 + double(i) * dt;
        const auto mid = lerp(u0_series[i], u0_series[i + 1], 0.5);
        const Field2 k1 = prhs(P, t, u0_series[i]);
        Field2 s = P;
        for (std::size_t n = 0; n < s.c.size(); ++n) s.c[n] += 0.5 * dt * k1.c[n];
        const Field2 k2 = prhs(s, t + 0.5 * dt, mid);
        s = P;
        for (std::size_t n = 0; n < s.c.size(); ++n) s.c[n] += 0.5 * dt * k2.c[n];
        const Field2 k3 = prhs(s, t + 0.5 * dt, mid);
        s = P;
        for (std::size_t n = 0; n < s.c.size(); ++n) s.c[n] += dt * k3.c[n];
        const Field2 k4 = prhs(s, t + dt, u0_series[i + 1]);
        for (std::size_t n = 0; n < P.c.size(); ++n)
            P.c[n] += dt / 6.0 * (k1.c[n] + 2.0 * k2.c[n] + 2.0 * k3.c[n] + k4.c[n]);
        Field2 cur = P;
        for (auto& c : cur.c) c /= (t + dt);
        psi.push_back(cur);
    }
    return psi;
}

}  // namespace couette
