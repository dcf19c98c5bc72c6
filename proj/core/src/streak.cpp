#include "couette3d/streak.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "couette3d/fft.hpp"
#include "couette3d/spectral_ops.hpp"

namespace couette {

namespace {

constexpr Complex iu{0.0, 1.0};

// Prognostic pair: scalar vorticity w = dy u3 - dz u2 and the streak u1.
// The means of u2, u3 are invariants of the 2D dynamics and ride along as
// parameters; the mean of u1 lives inside u1hat at (0,0).
struct Prog {
    Field2 what, u1hat;
    Complex m2{0.0, 0.0}, m3{0.0, 0.0};
};

Field2 vorticity_of(const StreakState& s) {
    Field2 w(s.grid);
    const Grid2& g = s.grid;
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz)
            w.at(iy, iz) =
                iu * (g.eta(iy) * s.u3.at(iy, iz) - double(g.lz(iz)) * s.u2.at(iy, iz));
    return w;
}

// u2 = dz phi, u3 = -dy phi with -Lap phi = w; means restored separately.
void velocity_of(const Grid2& g, const Field2& what, Complex m2, Complex m3, Field2& u2,
                 Field2& u3) {
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz) {
            const double eta = g.eta(iy);
            const double l = g.lz(iz);
            const double n2 = eta * eta + l * l;
            if (n2 == 0.0) {
                u2.at(iy, iz) = m2;
                u3.at(iy, iz) = m3;
                continue;
            }
            const Complex phi = what.at(iy, iz) / n2;
            u2.at(iy, iz) = iu * l * phi;
            u3.at(iy, iz) = -iu * eta * phi;
        }
}

// Divergence-form transport -div(u q) for a scalar q, pseudospectral.
Field2 transport(const Grid2& g, const std::vector<double>& u2p, const std::vector<double>& u3p,
                 const std::vector<double>& qp) {
    const std::size_t n = g.size();
    std::vector<double> fy(n), fz(n);
    for (std::size_t i = 0; i < n; ++i) {
        fy[i] = u2p[i] * qp[i];
        fz[i] = u3p[i] * qp[i];
    }
    Field2 fyh = forward_transform2(g, fy);
    Field2 fzh = forward_transform2(g, fz);
    Field2 out(g);
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz)
            out.at(iy, iz) = -iu * (g.eta(iy) * fyh.at(iy, iz) +
                                    double(g.lz(iz)) * fzh.at(iy, iz));
    dealias2(out);
    return out;
}

Prog rhs(const Grid2& g, const Prog& q) {
    Field2 u2(g), u3(g);
    velocity_of(g, q.what, q.m2, q.m3, u2, u3);
    const std::vector<double> u2p = inverse_transform2_real(u2);
    const std::vector<double> u3p = inverse_transform2_real(u3);
    const std::vector<double> wp = inverse_transform2_real(q.what);
    const std::vector<double> u1p = inverse_transform2_real(q.u1hat);

    Prog d;
    d.what = transport(g, u2p, u3p, wp);
    d.u1hat = transport(g, u2p, u3p, u1p);
    for (std::size_t i = 0; i < g.size(); ++i) d.u1hat.c[i] -= u2.c[i];
    d.m2 = d.m3 = Complex{0.0, 0.0};
    return d;
}

Prog axpy(const Prog& a, double h, const Prog& b) {
    Prog r = a;
    for (std::size_t i = 0; i < a.what.c.size(); ++i) {
        r.what.c[i] += h * b.what.c[i];
        r.u1hat.c[i] += h * b.u1hat.c[i];
    }
    r.m2 += h * b.m2;
    r.m3 += h * b.m3;
    return r;
}

void scale_heat(const Grid2& g, Prog& q, double nu_h) {
    if (nu_h == 0.0) return;
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz) {
            const double eta = g.eta(iy);
            const double l = g.lz(iz);
            const double f = std::exp(-nu_h * (eta * eta + l * l));
            q.what.at(iy, iz) *= f;
            q.u1hat.at(iy, iz) *= f;
        }
}

double max_speed(const Grid2& g, const Field2& u2, const Field2& u3) {
    const std::vector<double> a = inverse_transform2_real(u2);
    const std::vector<double> b = inverse_transform2_real(u3);
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::hypot(a[i], b[i]));
    return m;
}

}  // namespace

double StreakState::div_residual() const {
    double amp = 0.0, worst = 0.0;
    for (const Complex& c : u2.c) amp = std::max(amp, std::abs(c));
    for (const Complex& c : u3.c) amp = std::max(amp, std::abs(c));
    if (amp == 0.0) return 0.0;
    for (int iy = 0; iy < grid.Ny; ++iy)
        for (int iz = 0; iz < grid.Nz; ++iz) {
            const double eta = grid.eta(iy);
            const double l = grid.lz(iz);
            const Complex d = iu * (eta * u2.at(iy, iz) + l * u3.at(iy, iz));
            worst = std::max(worst, std::abs(d) / std::max(1.0, std::hypot(eta, l)));
        }
    return worst / amp;
}

StreakState step_streak(const StreakState& state, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_streak: dt must be positive");
    if (state.div_residual() > 1e-10)
        throw std::invalid_argument("step_streak: state is not divergence-free");
    const Grid2& g = state.grid;

    const double nn = std::max(g.Ny / g.Ly, g.Nz / (2.0 * pi));
    const double umax = max_speed(g, state.u2, state.u3);
    if (umax * dt * nn > 1.0) throw std::runtime_error("step_streak: CFL violation");

    Prog q;
    q.what = vorticity_of(state);
    q.u1hat = state.u1;
    q.m2 = state.u2.at(0, 0);
    q.m3 = state.u3.at(0, 0);

    const double h = dt;
    const Prog g1 = rhs(g, q);
    Prog s2 = axpy(q, 0.5 * h, g1);
    scale_heat(g, s2, state.nu * 0.5 * h);
    const Prog g2 = rhs(g, s2);
    Prog s3 = q;
    scale_heat(g, s3, state.nu * 0.5 * h);
    s3 = axpy(s3, 0.5 * h, g2);
    const Prog g3 = rhs(g, s3);
    Prog s4 = q;
    scale_heat(g, s4, state.nu * h);
    Prog g3e = g3;
    scale_heat(g, g3e, state.nu * 0.5 * h);
    s4 = axpy(s4, h, g3e);
    const Prog g4 = rhs(g, s4);

    Prog next = q;
    scale_heat(g, next, state.nu * h);
    Prog g1e = g1;
    scale_heat(g, g1e, state.nu * h);
    Prog g2e = g2;
    scale_heat(g, g2e, state.nu * 0.5 * h);
    Prog g3f = g3;
    scale_heat(g, g3f, state.nu * 0.5 * h);
    next = axpy(next, h / 6.0, g1e);
    next = axpy(next, h / 3.0, g2e);
    next = axpy(next, h / 3.0, g3f);
    next = axpy(next, h / 6.0, g4);

    StreakState out(g, state.nu);
    out.time = state.time + dt;
    out.u1 = next.u1hat;
    velocity_of(g, next.what, next.m2, next.m3, out.u2, out.u3);
    dealias2(out.u1);
    dealias2(out.u2);
    dealias2(out.u3);
    return out;
}

StreakState advance_streak(const StreakState& state, double t_end, double dt) {
    if (t_end < state.time) throw std::invalid_argument("advance_streak: t_end < time");
    if (!(dt > 0.0)) throw std::invalid_argument("advance_streak: dt must be positive");
    const long nsteps = std::max(1L, long(std::ceil((t_end - state.time) / dt - 1e-12)));
    const double h = (t_end - state.time) / double(nsteps);
    StreakState s = state;
    for (long i = 0; i < nsteps; ++i) s = step_streak(s, h);
    s.time = t_end;
    return s;
}

Field2 lift_up_reference(const StreakState& u_in, double t, double nu) {
    const Grid2& g = u_in.grid;
    Field2 out(g);
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz) {
            const double eta = g.eta(iy);
            const double l = g.lz(iz);
            out.at(iy, iz) = std::exp(-nu * t * (eta * eta + l * l)) *
                             (u_in.u1.at(iy, iz) - t * u_in.u2.at(iy, iz));
        }
    return out;
}

StreakState streak_from_3d(const SpectralVectorField& field, double nu) {
    const GridSpec& g3 = field.grid;
    Grid2 g(g3.Ny, g3.Nz, g3.Ly);
    StreakState s(g, nu);
    s.time = field.time;
    // 3D forward carries (2pi)^{-3/2} dV, the 2D one (2pi)^{-1} dy dz, so the
    // x-average sits at sqrt(2pi) times the 2D coefficient.
    const double scale = 1.0 / std::sqrt(2.0 * pi);
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz) {
            s.u1.at(iy, iz) = scale * field.u1.at(0, iy, iz);
            s.u2.at(iy, iz) = scale * field.u2.at(0, iy, iz);
            s.u3.at(iy, iz) = scale * field.u3.at(0, iy, iz);
        }
    return s;
}

SpectralVectorField embed_streak(const StreakState& s, int Nx) {
    GridSpec g3(Nx, s.grid.Ny, s.grid.Nz, s.grid.Ly);
    SpectralVectorField f(g3, Frame::Shear, s.time);
    const double scale = std::sqrt(2.0 * pi);
    for (int iy = 0; iy < g3.Ny; ++iy)
        for (int iz = 0; iz < g3.Nz; ++iz) {
            f.u1.at(0, iy, iz) = scale * s.u1.at(iy, iz);
            f.u2.at(0, iy, iz) = scale * s.u2.at(iy, iz);
            f.u3.at(0, iy, iz) = scale * s.u3.at(iy, iz);
        }
    return f;
}

}  // namespace couette
