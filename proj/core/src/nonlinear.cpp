#include "couette3d/nonlinear.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "couette3d/fft.hpp"
#include "couette3d/spectral_ops.hpp"
#include "couette3d/threads.hpp"

namespace couette {

namespace {

constexpr Complex iu{0.0, 1.0};

// exact integral of |k, eta - k tau, l|^2 over [a, b] in frame time
double visc_phase(int k, double eta, int l, double a, double b) {
    if (k == 0) return (eta * eta + double(l) * l) * (b - a);
    const double ra = eta - k * a, rb = eta - k * b;
    return (double(k) * k + double(l) * l) * (b - a) + (ra * ra * ra - rb * rb * rb) / (3.0 * k);
}

// symmetric index into the 6 stored products u_i u_j
constexpr int widx(int i, int j) {
    // (0,0)=0 (0,1)=1 (0,2)=2 (1,1)=3 (1,2)=4 (2,2)=5
    return i <= j ? i * (5 - i) / 2 + j : j * (5 - j) / 2 + i;
}

// spectra of u_i u_j from dealiased physical velocities
std::array<SpectralField, 6> uu_spectra(const SimState& s) {
    const GridSpec& g = s.uhat.grid;
    std::array<std::vector<double>, 3> up;
    for (int i = 0; i < 3; ++i) {
        SpectralField c = s.uhat.comp(i);
        dealias(c);
        up[i] = inverse_transform_real(c);
    }
    std::array<SpectralField, 6> w;
    std::vector<double> prod(g.size());
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            for (std::size_t n = 0; n < g.size(); ++n) prod[n] = up[i][n] * up[j][n];
            w[widx(i, j)] = forward_transform(g, prod);
        }
    return w;
}

void check_finite(const SpectralVectorField& u) {
    for (int i = 0; i < 3; ++i)
        for (const Complex& c : u.comp(i).c)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::runtime_error("step: non-finite value (numerical failure)");
}

double max_speed(const SpectralVectorField& u) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) {
        const std::vector<double> p = inverse_transform_real(u.comp(i));
        for (double v : p) m = std::max(m, std::abs(v));
    }
    return m;
}

void scale_phase(SpectralVectorField& u, double nu, double a, double b) {
    if (nu == 0.0) return;
    const GridSpec& g = u.grid;
    parallel_for(g.Nx, [&](int lo, int hi) {
        for (int ix = lo; ix < hi; ++ix) {
            const int k = g.kx(ix);
            for (int iy = 0; iy < g.Ny; ++iy) {
                const double eta = g.eta(iy);
                for (int iz = 0; iz < g.Nz; ++iz) {
                    const double f = std::exp(-nu * visc_phase(k, eta, g.lz(iz), a, b));
                    const auto n = g.index(ix, iy, iz);
                    u.u1.c[n] *= f;
                    u.u2.c[n] *= f;
                    u.u3.c[n] *= f;
                }
            }
        }
    });
}

void axpy(SpectralVectorField& y, double h, const SpectralVectorField& x) {
    for (int i = 0; i < 3; ++i) {
        auto& a = y.comp(i).c;
        const auto& b = x.comp(i).c;
        for (std::size_t n = 0; n < a.size(); ++n) a[n] += h * b[n];
    }
}

}  // namespace

PressureFields compute_pressure(const SimState& state) {
    const GridSpec& g = state.uhat.grid;
    const double tf = state.uhat.time;
    PressureFields p{SpectralField(g), SpectralField(g)};
    const bool quad = !state.linearized;
    std::array<SpectralField, 6> w;
    if (quad) w = uu_spectra(state);

    parallel_for(g.Nx, [&](int lo, int hi) {
        for (int ix = lo; ix < hi; ++ix) {
            const int k = g.kx(ix);
            for (int iy = 0; iy < g.Ny; ++iy) {
                const double et = g.eta(iy) - k * tf;
                for (int iz = 0; iz < g.Nz; ++iz) {
                    const int l = g.lz(iz);
                    const double n2 = double(k) * k + et * et + double(l) * l;
                    if (n2 == 0.0) continue;
                    const auto n = g.index(ix, iy, iz);
                    p.pL_hat.c[n] = 2.0 * iu * double(k) * state.uhat.u2.c[n] / n2;
                    if (quad) {
                        const double kl[3] = {double(k), et, double(l)};
                        Complex acc{0.0, 0.0};
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                                acc += kl[i] * kl[j] * w[widx(i, j)].c[n];
                        p.pNL_hat.c[n] = -acc / n2;
                    }
                }
            }
        }
    });
    return p;
}

SpectralVectorField nonlinear_rhs(const SimState& state) {
    const GridSpec& g = state.uhat.grid;
    const double tf = state.uhat.time;
    SpectralVectorField out(g, Frame::Shear, tf);
    const bool quad = !state.linearized;
    std::array<SpectralField, 6> w;
    if (quad) w = uu_spectra(state);

    parallel_for(g.Nx, [&](int lo, int hi) {
        for (int ix = lo; ix < hi; ++ix) {
            const int k = g.kx(ix);
            for (int iy = 0; iy < g.Ny; ++iy) {
                const double et = g.eta(iy) - k * tf;
                for (int iz = 0; iz < g.Nz; ++iz) {
                    const int l = g.lz(iz);
                    const auto n = g.index(ix, iy, iz);
                    const double kl[3] = {double(k), et, double(l)};
                    const double n2 = kl[0] * kl[0] + kl[1] * kl[1] + kl[2] * kl[2];

                    Complex tend[3] = {-state.uhat.u2.c[n], {0.0, 0.0}, {0.0, 0.0}};
                    Complex ptot{0.0, 0.0};
                    if (n2 > 0.0 && k != 0)
                        ptot = 2.0 * iu * double(k) * state.uhat.u2.c[n] / n2;
                    if (quad) {
                        Complex acc{0.0, 0.0};
                        for (int j = 0; j < 3; ++j) {
                            Complex div{0.0, 0.0};
                            for (int i = 0; i < 3; ++i) div += kl[i] * w[widx(i, j)].c[n];
                            tend[j] -= iu * div;
                            for (int i = 0; i < 3; ++i)
                                acc += kl[j] * kl[i] * w[widx(i, j)].c[n];
                        }
                        if (n2 > 0.0) ptot -= acc / n2;
                    }
                    for (int j = 0; j < 3; ++j) out.comp(j).c[n] = tend[j] - iu * kl[j] * ptot;
                }
            }
        }
    });
    dealias(out);
    // Not Leray-projected: the constraint kL(t).u = 0 is time-dependent, so
    // the tendency must carry k u2 along kL (supplied by the linear pressure);
    // the state is projected after each step instead.
    return out;
}

SimState step(const SimState& state, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    const GridSpec& g = state.uhat.grid;
    const double nn = std::max({g.Nx / (2.0 * pi), g.Ny / g.Ly, g.Nz / (2.0 * pi)});
    if (max_speed(state.uhat) * dt * nn > 1.0) throw std::runtime_error("step: CFL violation");

    const double tf = state.uhat.time;
    const double h = dt;
    const double nu = state.nu;
    auto at_time = [&](const SpectralVectorField& u, double t) {
        SimState s = state;
        s.uhat = u;
        s.uhat.time = t;
        return s;
    };

    const SpectralVectorField g1 = nonlinear_rhs(state);

    SpectralVectorField s2 = state.uhat;
    axpy(s2, 0.5 * h, g1);
    scale_phase(s2, nu, tf, tf + 0.5 * h);
    s2.time = tf + 0.5 * h;
    const SpectralVectorField g2 = nonlinear_rhs(at_time(s2, tf + 0.5 * h));

    SpectralVectorField s3 = state.uhat;
    scale_phase(s3, nu, tf, tf + 0.5 * h);
    axpy(s3, 0.5 * h, g2);
    s3.time = tf + 0.5 * h;
    const SpectralVectorField g3 = nonlinear_rhs(at_time(s3, tf + 0.5 * h));

    SpectralVectorField s4 = state.uhat;
    scale_phase(s4, nu, tf, tf + h);
    SpectralVectorField g3e = g3;
    scale_phase(g3e, nu, tf + 0.5 * h, tf + h);
    axpy(s4, h, g3e);
    s4.time = tf + h;
    const SpectralVectorField g4 = nonlinear_rhs(at_time(s4, tf + h));

    SpectralVectorField next = state.uhat;
    scale_phase(next, nu, tf, tf + h);
    SpectralVectorField g1e = g1;
    scale_phase(g1e, nu, tf, tf + h);
    SpectralVectorField g2e = g2;
    scale_phase(g2e, nu, tf + 0.5 * h, tf + h);
    axpy(next, h / 6.0, g1e);
    axpy(next, h / 3.0, g2e);
    axpy(next, h / 3.0, g3e);  // g3e already carries the half-interval factor
    axpy(next, h / 6.0, g4);
    next.time = tf + h;
    dealias(next);
    leray_project(next);
    check_finite(next);

    SimState out = state;
    out.uhat = next;
    out.t = state.t + dt;
    return out;
}

SimState advance(const SimState& state, double t_end, double dt) {
    if (t_end < state.t) throw std::invalid_argument("advance: t_end < t");
    if (!(dt > 0.0)) throw std::invalid_argument("advance: dt must be positive");
    const long nsteps = std::max(1L, long(std::ceil((t_end - state.t) / dt - 1e-12)));
    const double h = (t_end - state.t) / double(nsteps);
    SimState s = state;
    for (long i = 0; i < nsteps; ++i) s = step(s, h);
    s.t = t_end;
    return s;
}

SimState remap_shear(const SimState& state) {
    const GridSpec& g = state.uhat.grid;
    const double tf = state.uhat.time;
    const double shift = tf * g.Ly / (2.0 * pi);
    const long si = std::lround(shift);
    if (std::abs(shift - double(si)) > 1e-9)
        throw std::invalid_argument("remap_shear: frame time is not lattice-commensurate");

    SimState out = state;
    out.uhat = SpectralVectorField(g, Frame::Shear, 0.0);
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            // stored eta index recentered: eta_new = eta - k * tf
            const long m = g.meta(iy) - k * si;
            if (m < -g.Ny / 2 || m >= g.Ny / 2) continue;  // shifted off the lattice
            const int jy = g.iy_of(int(m));
            for (int iz = 0; iz < g.Nz; ++iz)
                for (int c = 0; c < 3; ++c)
                    out.uhat.comp(c).at(ix, jy, iz) = state.uhat.comp(c).at(ix, iy, iz);
        }
    }
    return out;
}

QFields q_fields(const SimState& state) {
    const GridSpec& g = state.uhat.grid;
    const double tf = state.uhat.time;
    QFields q{SpectralField(g), SpectralField(g), SpectralField(g)};
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double et = g.eta(iy) - k * tf;
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const double n2 = double(k) * k + et * et + double(l) * l;
                const auto n = g.index(ix, iy, iz);
                q.q1.c[n] = -n2 * state.uhat.u1.c[n];
                q.q2.c[n] = -n2 * state.uhat.u2.c[n];
                q.q3.c[n] = -n2 * state.uhat.u3.c[n];
            }
        }
    }
    return q;
}

}  // namespace couette
