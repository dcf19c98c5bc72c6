#include "couette3d/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "couette3d/fft.hpp"
#include "couette3d/spectral_ops.hpp"

namespace couette {

void TimeSeries::push(double t, double v) {
    if (!std::isfinite(t) || !std::isfinite(v))
        throw std::invalid_argument("TimeSeries: non-finite sample");
    if (!samples.empty() && !(t > samples.back().first))
        throw std::invalid_argument("TimeSeries: t must be strictly increasing");
    samples.emplace_back(t, v);
}

ComponentEnergies component_energies(const SpectralVectorField& u) {
    const GridSpec& g = u.grid;
    ComponentEnergies e;
    std::vector<double> zero_part(g.Ny * std::size_t(g.Nz));
    for (int c = 0; c < 3; ++c) {
        double* acc = c == 0 ? &e.E0_1 : (c == 1 ? &e.E0_2 : &e.E0_3);
        std::vector<double> terms;
        terms.reserve(g.size());
        double zero = 0.0;
        for (int ix = 0; ix < g.Nx; ++ix) {
            const bool kz = g.kx(ix) == 0;
            for (int iy = 0; iy < g.Ny; ++iy)
                for (int iz = 0; iz < g.Nz; ++iz) {
                    const double v = std::norm(u.comp(c).at(ix, iy, iz)) * g.deta();
                    if (kz)
                        zero += v;
                    else
                        terms.push_back(v);
                }
        }
        *acc = zero;
        e.E_neq += pairwise_sum(terms);
    }
    e.E_total = e.E_neq + e.E0_1 + e.E0_2 + e.E0_3;
    return e;
}

double sobolev_norm(const SpectralField& f, double sigma, double t_frame) {
    const GridSpec& g = f.grid;
    std::vector<double> terms;
    terms.reserve(g.size());
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double et = g.eta(iy) - k * t_frame;
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const double jap2 = 1.0 + double(k) * k + et * et + double(l) * l;
                terms.push_back(std::pow(jap2, sigma) * std::norm(f.at(ix, iy, iz)) * g.deta());
            }
        }
    }
    return std::sqrt(pairwise_sum(terms));
}

PowerLawFit fit_power_law(const TimeSeries& series, double t_lo, double t_hi) {
    std::vector<std::pair<double, double>> in;
    for (const auto& [t, v] : series.samples)
        if (t >= t_lo && t <= t_hi) in.emplace_back(t, v);
    if (in.size() < 8) throw std::invalid_argument("fit_power_law: need >= 8 samples in window");
    in.erase(in.begin(), in.begin() + 5);  // transient guard
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = double(in.size());
    for (const auto& [t, v] : in) {
        if (!(t > 0.0 && v > 0.0))
            throw std::invalid_argument("fit_power_law: samples must be positive");
        const double x = std::log(t), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double vx = sxx - sx * sx / n;
    const double vy = syy - sy * sy / n;
    const double cxy = sxy - sx * sy / n;
    PowerLawFit fit;
    fit.exponent = vx > 0.0 ? cxy / vx : 0.0;
    fit.r2 = (vx > 0.0 && vy > 0.0) ? cxy * cxy / (vx * vy) : 1.0;
    return fit;
}

Field2 forcing_field(const SimState& state) {
    const GridSpec& g = state.uhat.grid;
    const double tf = state.uhat.time;

    // x-dependent part of the velocity
    SpectralVectorField uneq = state.uhat;
    for (int c = 0; c < 3; ++c)
        for (int iy = 0; iy < g.Ny; ++iy)
            for (int iz = 0; iz < g.Nz; ++iz) uneq.comp(c).at(0, iy, iz) = Complex{0.0, 0.0};

    std::array<std::vector<double>, 3> up;
    for (int c = 0; c < 3; ++c) up[c] = inverse_transform_real(uneq.comp(c));

    // shear-frame gradient of u1_neq
    std::array<std::vector<double>, 3> du;
    for (int d = 0; d < 3; ++d) {
        SpectralField dfield(g);
        for (int ix = 0; ix < g.Nx; ++ix) {
            const int k = g.kx(ix);
            for (int iy = 0; iy < g.Ny; ++iy) {
                const double et = g.eta(iy) - k * tf;
                for (int iz = 0; iz < g.Nz; ++iz) {
                    const double kl = d == 0 ? double(k) : (d == 1 ? et : double(g.lz(iz)));
                    dfield.at(ix, iy, iz) =
                        Complex{0.0, 1.0} * kl * uneq.u1.at(ix, iy, iz);
                }
            }
        }
        du[d] = inverse_transform_real(dfield);
    }

    std::vector<double> prod(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        prod[i] = up[0][i] * du[0][i] + up[1][i] * du[1][i] + up[2][i] * du[2][i];
    SpectralField ph = forward_transform(g, prod);

    Grid2 g2(g.Ny, g.Nz, g.Ly);
    Field2 out(g2);
    const double scale = 1.0 / std::sqrt(2.0 * pi);  // 3D to 2D convention
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz) out.at(iy, iz) = scale * ph.at(0, iy, iz);
    dealias2(out);
    return out;
}

double energy_flux(const SpectralVectorField& u) {
    const GridSpec& g = u.grid;
    std::vector<double> terms;
    terms.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        terms.push_back(std::real(u.u1.c[i] * std::conj(u.u2.c[i])) * g.deta());
    return pairwise_sum(terms);
}

double gradient_norm_sq(const SpectralVectorField& u) {
    const GridSpec& g = u.grid;
    const double tf = u.time;
    std::vector<double> terms;
    terms.reserve(g.size());
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double et = g.eta(iy) - k * tf;
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const double n2 = double(k) * k + et * et + double(l) * l;
                const auto n = g.index(ix, iy, iz);
                terms.push_back(n2 *
                                (std::norm(u.u1.c[n]) + std::norm(u.u2.c[n]) +
                                 std::norm(u.u3.c[n])) *
                                g.deta());
            }
        }
    }
    return pairwise_sum(terms);
}

}  // namespace couette
