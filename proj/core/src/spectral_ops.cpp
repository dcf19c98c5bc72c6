#include "couette3d/spectral_ops.hpp"

#include <algorithm>
#include <cmath>

namespace couette {

double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

std::array<Complex, 3> leray_project(const std::array<Complex, 3>& uhat,
                                     const ShearWavevector& kv) {
    const double n2 = kv.norm2();
    if (n2 == 0.0) return uhat;
    const Complex dot = double(kv.k) * uhat[0] + kv.eta_t * uhat[1] + double(kv.l) * uhat[2];
    const Complex a = dot / n2;
    return {uhat[0] - double(kv.k) * a, uhat[1] - kv.eta_t * a, uhat[2] - double(kv.l) * a};
}

void leray_project(SpectralVectorField& u) {
    const GridSpec& g = u.grid;
    const double t = u.time;
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double eta = g.eta(iy);
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const auto idx = g.index(ix, iy, iz);
                const ShearWavevector kv = shear_wavevector(k, eta, l, t);
                auto p = leray_project({u.u1.c[idx], u.u2.c[idx], u.u3.c[idx]}, kv);
                u.u1.c[idx] = p[0];
                u.u2.c[idx] = p[1];
                u.u3.c[idx] = p[2];
            }
        }
    }
}

bool dealiased_band(const GridSpec& g, int k, int m, int l) {
    return 3 * std::abs(k) <= g.Nx && 3 * std::abs(m) <= g.Ny && 3 * std::abs(l) <= g.Nz;
}

void dealias(SpectralField& f) {
    const GridSpec& g = f.grid;
    for (int ix = 0; ix < g.Nx; ++ix)
        for (int iy = 0; iy < g.Ny; ++iy)
            for (int iz = 0; iz < g.Nz; ++iz)
                if (!dealiased_band(g, g.kx(ix), g.meta(iy), g.lz(iz)))
                    f.c[g.index(ix, iy, iz)] = 0.0;
}

void dealias(SpectralVectorField& u) {
    dealias(u.u1);
    dealias(u.u2);
    dealias(u.u3);
}

void dealias2(Field2& f) {
    const Grid2& g = f.grid;
    for (int iy = 0; iy < g.Ny; ++iy)
        for (int iz = 0; iz < g.Nz; ++iz)
            if (3 * std::abs(g.meta(iy)) > g.Ny || 3 * std::abs(g.lz(iz)) > g.Nz)
                f.c[g.index(iy, iz)] = 0.0;
}

double divergence_residual(const SpectralVectorField& u) {
    const GridSpec& g = u.grid;
    const double t = u.frame == Frame::Shear ? u.time : 0.0;
    double worst = 0.0;
    double norm = std::sqrt(l2_norm_sq(u));
    if (norm == 0.0) return 0.0;
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int k = g.kx(ix);
        for (int iy = 0; iy < g.Ny; ++iy) {
            const double et = g.eta(iy) - k * t;
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int l = g.lz(iz);
                const auto idx = g.index(ix, iy, iz);
                const Complex d =
                    double(k) * u.u1.c[idx] + et * u.u2.c[idx] + double(l) * u.u3.c[idx];
                const double kn = std::sqrt(double(k) * k + et * et + double(l) * l);
                if (kn > 0.0) worst = std::max(worst, std::abs(d) / (kn * norm));
            }
        }
    }
    return worst;
}

void enforce_hermitian(SpectralField& f) {
    const GridSpec& g = f.grid;
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int jx = (g.Nx - ix) % g.Nx;
        for (int iy = 0; iy < g.Ny; ++iy) {
            const int jy = (g.Ny - iy) % g.Ny;
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int jz = (g.Nz - iz) % g.Nz;
                const auto a = g.index(ix, iy, iz);
                const auto b = g.index(jx, jy, jz);
                if (a > b) continue;
                const Complex avg = 0.5 * (f.c[a] + std::conj(f.c[b]));
                f.c[a] = avg;
                f.c[b] = std::conj(avg);
            }
        }
    }
}

double hermitian_residual(const SpectralField& f) {
    const GridSpec& g = f.grid;
    double worst = 0.0, scale = 0.0;
    for (const auto& v : f.c) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0.0;
    for (int ix = 0; ix < g.Nx; ++ix) {
        const int jx = (g.Nx - ix) % g.Nx;
        for (int iy = 0; iy < g.Ny; ++iy) {
            const int jy = (g.Ny - iy) % g.Ny;
            for (int iz = 0; iz < g.Nz; ++iz) {
                const int jz = (g.Nz - iz) % g.Nz;
                worst = std::max(worst, std::abs(f.c[g.index(ix, iy, iz)] -
                                                 std::conj(f.c[g.index(jx, jy, jz)])));
            }
        }
    }
    return worst / scale;
}

namespace {
double sum_abs2(const std::vector<Complex>& v, double weight) {
    std::vector<double> mags(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mags[i] = std::norm(v[i]);
    return weight * pairwise_sum(mags);
}
}  // namespace

double l2_norm_sq(const SpectralField& f) { return sum_abs2(f.c, f.grid.deta()); }

double l2_norm_sq(const SpectralVectorField& u) {
    return l2_norm_sq(u.u1) + l2_norm_sq(u.u2) + l2_norm_sq(u.u3);
}

double l2_norm_sq(const Field2& f) { return sum_abs2(f.c, f.grid.deta()); }

}  // namespace couette
