#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace couette {

using Complex = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

/// Collocation grid on the torus T_x(2pi) x T_y(Ly) x T_z(2pi).
///
/// The y direction stands in for the unbounded coordinate of the continuous
/// problem: it is truncated to a periodic interval of length Ly (>= 2pi) and
/// experiments are expected to keep the solution support away from the seam.
/// Wavenumbers: k, l integers; eta on the lattice (2pi/Ly)*Z.
struct GridSpec {
    int Nx = 0, Ny = 0, Nz = 0;
    double Ly = 4.0 * pi;

    GridSpec() = default;
    GridSpec(int nx, int ny, int nz, double ly = 4.0 * pi) : Nx(nx), Ny(ny), Nz(nz), Ly(ly) {
        validate();
    }

    void validate() const {
        auto bad = [](int n) { return n < 8 || n % 2 != 0; };
        if (bad(Nx) || bad(Ny) || bad(Nz))
            throw std::invalid_argument("GridSpec: Nx, Ny, Nz must be even and >= 8");
        if (!(Ly >= 2.0 * pi)) throw std::invalid_argument("GridSpec: Ly must be >= 2pi");
    }

    std::size_t size() const { return std::size_t(Nx) * Ny * Nz; }
    std::size_t index(int ix, int iy, int iz) const {
        return (std::size_t(ix) * Ny + iy) * Nz + iz;
    }

    double deta() const { return 2.0 * pi / Ly; }

    // Signed wavenumbers from storage index (FFT ordering).
    int kx(int ix) const { return ix < Nx / 2 ? ix : ix - Nx; }
    int meta(int iy) const { return iy < Ny / 2 ? iy : iy - Ny; }  // eta lattice index
    double eta(int iy) const { return deta() * meta(iy); }
    int lz(int iz) const { return iz < Nz / 2 ? iz : iz - Nz; }

    // Storage index of a signed lattice coordinate (negative values wrap).
    int ix_of(int k) const { return k >= 0 ? k : k + Nx; }
    int iy_of(int m) const { return m >= 0 ? m : m + Ny; }
    int iz_of(int l) const { return l >= 0 ? l : l + Nz; }

    double x(int ix) const { return 2.0 * pi * ix / Nx; }
    double y(int iy) const { return Ly * double(iy) / Ny; }
    double z(int iz) const { return 2.0 * pi * iz / Nz; }

    bool operator==(const GridSpec& o) const {
        return Nx == o.Nx && Ny == o.Ny && Nz == o.Nz && Ly == o.Ly;
    }
};

/// Wavevector in the shearing frame: (k, eta - k t, l).
struct ShearWavevector {
    int k = 0;
    double eta_t = 0.0;
    int l = 0;

    double norm2() const { return double(k) * k + eta_t * eta_t + double(l) * l; }
    bool zero() const { return k == 0 && l == 0 && eta_t == 0.0; }
};

inline ShearWavevector shear_wavevector(int k, double eta, int l, double t) {
    return {k, eta - k * t, l};
}

enum class Frame { Lab, Shear };

/// Spectral scalar on the full (k, eta, l) lattice, FFT storage order.
struct SpectralField {
    GridSpec grid;
    std::vector<Complex> c;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g) : grid(g), c(g.size(), Complex{0.0, 0.0}) {}

    Complex& at(int ix, int iy, int iz) { return c[grid.index(ix, iy, iz)]; }
    const Complex& at(int ix, int iy, int iz) const { return c[grid.index(ix, iy, iz)]; }
};

/// Three spectral components tagged with frame and time stamp.
struct SpectralVectorField {
    GridSpec grid;
    SpectralField u1, u2, u3;
    Frame frame = Frame::Shear;
    double time = 0.0;

    SpectralVectorField() = default;
    explicit SpectralVectorField(const GridSpec& g, Frame f = Frame::Shear, double t = 0.0)
        : grid(g), u1(g), u2(g), u3(g), frame(f), time(t) {}

    SpectralField& comp(int i) { return i == 0 ? u1 : (i == 1 ? u2 : u3); }
    const SpectralField& comp(int i) const { return i == 0 ? u1 : (i == 1 ? u2 : u3); }
};

/// 2D grid in (y, z) used by the streak and coordinate modules.
struct Grid2 {
    int Ny = 0, Nz = 0;
    double Ly = 4.0 * pi;

    Grid2() = default;
    Grid2(int ny, int nz, double ly = 4.0 * pi) : Ny(ny), Nz(nz), Ly(ly) {
        if (Ny < 8 || Ny % 2 || Nz < 8 || Nz % 2)
            throw std::invalid_argument("Grid2: Ny, Nz must be even and >= 8");
        if (!(Ly >= 2.0 * pi)) throw std::invalid_argument("Grid2: Ly must be >= 2pi");
    }

    std::size_t size() const { return std::size_t(Ny) * Nz; }
    std::size_t index(int iy, int iz) const { return std::size_t(iy) * Nz + iz; }
    double deta() const { return 2.0 * pi / Ly; }
    int meta(int iy) const { return iy < Ny / 2 ? iy : iy - Ny; }
    double eta(int iy) const { return deta() * meta(iy); }
    int lz(int iz) const { return iz < Nz / 2 ? iz : iz - Nz; }
    double y(int iy) const { return Ly * double(iy) / Ny; }
    double z(int iz) const { return 2.0 * pi * iz / Nz; }

    bool operator==(const Grid2& o) const { return Ny == o.Ny && Nz == o.Nz && Ly == o.Ly; }
};

struct Field2 {
    Grid2 grid;
    std::vector<Complex> c;

    Field2() = default;
    explicit Field2(const Grid2& g) : grid(g), c(g.size(), Complex{0.0, 0.0}) {}

    Complex& at(int iy, int iz) { return c[grid.index(iy, iz)]; }
    const Complex& at(int iy, int iz) const { return c[grid.index(iy, iz)]; }
};

}  // namespace couette
