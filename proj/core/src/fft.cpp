#include "couette3d/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace couette {

namespace {

// Plan cache. FFTW planning is not thread safe; execution on distinct buffers is.
std::mutex plan_mutex;

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

using Key3 = std::tuple<int, int, int>;
using Key2 = std::tuple<int, int>;
std::map<Key3, PlanPair> plans3;
std::map<Key2, PlanPair> plans2;

PlanPair& get_plan3(int nx, int ny, int nz) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& p = plans3[{nx, ny, nz}];
    if (!p.fwd) {
        std::vector<Complex> tmp(std::size_t(nx) * ny * nz);
        auto* buf = reinterpret_cast<fftw_complex*>(tmp.data());
        p.fwd = fftw_plan_dft_3d(nx, ny, nz, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        p.bwd = fftw_plan_dft_3d(nx, ny, nz, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    return p;
}

PlanPair& get_plan2(int ny, int nz) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& p = plans2[{ny, nz}];
    if (!p.fwd) {
        std::vector<Complex> tmp(std::size_t(ny) * nz);
        auto* buf = reinterpret_cast<fftw_complex*>(tmp.data());
        p.fwd = fftw_plan_dft_2d(ny, nz, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        p.bwd = fftw_plan_dft_2d(ny, nz, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    return p;
}

void scale(std::vector<Complex>& v, double s) {
    for (auto& x : v) x *= s;
}

const double inv_2pi_32 = 1.0 / std::pow(2.0 * pi, 1.5);

}  // namespace

void forward_transform(const GridSpec& g, const std::vector<Complex>& phys,
                       std::vector<Complex>& spec) {
    if (phys.size() != g.size()) throw std::invalid_argument("forward_transform: size mismatch");
    spec = phys;
    auto& p = get_plan3(g.Nx, g.Ny, g.Nz);
    auto* buf = reinterpret_cast<fftw_complex*>(spec.data());
    fftw_execute_dft(p.fwd, buf, buf);
    const double vol = (2.0 * pi) * g.Ly * (2.0 * pi);
    scale(spec, inv_2pi_32 * vol / double(g.size()));
}

void inverse_transform(const GridSpec& g, const std::vector<Complex>& spec,
                       std::vector<Complex>& phys) {
    if (spec.size() != g.size()) throw std::invalid_argument("inverse_transform: size mismatch");
    phys = spec;
    auto& p = get_plan3(g.Nx, g.Ny, g.Nz);
    auto* buf = reinterpret_cast<fftw_complex*>(phys.data());
    fftw_execute_dft(p.bwd, buf, buf);
    scale(phys, inv_2pi_32 * g.deta());
}

SpectralField forward_transform(const GridSpec& g, const std::vector<double>& phys) {
    std::vector<Complex> tmp(phys.size());
    for (std::size_t i = 0; i < phys.size(); ++i) tmp[i] = phys[i];
    SpectralField out(g);
    forward_transform(g, tmp, out.c);
    return out;
}

std::vector<double> inverse_transform_real(const SpectralField& f) {
    std::vector<Complex> tmp;
    inverse_transform(f.grid, f.c, tmp);
    std::vector<double> out(tmp.size());
    for (std::size_t i = 0; i < tmp.size(); ++i) out[i] = tmp[i].real();
    return out;
}

void forward_transform2(const Grid2& g, const std::vector<Complex>& phys,
                        std::vector<Complex>& spec) {
    if (phys.size() != g.size()) throw std::invalid_argument("forward_transform2: size mismatch");
    spec = phys;
    auto& p = get_plan2(g.Ny, g.Nz);
    auto* buf = reinterpret_cast<fftw_complex*>(spec.data());
    fftw_execute_dft(p.fwd, buf, buf);
    const double area = g.Ly * (2.0 * pi);
    scale(spec, (1.0 / (2.0 * pi)) * area / double(g.size()));
}

void inverse_transform2(const Grid2& g, const std::vector<Complex>& spec,
                        std::vector<Complex>& phys) {
    if (spec.size() != g.size()) throw std::invalid_argument("inverse_transform2: size mismatch");
    phys = spec;
    auto& p = get_plan2(g.Ny, g.Nz);
    auto* buf = reinterpret_cast<fftw_complex*>(phys.data());
    fftw_execute_dft(p.bwd, buf, buf);
    scale(phys, (1.0 / (2.0 * pi)) * g.deta());
}

Field2 forward_transform2(const Grid2& g, const std::vector<double>& phys) {
    std::vector<Complex> tmp(phys.size());
    for (std::size_t i = 0; i < phys.size(); ++i) tmp[i] = phys[i];
    Field2 out(g);
    forward_transform2(g, tmp, out.c);
    return out;
}

std::vector<double> inverse_transform2_real(const Field2& f) {
    std::vector<Complex> tmp;
    inverse_transform2(f.grid, f.c, tmp);
    std::vector<double> out(tmp.size());
    for (std::size_t i = 0; i < tmp.size(); ++i) out[i] = tmp[i].real();
    return out;
}

}  // namespace couette
