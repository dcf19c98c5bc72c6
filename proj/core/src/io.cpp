#include "couette3d/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace couette {

namespace {

constexpr char kMagic[8] = {'C', 'U', 'E', 'T', '3', 'D', '0', '1'};

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    put_u64(os, u);
}

double get_f64(std::istream& is) {
    const std::uint64_t u = get_u64(is);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

}  // namespace

void write_checkpoint(const SimState& state, const std::string& path) {
    const GridSpec& g = state.uhat.grid;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw CheckpointError("checkpoint: cannot open " + path + " for writing");
    os.write(kMagic, 8);
    put_u64(os, std::uint64_t(g.Nx));
    put_u64(os, std::uint64_t(g.Ny));
    put_u64(os, std::uint64_t(g.Nz));
    put_f64(os, g.Ly);
    put_f64(os, state.t);
    put_f64(os, state.nu);
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k <= g.Nx / 2; ++k)
            for (int iy = 0; iy < g.Ny; ++iy)
                for (int iz = 0; iz < g.Nz; ++iz) {
                    const Complex v = state.uhat.comp(c).at(k, iy, iz);
                    put_f64(os, v.real());
                    put_f64(os, v.imag());
                }
    if (!os) throw CheckpointError("checkpoint: write failed for " + path);
}

SimState read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CheckpointError("checkpoint: cannot open " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kMagic, 8) != 0)
        throw CheckpointError("checkpoint: bad magic/version in " + path);
    const auto nx = get_u64(is), ny = get_u64(is), nz = get_u64(is);
    const double ly = get_f64(is);
    if (!is) throw CheckpointError("checkpoint: truncated header in " + path);
    GridSpec g;
    try {
        g = GridSpec(int(nx), int(ny), int(nz), ly);
    } catch (const std::exception& e) {
        throw CheckpointError(std::string("checkpoint: bad dimensions: ") + e.what());
    }
    SimState s(g, 0.0);
    s.t = get_f64(is);
    s.nu = get_f64(is);
    s.uhat.time = s.t;
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k <= g.Nx / 2; ++k)
            for (int iy = 0; iy < g.Ny; ++iy)
                for (int iz = 0; iz < g.Nz; ++iz) {
                    const double re = get_f64(is);
                    const double im = get_f64(is);
                    s.uhat.comp(c).at(k, iy, iz) = Complex{re, im};
                }
    if (!is) throw CheckpointError("checkpoint: truncated data in " + path);
    // reconstruct the dropped half-spectrum from Hermitian symmetry
    for (int c = 0; c < 3; ++c)
        for (int k = 1; k < g.Nx / 2; ++k)
            for (int iy = 0; iy < g.Ny; ++iy)
                for (int iz = 0; iz < g.Nz; ++iz)
                    s.uhat.comp(c).at(g.Nx - k, (g.Ny - iy) % g.Ny, (g.Nz - iz) % g.Nz) =
                        std::conj(s.uhat.comp(c).at(k, iy, iz));
    return s;
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("csv: cannot open " + path + " for writing");
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << "\n";
    os.precision(17);
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw std::runtime_error("csv: row width mismatch in " + path);
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    if (!os) throw std::runtime_error("csv: write failed for " + path);
}

void write_manifest(const ExperimentConfig& cfg, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("manifest: cannot open " + path + " for writing");
    std::ostringstream hash;
    hash << std::hex << cfg.param_hash();
    os << "{\n  \"kind\": \"" << cfg.kind << "\",\n  \"param_hash\": \"" << hash.str()
       << "\",\n  \"params\": {\n";
    std::istringstream lines(cfg.canonical());
    std::string line, sep;
    while (std::getline(lines, line)) {
        const std::size_t eq = line.find('=');
        os << sep << "    \"" << line.substr(0, eq) << "\": \"" << line.substr(eq + 1) << "\"";
        sep = ",\n";
    }
    os << "\n  }\n}\n";
}

}  // namespace couette
