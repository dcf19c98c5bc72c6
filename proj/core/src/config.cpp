#include "couette3d/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace couette {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
}

long to_long(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for '" + key + "': " + v);
    }
}

}  // namespace

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
    auto it = extra.find(key);
    return it == extra.end() ? fallback : to_double(key, it->second);
}

long ExperimentConfig::get_long(const std::string& key, long fallback) const {
    auto it = extra.find(key);
    return it == extra.end() ? fallback : to_long(key, it->second);
}

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& fallback) const {
    auto it = extra.find(key);
    return it == extra.end() ? fallback : it->second;
}

std::string ExperimentConfig::canonical() const {
    std::ostringstream os;
    os.precision(17);
    os << "Ly=" << Ly << "\nNx=" << Nx << "\nNy=" << Ny << "\nNz=" << Nz << "\nc0=" << c0
       << "\ndt=" << dt << "\ndt_out=" << dt_out << "\neps=" << eps << "\nkind=" << kind
       << "\nnu=" << nu << "\nseed=" << seed << "\nt_end=" << t_end << "\n";
    for (const auto& [k, v] : extra) os << k << "=" << v << "\n";
    return os.str();
}

std::uint64_t ExperimentConfig::param_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void ExperimentConfig::validate() const {
    static const char* kinds[] = {"linear", "streak", "sim3d", "toy", "multiplier-table", "coord"};
    if (std::find(std::begin(kinds), std::end(kinds), kind) == std::end(kinds))
        throw ConfigError("config: unknown kind '" + kind + "'");
    try {
        grid().validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!(nu > 0.0)) throw ConfigError("config: nu must be positive");
    if (eps < 0.0) throw ConfigError("config: eps must be nonnegative");
    if (!(dt > 0.0) || !(dt_out > 0.0)) throw ConfigError("config: dt, dt_out must be positive");
    if (!(t_end >= 0.0)) throw ConfigError("config: t_end must be nonnegative");
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: empty key on line " + std::to_string(lineno));

        if (key == "kind") cfg.kind = val;
        else if (key == "Nx") cfg.Nx = int(to_long(key, val));
        else if (key == "Ny") cfg.Ny = int(to_long(key, val));
        else if (key == "Nz") cfg.Nz = int(to_long(key, val));
        else if (key == "Ly") cfg.Ly = to_double(key, val);
        else if (key == "nu") cfg.nu = to_double(key, val);
        else if (key == "eps") cfg.eps = to_double(key, val);
        else if (key == "c0") cfg.c0 = to_double(key, val);
        else if (key == "seed") cfg.seed = std::uint64_t(to_long(key, val));
        else if (key == "t_end") cfg.t_end = to_double(key, val);
        else if (key == "dt") cfg.dt = to_double(key, val);
        else if (key == "dt_out") cfg.dt_out = to_double(key, val);
        else if (key == "output_dir") cfg.output_dir = val;
        else cfg.extra[key] = val;
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace couette
