#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "couette3d/config.hpp"
#include "couette3d/io.hpp"
#include "couette3d/random_field.hpp"
#include "couette3d/runner.hpp"
#include "couette3d/spectral_ops.hpp"

using namespace couette;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("couette3d_test_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("config parsing") {
    SUBCASE("defaults and overrides") {
        const auto cfg = parse_config_text(
            "kind = sim3d\n"
            "# a comment\n"
            "nu = 5e-4\n"
            "Nx=32\n"
            "init = cascade\n"
            "\n");
        CHECK(cfg.kind == "sim3d");
        CHECK(cfg.nu == 5e-4);
        CHECK(cfg.Nx == 32);
        CHECK(cfg.Ny == 128);  // untouched default
        CHECK(cfg.get_string("init", "random") == "cascade");
        CHECK(cfg.get_double("absent", 7.5) == 7.5);
        cfg.validate();
    }
    SUBCASE("malformed lines and bad values throw") {
        CHECK_THROWS_AS(parse_config_text("kind sim3d\n"), ConfigError);
        CHECK_THROWS_AS(parse_config_text("kind = sim3d\nnu = abc\n"), ConfigError);
        CHECK_THROWS_AS(parse_config_text("kind = sim3d\nNx = 33\n").validate(),
                        ConfigError);
        CHECK_THROWS_AS(parse_config_text("kind = frobnicate\n").validate(), ConfigError);
        CHECK_THROWS_AS(parse_config_text("kind = sim3d\nnu = -1\n").validate(),
                        ConfigError);
    }
    SUBCASE("hash changes iff parameters change") {
        const auto a = parse_config_text("kind = toy\nnu = 1e-3\n");
        const auto b = parse_config_text("nu = 1e-3\nkind = toy\n");  // order irrelevant
        const auto c = parse_config_text("kind = toy\nnu = 2e-3\n");
        CHECK(a.param_hash() == b.param_hash());
        CHECK(a.param_hash() != c.param_hash());
    }
    SUBCASE("threshold predicate") {
        auto cfg = parse_config_text("kind = toy\nnu = 1e-3\neps = 1e-4\nc0 = 1\n");
        CHECK(cfg.below_threshold());
        cfg.eps = 1e-2;
        CHECK(!cfg.below_threshold());
    }
}

TEST_CASE("checkpoint round trip") {
    const GridSpec g(8, 16, 8);
    SimState s(g, 3e-3);
    s.uhat = random_initial_data(11, g, 0.7, Envelope::gevrey(0.3, 0.5));
    s.t = 2.5;
    s.uhat.time = 2.5;

    TempDir dir("ckpt");
    const std::string path = (dir.path / "state.bin").string();
    write_checkpoint(s, path);
    const SimState r = read_checkpoint(path);

    CHECK(r.t == s.t);
    CHECK(r.nu == s.nu);
    CHECK(r.uhat.grid.Nx == g.Nx);
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t n = 0; n < g.size(); ++n)
            worst = std::max(worst, std::abs(r.uhat.comp(c).c[n] - s.uhat.comp(c).c[n]));
    CHECK(worst == 0.0);  // bit-exact through Hermitian reconstruction

    SUBCASE("bad magic") {
        std::ofstream(path, std::ios::binary) << "NOTMAGIC";
        CHECK_THROWS_AS(read_checkpoint(path), CheckpointError);
    }
    SUBCASE("truncated file") {
        const std::string full = slurp(path);
        std::ofstream(path, std::ios::binary).write(full.data(), long(full.size() / 2));
        CHECK_THROWS_AS(read_checkpoint(path), CheckpointError);
    }
}

TEST_CASE("random initial data") {
    const GridSpec g(16, 32, 16);
    SUBCASE("zero amplitude gives zero field") {
        const auto u = random_initial_data(3, g, 0.0, Envelope::gevrey(0.5, 0.5));
        CHECK(l2_norm_sq(u) == 0.0);
    }
    SUBCASE("solenoidal, normalized, deterministic") {
        const auto u = random_initial_data(3, g, 0.25, Envelope::gevrey(0.5, 0.5));
        CHECK(divergence_residual(u) < 1e-12);
        CHECK(std::sqrt(l2_norm_sq(u)) == doctest::Approx(0.25).epsilon(1e-12));
        for (int c = 0; c < 3; ++c) CHECK(hermitian_residual(u.comp(c)) < 1e-13);
        const auto v = random_initial_data(3, g, 0.25, Envelope::gevrey(0.5, 0.5));
        double diff = 0.0;
        for (int c = 0; c < 3; ++c)
            for (std::size_t n = 0; n < g.size(); ++n)
                diff = std::max(diff, std::abs(u.comp(c).c[n] - v.comp(c).c[n]));
        CHECK(diff == 0.0);
    }
    SUBCASE("different seeds decorrelate") {
        const auto u = random_initial_data(3, g, 1.0, Envelope::gevrey(0.5, 0.5));
        const auto w = random_initial_data(4, g, 1.0, Envelope::gevrey(0.5, 0.5));
        Complex inner = 0.0;
        for (int c = 0; c < 3; ++c)
            for (std::size_t n = 0; n < g.size(); ++n)
                inner += u.comp(c).c[n] * std::conj(w.comp(c).c[n]);
        CHECK(std::abs(inner) * g.deta() < 0.2);  // |<u,w>| << ||u|| ||w|| = 1
    }
    SUBCASE("cascade profile suppresses u2") {
        const auto u = random_cascade_data(5, g, 1.0, 1e-3, Envelope::gevrey(0.3, 0.5));
        CHECK(divergence_residual(u) < 1e-12);
        CHECK(std::sqrt(l2_norm_sq(u)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::sqrt(l2_norm_sq(u.u2)) < 0.05);
    }
}

TEST_CASE("runner smoke tests") {
    SUBCASE("linear run writes its series") {
        TempDir dir("lin");
        auto cfg = parse_config_text(
            "kind = linear\nnu = 0.01\nt_end = 2\ndt = 0.01\ndt_out = 0.5\n"
            "k = 1\neta = 4\nl = 1\n");
        cfg.output_dir = dir.path.string();
        run(cfg);
        CHECK(fs::exists(dir.path / "linear.csv"));
        CHECK(fs::exists(dir.path / "manifest.json"));
        const std::string csv = slurp((dir.path / "linear.csv").string());
        CHECK(csv.rfind("t,u1_abs,u2_abs,u3_abs,q2_abs,div_residual\n", 0) == 0);
    }
    SUBCASE("identical configs produce byte-identical output") {
        TempDir a("det_a"), b("det_b");
        const std::string text =
            "kind = sim3d\nNx = 8\nNy = 16\nNz = 8\nnu = 0.01\neps = 1e-3\n"
            "t_end = 0.5\ndt = 0.05\ndt_out = 0.25\nseed = 9\n";
        auto ca = parse_config_text(text);
        ca.output_dir = a.path.string();
        run(ca);
        auto cb = parse_config_text(text);
        cb.output_dir = b.path.string();
        run(cb);
        CHECK(slurp((a.path / "sim3d.csv").string()) ==
              slurp((b.path / "sim3d.csv").string()));
        CHECK(slurp((a.path / "state.bin").string()) ==
              slurp((b.path / "state.bin").string()));
    }
    SUBCASE("toy and multiplier-table runs") {
        TempDir dir("tm");
        auto cfg = parse_config_text(
            "kind = toy\nnu = 0.01\neps = 1e-3\neta = 25\nt_end = 3\ndt = 0.001\n"
            "dt_out = 1\n");
        cfg.output_dir = dir.path.string();
        run(cfg);
        CHECK(fs::exists(dir.path / "toy.csv"));

        auto mt = parse_config_text("kind = multiplier-table\neta_min = 100\neta_max = 800\n");
        mt.output_dir = dir.path.string();
        run(mt);
        const std::string csv = slurp((dir.path / "multiplier_table.csv").string());
        // dyadic 100..800 plus header
        int lines = 0;
        for (char ch : csv) lines += ch == '\n';
        CHECK(lines == 5);
    }
    SUBCASE("invalid config leaves no outputs") {
        TempDir dir("bad");
        auto cfg = parse_config_text("kind = sim3d\nNx = 10\n");  // not FFT friendly? 10 even
        cfg.Nx = 33;                                              // odd: rejected
        cfg.output_dir = (dir.path / "sub").string();
        CHECK_THROWS_AS(run(cfg), ConfigError);
        CHECK(!fs::exists(dir.path / "sub"));
    }
}
