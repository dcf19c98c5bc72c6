#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "couette3d/config.hpp"
#include "couette3d/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"shear-frame spectral solver and analysis suite"};
    app.require_subcommand(1);

    const char* kinds[] = {"linear", "streak", "sim3d", "toy", "multiplier-table", "coord"};
    struct Opts {
        std::string config;
        std::string out;
        std::uint64_t seed = 0;
        bool seed_set = false;
        bool out_set = false;
    };
    std::map<std::string, Opts> opts;
    for (const char* kind : kinds) {
        auto* sub = app.add_subcommand(kind);
        Opts& o = opts[kind];
        sub->add_option("--config", o.config, "experiment config file")->required();
        sub->add_option("--seed", o.seed, "override the config seed")
            ->each([&o](const std::string&) { o.seed_set = true; });
        sub->add_option("--out", o.out, "override the output directory")
            ->each([&o](const std::string&) { o.out_set = true; });
    }

    CLI11_PARSE(app, argc, argv);
    const std::string kind = app.get_subcommands().front()->get_name();
    const Opts& o = opts[kind];

    try {
        couette::ExperimentConfig cfg = couette::parse_config_file(o.config);
        if (cfg.kind.empty()) cfg.kind = kind;
        if (cfg.kind != kind)
            throw couette::ConfigError("config kind '" + cfg.kind +
                                       "' does not match subcommand '" + kind + "'");
        if (o.seed_set) cfg.seed = o.seed;
        if (o.out_set) cfg.output_dir = o.out;
        couette::run(cfg);
    } catch (const couette::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
