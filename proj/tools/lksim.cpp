// Copyright 2026 The liebkagome Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// lksim: command-line front end.
//
//   lksim lattice|sample|sweep|sq|verify [--config FILE] [--key value ...]
//
// Every config-file key is also a long flag; flags override the file.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lk/config.hpp"
#include "lk/error.hpp"
#include "lk/format.hpp"
#include "lk/io.hpp"
#include "lk/sweep.hpp"
#include "lk/verify.hpp"

namespace {

struct Subcommand {
    CLI::App* app = nullptr;
    std::string config_path;
    std::vector<std::pair<std::string, CLI::Option*>> options;
    std::map<std::string, std::string> values;
};

void add_key_options(Subcommand& sub) {
    sub.app->add_option("--config", sub.config_path, "key = value config file (flags override it)");
    for (const auto& key : lk::config_keys()) {
        const std::string name(key.name);
        std::string help(key.help);
        if (!key.default_value.empty()) help += " [default: " + std::string(key.default_value) + "]";
        auto* opt = sub.app->add_option("--" + name, sub.values[name], help);
        sub.options.emplace_back(name, opt);
    }
}

lk::RunConfig load_config(const Subcommand& sub) {
    lk::KeyValues entries;
    if (!sub.config_path.empty()) entries = lk::parse_key_values(lk::read_file(sub.config_path));
    for (const auto& [name, opt] : sub.options)
        if (opt->count() > 0) entries.emplace_back(name, sub.values.at(name));
    return lk::build_config(entries);
}

int cmd_lattice(const lk::RunConfig& cfg) {
    lk::ensure_writable(cfg.output_dir);
    const auto lattice = lk::build_lattice(cfg.plan.cells, cfg.plan.boundary);
    std::ostringstream text;
    lk::write_lattice(text, lattice);
    const auto path = cfg.output_dir / "lattice.txt";
    lk::write_file(path, text.str());
    std::cout << path.string() << '\n';
    return 0;
}

void print_summary(const lk::SweepResult& result) {
    for (const auto& p : result.points) {
        std::cout << "jprime=" << lk::format_number(p.jprime) << " h=" << lk::format_number(p.h)
                  << " mean_abs_m=" << p.magnetization.mean << " stderr=" << p.magnetization.std_error << '\n';
    }
}

int cmd_run(lk::RunConfig cfg, bool single_point) {
    if (single_point) {
        if (cfg.plan.jprimes.size() != 1) lk::fail(lk::ErrorKind::Config, "key 'jprime': sample needs one value");
        if (cfg.plan.fields.size() != 1) lk::fail(lk::ErrorKind::Config, "key 'h': sample needs one value");
        cfg.dump_samples = true;
        cfg.plan.keep_samples = true;
    }
    lk::ensure_writable(cfg.output_dir);
    const auto result = lk::run_sweep(cfg.plan);
    const auto files = lk::write_outputs(result, cfg);
    if (cfg.verbosity > 0) print_summary(result);
    std::cout << "wrote " << files.size() + 1 << " files to " << cfg.output_dir.string() << '\n';
    return 0;
}

int cmd_sq(const lk::RunConfig& cfg) {
    if (!cfg.samples_input) lk::fail(lk::ErrorKind::Config, "key 'samples': sq needs a samples dump");
    lk::ensure_writable(cfg.output_dir);
    const auto loaded = lk::load_samples(lk::read_file(*cfg.samples_input));
    const auto grid = lk::structure_factor(loaded.samples, loaded.lattice, cfg.plan.sq);
    const auto files = lk::write_sq(cfg.output_dir, lk::point_tag(loaded.jprime, loaded.h), grid);
    lk::write_manifest(cfg.output_dir, files);
    for (const auto& f : files) std::cout << (cfg.output_dir / f).string() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lksim: Ising sampling and structure factors on Lieb-kagome interpolated lattices"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");

    std::map<std::string, Subcommand> subs;
    const std::vector<std::pair<std::string, std::string>> names{
        {"lattice", "write the lattice (sites and bonds) to <output_dir>/lattice.txt"},
        {"sample", "run a single (jprime, h) point and dump its samples"},
        {"sweep", "run the full (jprime, h) grid"},
        {"sq", "structure factor from an existing samples dump (--samples FILE)"},
        {"verify", "run the built-in oracle suite (exact enumeration vs SA/SQA)"},
    };
    for (const auto& [name, help] : names) {
        auto& sub = subs[name];
        sub.app = app.add_subcommand(name, help);
        // -h would collide with the field flag --h.
        sub.app->set_help_flag("--help", "print this help and exit");
        add_key_options(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        for (auto& [name, sub] : subs) {
            if (!sub.app->parsed()) continue;
            const auto cfg = load_config(sub);
            if (name == "lattice") return cmd_lattice(cfg);
            if (name == "sample") return cmd_run(cfg, true);
            if (name == "sweep") return cmd_run(cfg, false);
            if (name == "sq") return cmd_sq(cfg);
            if (name == "verify") return lk::run_oracle_suite(std::cout, cfg.plan.engine.seed, cfg.workers) ? 0 : 1;
        }
    } catch (const lk::Error& e) {
        std::cerr << "error: " << lk::to_string(e.kind()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
