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

#include "lk/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "lk/error.hpp"
#include "lk/format.hpp"
#include "lk/parallel.hpp"

namespace lk {

const std::vector<ConfigKey>& config_keys() {
    static const std::vector<ConfigKey> keys{
        {"L", "8", "unit cells per side"},
        {"boundary", "corner", "open boundary shape: corner (3L^2+4L+1 sites) or edge ((L+1)(3L+5) sites)"},
        {"J", "0.6", "coupling on corner-edge bonds"},
        {"jprime", "0.3:1.7:0.05", "J' values: comma list or start:stop:step"},
        {"h", "0,0.1,0.2,0.3,0.45,0.6", "longitudinal field values: comma list or start:stop:step"},
        {"engine", "sa", "sampler: exact, sa or sqa"},
        {"reads", "1000", "reads per parameter point"},
        {"seed", "0", "base seed"},
        {"sweeps", "3000", "sa: Metropolis sweeps per read"},
        {"beta_min", "0.1", "sa: initial inverse temperature"},
        {"beta_max", "10", "sa: final inverse temperature"},
        {"random_order", "false", "sa/sqa: visit sites in a fresh random order each sweep"},
        {"trotter", "8", "sqa: Trotter slices"},
        {"gamma0", "3", "sqa: initial transverse field"},
        {"steps", "1000", "sqa: schedule steps (one sweep each)"},
        {"sqa_beta", "32", "sqa: inverse temperature of the replica system"},
        {"embed", "false", "run on 3-spin ferromagnetic chains and decode by majority vote"},
        {"jfm", "-2", "intra-chain coupling when embed=true"},
        {"outputs", "magnetization", "comma list of magnetization, structure_factor"},
        {"zone", "square", "structure factor zone: square or hexagonal"},
        {"resolution", "64", "structure factor raster size per axis (>= 8)"},
        {"shear", "1", "position frame for the hexagonal zone, 0..1"},
        {"ground_only", "false", "structure factor over minimum-energy reads only"},
        {"output_dir", "out", "directory for all output files"},
        {"dump_samples", "false", "write samples_<jprime>_<h>.txt per point"},
        {"workers", "1", "worker threads (0 = all hardware threads)"},
        {"verbosity", "0", "0 quiet, 1 per-point progress"},
        {"samples", "", "sq: samples dump to read"},
    };
    return keys;
}

namespace {

bool known_key(std::string_view key) {
    const auto& keys = config_keys();
    return std::any_of(keys.begin(), keys.end(), [&](const ConfigKey& k) { return k.name == key; });
}

[[noreturn]] void key_error(std::string_view key, const std::string& what) {
    fail(ErrorKind::Config, "key '" + std::string(key) + "': " + what);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double as_number(std::string_view key, std::string_view v) {
    auto x = parse_number(v);
    if (!x) key_error(key, "expected a number, got '" + std::string(v) + "'");
    return *x;
}

long as_integer(std::string_view key, std::string_view v) {
    long x = 0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, x);
    if (res.ec != std::errc{} || res.ptr != end) key_error(key, "expected an integer, got '" + std::string(v) + "'");
    return x;
}

std::uint64_t as_unsigned(std::string_view key, std::string_view v) {
    std::uint64_t x = 0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, x);
    if (res.ec != std::errc{} || res.ptr != end)
        key_error(key, "expected a nonnegative integer, got '" + std::string(v) + "'");
    return x;
}

bool as_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    key_error(key, "expected true or false, got '" + std::string(v) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::vector<double> as_list(std::string_view key, std::string_view v) {
    if (v.find(':') != std::string_view::npos) {
        const auto parts = split(v, ':');
        if (parts.size() != 3) key_error(key, "range must be start:stop:step, got '" + std::string(v) + "'");
        const double a = as_number(key, parts[0]), b = as_number(key, parts[1]), step = as_number(key, parts[2]);
        if (step <= 0.0 || b < a) key_error(key, "range needs step > 0 and stop >= start");
        return linear_range(a, b, step);
    }
    std::vector<double> out;
    for (auto part : split(v, ',')) out.push_back(as_number(key, trim(part)));
    return out;
}

} // namespace

KeyValues parse_key_values(std::string_view text) {
    KeyValues out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view rest = line;
        if (const auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
        // Collapse "key = a, b" into "key=a,b", then split on whitespace.
        std::string compact;
        auto joins = [](char c) { return c == '=' || c == ','; };
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (rest[k] == ' ' || rest[k] == '\t') {
                const auto next = rest.find_first_not_of(" \t", k);
                const bool glue = (next != std::string_view::npos && joins(rest[next])) ||
                                  (!compact.empty() && joins(compact.back()));
                if (glue) continue;
            }
            compact.push_back(rest[k]);
        }
        std::istringstream tokens(compact);
        std::string tok;
        while (tokens >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                fail(ErrorKind::Config, "line " + std::to_string(lineno) + ": expected key=value, got '" + tok + "'");
            auto key = tok.substr(0, eq);
            if (!known_key(key)) key_error(key, "unknown key");
            out.emplace_back(std::move(key), tok.substr(eq + 1));
        }
    }
    return out;
}

RunConfig build_config(const KeyValues& entries) {
    std::map<std::string, std::string, std::less<>> values;
    for (const auto& k : config_keys()) values[std::string(k.name)] = std::string(k.default_value);
    for (const auto& [k, v] : entries) {
        if (!known_key(k)) key_error(k, "unknown key");
        values[k] = v;
    }
    auto get = [&](std::string_view key) -> std::string_view { return values.find(key)->second; };

    RunConfig cfg;
    auto& plan = cfg.plan;
    const long cells = as_integer("L", get("L"));
    if (cells < 1 || cells > 4096) key_error("L", "must lie in 1..4096");
    plan.cells = static_cast<int>(cells);
    const auto boundary = parse_boundary(get("boundary"));
    if (!boundary) key_error("boundary", "expected corner or edge, got '" + std::string(get("boundary")) + "'");
    plan.boundary = *boundary;

    plan.J = as_number("J", get("J"));
    if (plan.J <= 0.0) key_error("J", "must be > 0");
    plan.jprimes = as_list("jprime", get("jprime"));
    if (plan.jprimes.empty()) key_error("jprime", "empty list");
    for (double jp : plan.jprimes)
        if (jp < 0.0) key_error("jprime", "values must be >= 0");
    plan.fields = as_list("h", get("h"));
    if (plan.fields.empty()) key_error("h", "empty list");

    const auto engine = parse_engine(get("engine"));
    if (!engine) key_error("engine", "expected exact, sa or sqa, got '" + std::string(get("engine")) + "'");
    auto& es = plan.engine;
    es.engine = *engine;
    const long reads = as_integer("reads", get("reads"));
    if (reads < 1) key_error("reads", "must be >= 1");
    es.reads = static_cast<int>(reads);
    es.seed = as_unsigned("seed", get("seed"));

    const long sweeps = as_integer("sweeps", get("sweeps"));
    if (sweeps < 1) key_error("sweeps", "must be >= 1");
    const double beta_min = as_number("beta_min", get("beta_min"));
    const double beta_max = as_number("beta_max", get("beta_max"));
    if (beta_min <= 0.0) key_error("beta_min", "must be > 0");
    if (beta_max < beta_min) key_error("beta_max", "must be >= beta_min");
    es.sa.schedule = BetaSchedule::geometric(beta_min, beta_max, static_cast<int>(sweeps));
    const bool random_order = as_bool("random_order", get("random_order"));
    es.sa.random_order = random_order;

    const long trotter = as_integer("trotter", get("trotter"));
    if (trotter < 2) key_error("trotter", "must be >= 2");
    const double gamma0 = as_number("gamma0", get("gamma0"));
    if (gamma0 < 0.0) key_error("gamma0", "must be >= 0");
    const long steps = as_integer("steps", get("steps"));
    if (steps < 1) key_error("steps", "must be >= 1");
    es.sqa.trotter = static_cast<int>(trotter);
    es.sqa.schedule = AnnealSchedule::linear(gamma0, static_cast<int>(steps));
    es.sqa.beta = as_number("sqa_beta", get("sqa_beta"));
    if (es.sqa.beta <= 0.0) key_error("sqa_beta", "must be > 0");
    es.sqa.random_order = random_order;

    es.embed = as_bool("embed", get("embed"));
    es.chain_coupling = as_number("jfm", get("jfm"));
    if (es.embed && es.chain_coupling >= 0.0) key_error("jfm", "must be < 0 (ferromagnetic)");

    plan.outputs = {false, false};
    for (auto part : split(get("outputs"), ',')) {
        part = trim(part);
        if (part == "magnetization") plan.outputs.magnetization = true;
        else if (part == "structure_factor") plan.outputs.structure_factor = true;
        else key_error("outputs", "unknown output '" + std::string(part) + "'");
    }

    const auto zone = parse_zone(get("zone"));
    if (!zone) key_error("zone", "expected square or hexagonal, got '" + std::string(get("zone")) + "'");
    plan.sq.zone = *zone;
    const long res = as_integer("resolution", get("resolution"));
    if (res < SqOptions::kMinResolution || res > 4096) key_error("resolution", "must lie in 8..4096");
    plan.sq.resolution = static_cast<int>(res);
    plan.sq.shear = as_number("shear", get("shear"));
    if (plan.sq.shear < 0.0 || plan.sq.shear > 1.0) key_error("shear", "must lie in [0, 1]");
    plan.sq.ground_only = as_bool("ground_only", get("ground_only"));

    cfg.output_dir = std::string(get("output_dir"));
    if (cfg.output_dir.empty()) key_error("output_dir", "must not be empty");
    cfg.dump_samples = as_bool("dump_samples", get("dump_samples"));
    plan.keep_samples = cfg.dump_samples;
    const long workers = as_integer("workers", get("workers"));
    if (workers < 0) key_error("workers", "must be >= 0");
    cfg.workers = workers == 0 ? default_workers() : static_cast<unsigned>(workers);
    es.workers = cfg.workers;
    plan.sq.workers = cfg.workers;
    cfg.verbosity = static_cast<int>(as_integer("verbosity", get("verbosity")));
    if (!get("samples").empty()) cfg.samples_input = std::string(get("samples"));

    try {
        plan.validate();
    } catch (const Error& e) {
        fail(ErrorKind::Config, e.what());
    }
    return cfg;
}

void ensure_writable(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorKind::Io, "cannot create output directory '" + dir.string() + "': " + ec.message());
    const auto probe = dir / ".write_probe";
    {
        std::ofstream out(probe);
        if (!out) fail(ErrorKind::Io, "output directory '" + dir.string() + "' is not writable");
    }
    std::filesystem::remove(probe, ec);
}

} // namespace lk
