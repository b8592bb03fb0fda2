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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "lk/config.hpp"
#include "lk/error.hpp"
#include "lk/io.hpp"
#include "oracles.hpp"

using namespace lk;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("lk_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

SweepResult tiny_result(bool sq, bool keep) {
    SweepPlan plan;
    plan.cells = 1;
    plan.jprimes = {0.8, 0.3};
    plan.fields = {0.1, 0.0};
    plan.engine.reads = 5;
    plan.engine.sa.schedule = BetaSchedule::geometric(0.1, 10.0, 50);
    plan.outputs.structure_factor = sq;
    plan.sq.resolution = 8;
    plan.keep_samples = keep;
    return run_sweep(plan);
}

} // namespace

TEST_SUITE("config_io") {

TEST_CASE("defaults") {
    const auto cfg = parse_config("");
    CHECK(cfg.plan.cells == 8);
    CHECK(cfg.plan.boundary == Boundary::Corner);
    CHECK(cfg.plan.J == 0.6);
    CHECK(cfg.plan.jprimes.size() == 29);
    CHECK(cfg.plan.fields == default_field_grid());
    CHECK(cfg.plan.engine.engine == Engine::SA);
    CHECK(cfg.plan.engine.reads == 1000);
    CHECK(cfg.plan.engine.sa.schedule.sweeps() == SaOptions::kDefaultSweeps);
    CHECK(cfg.plan.engine.sqa.trotter == 8);
    CHECK(cfg.plan.engine.sqa.schedule.gamma0() == 3.0);
    CHECK(cfg.plan.outputs.magnetization);
    CHECK_FALSE(cfg.plan.outputs.structure_factor);
    CHECK(cfg.plan.sq.resolution == 64);
    CHECK(cfg.output_dir == "out");
    CHECK_FALSE(cfg.samples_input.has_value());
}

TEST_CASE("key=value mapping") {
    const auto cfg = parse_config("jprime=0.6 h=0.3 L=8 engine=sa reads=500");
    CHECK(cfg.plan.jprimes == std::vector<double>{0.6});
    CHECK(cfg.plan.fields == std::vector<double>{0.3});
    CHECK(cfg.plan.cells == 8);
    CHECK(cfg.plan.engine.engine == Engine::SA);
    CHECK(cfg.plan.engine.reads == 500);
}

TEST_CASE("file syntax with comments, spacing and ranges") {
    const auto cfg = parse_config(
        "# run card\n"
        "L = 4   # cells\n"
        "boundary=edge\n"
        "jprime = 0.3:0.5:0.1\n"
        "h = 0, 0.15\n"
        "outputs = magnetization,structure_factor\n"
        "zone = hexagonal\n"
        "engine = sqa trotter=4\n");
    CHECK(cfg.plan.cells == 4);
    CHECK(cfg.plan.boundary == Boundary::Edge);
    CHECK(cfg.plan.jprimes == std::vector<double>{0.3, 0.4, 0.5});
    CHECK(cfg.plan.fields == std::vector<double>{0.0, 0.15});
    CHECK(cfg.plan.outputs.structure_factor);
    CHECK(cfg.plan.sq.zone == Zone::Hexagonal);
    CHECK(cfg.plan.engine.engine == Engine::SQA);
    CHECK(cfg.plan.engine.sqa.trotter == 4);
}

TEST_CASE("later entries override earlier ones") {
    auto kv = parse_key_values("reads=10 seed=3");
    kv.emplace_back("reads", "20");
    const auto cfg = build_config(kv);
    CHECK(cfg.plan.engine.reads == 20);
    CHECK(cfg.plan.engine.seed == 3);
}

TEST_CASE("errors name the offending key") {
    for (const char* text : {"jprime=abc", "reads=0", "engine=qpu", "zone=round", "shear=2", "L=x", "jfm=1 embed=true",
                             "outputs=nothing", "h=0,0"}) {
        CAPTURE(text);
        try {
            parse_config(text);
            FAIL("expected a config error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Config);
        }
    }
    try {
        parse_config("jprime=abc");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("'jprime'") != std::string::npos);
    }
    try {
        parse_config("colour=blue");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
        CHECK(std::string(e.what()).find("colour") != std::string::npos);
    }
    CHECK(kind_of([] { parse_key_values("justaword"); }) == ErrorKind::Config);
}

TEST_CASE("every key has a default that parses") {
    KeyValues kv;
    for (const auto& k : config_keys()) kv.emplace_back(std::string(k.name), std::string(k.default_value));
    CHECK_NOTHROW(build_config(kv));
}

TEST_CASE("csv rows follow the sorted sweep") {
    const auto csv = magnetization_csv(tiny_result(false, false));
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "jprime,h,mean_abs_m,stderr,reads");
    CHECK(lines[1].rfind("0.3,0,", 0) == 0);
    CHECK(lines[2].rfind("0.3,0.1,", 0) == 0);
    CHECK(lines[4].rfind("0.8,0.1,", 0) == 0);
    CHECK(lines[4].substr(lines[4].size() - 2) == ",5");
}

TEST_CASE("pgm encodes the peak at (pi, pi) for Neel samples") {
    const auto lat = build_lattice(3, Boundary::Edge);
    const auto model = SpinModel::from_lattice(lat, 0.6, 0.3, 0.0);
    SampleSet set(model, "test", "none");
    set.add(model, oracle::neel(lat), 0);
    const auto grid = structure_factor(set, lat);
    const auto img = decode_pgm(encode_pgm(grid));
    CHECK(img.width == 64);
    CHECK(img.height == 64);
    const auto peak = std::max_element(img.pixels.begin(), img.pixels.end());
    CHECK(*peak == 65535);
    CHECK(img.pixels[grid.at(48, 48)] == 65535);
    CHECK(img.pixels[grid.at(16, 48)] == 65535);
    // Round trip within one quantisation step.
    for (std::size_t k = 0; k < img.pixels.size(); k += 97)
        CHECK(std::abs(img.pixels[k] / 65535.0 * grid.max() - grid.intensity[k]) <= grid.max() / 65535.0);
    const auto meta = sq_meta(grid);
    CHECK(meta.find("resolution=64\n") != std::string::npos);
    CHECK(meta.find("rows=v_ascending") != std::string::npos);
    CHECK(kind_of([] { decode_pgm("P2\n1 1\n255\n0"); }) == ErrorKind::Io);
}

TEST_CASE("sha256 known answer") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("outputs, manifest and tamper detection") {
    const auto dir = scratch("outputs");
    RunConfig cfg;
    cfg.output_dir = dir;
    cfg.dump_samples = true;
    cfg.plan.outputs.structure_factor = true;
    const auto files = write_outputs(tiny_result(true, true), cfg);
    CHECK(std::find(files.begin(), files.end(), "magnetization.csv") != files.end());
    CHECK(std::find(files.begin(), files.end(), "sq_0.3_0.1.pgm") != files.end());
    CHECK(std::find(files.begin(), files.end(), "sq_0.8_0.meta") != files.end());
    CHECK(std::find(files.begin(), files.end(), "samples_0.8_0.1.txt") != files.end());
    CHECK(fs::exists(dir / "provenance.txt"));
    CHECK(verify_manifest(dir));
    write_file(dir / "magnetization.csv", "tampered\n");
    CHECK_FALSE(verify_manifest(dir));
    fs::remove_all(dir);
}

TEST_CASE("samples dump round trip") {
    const auto result = tiny_result(false, true);
    const auto& original = *result.at(0.8, 0.1).samples;
    const auto loaded = load_samples(samples_dump(original));
    CHECK(loaded.jprime == 0.8);
    CHECK(loaded.h == 0.1);
    CHECK(loaded.lattice.size() == original.sites());
    REQUIRE(loaded.samples.size() == original.size());
    for (std::size_t r = 0; r < original.size(); ++r) {
        CHECK(loaded.samples[r].config == original[r].config);
        CHECK(loaded.samples[r].energy == original[r].energy);
    }
    CHECK(kind_of([] { load_samples("no header\n"); }) == ErrorKind::Io);
    CHECK(kind_of([] {
              load_samples("# samples L=1 boundary=corner J=0.6 jprime=0.3 h=0 engine=sa sites=8 reads=1\n+-+\n");
          }) == ErrorKind::Io);
}

TEST_CASE("unwritable output directory") {
    const auto dir = scratch("blocked");
    write_file(dir / "file", "x");
    CHECK(kind_of([&] { ensure_writable(dir / "file" / "sub"); }) == ErrorKind::Io);
    CHECK(kind_of([&] { read_file(dir / "missing"); }) == ErrorKind::Io);
    fs::remove_all(dir);
}

}
