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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lk/config.hpp"
#include "lk/observables.hpp"
#include "lk/sweep.hpp"

namespace lk {

// "<jprime>_<h>" with shortest round-trip numbers, e.g. "0.35_0".
std::string point_tag(double jprime, double h);

// Header `jprime,h,mean_abs_m,stderr,reads`, one row per point, '\n' endings.
std::string magnetization_csv(const SweepResult& result);

// 16-bit big-endian binary PGM (P5, maxval 65535).  Pixel = round(65535 S / max S);
// row k of the image is raster row v = k.
std::string encode_pgm(const SqGrid& grid);

// Sidecar text with the scale (max S) and raster geometry of encode_pgm.
std::string sq_meta(const SqGrid& grid);

struct PgmImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint16_t> pixels;  // row-major
};

PgmImage decode_pgm(std::string_view bytes);

// Header comment with the lattice and model parameters, then one '+'/'-'
// string per read.
std::string samples_dump(const SampleSet& samples);

// Rebuilds the lattice and model from the header; energies are recomputed.
struct LoadedSamples {
    Lattice lattice;
    SampleSet samples;
    double jprime = 0.0;
    double h = 0.0;
};

LoadedSamples load_samples(std::string_view text);

std::string sha256_hex(std::string_view bytes);

// Writes `bytes` to dir/name; throws ErrorKind::Io naming the file.
void write_file(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

// Writes every requested output plus provenance.txt and manifest.txt, and
// returns the manifest entries (file names relative to the output directory).
std::vector<std::string> write_outputs(const SweepResult& result, const RunConfig& config);

// Writes sq_<tag>.pgm and its .meta; returns the two file names.
std::vector<std::string> write_sq(const std::filesystem::path& dir, const std::string& tag, const SqGrid& grid);

// `sha-256  filename` per line for the given files in dir.
void write_manifest(const std::filesystem::path& dir, std::vector<std::string> files);

// Re-hashes every file listed in dir/manifest.txt; false on any mismatch.
bool verify_manifest(const std::filesystem::path& dir);

} // namespace lk
