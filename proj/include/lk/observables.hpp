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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lk/lattice.hpp"
#include "lk/samplers.hpp"

namespace lk {

struct MagnetizationStat {
    double mean = 0.0;       // <|m|>, m = (1/N) sum_i s_i
    double std_error = 0.0;  // sample standard deviation / sqrt(reads)
    std::size_t reads = 0;
};

MagnetizationStat magnetization(const SampleSet& samples);

// Mean of s_i s_j over reads.
double correlation(const SampleSet& samples, std::size_t i, std::size_t j);

enum class Zone { Square, Hexagonal };

std::string_view to_string(Zone zone);
std::optional<Zone> parse_zone(std::string_view text);

struct SqOptions {
    static constexpr int kDefaultResolution = 64;
    static constexpr int kMinResolution = 8;

    Zone zone = Zone::Square;
    int resolution = kDefaultResolution;
    // Frame for the hexagonal zone; the square zone always uses grid positions.
    double shear = 1.0;
    // Average only over the reads at the minimum sampled energy.
    bool ground_only = false;
    unsigned workers = 1;
};

// Structure factor on a res x res raster.  The raster coordinates (u, v)
// run over [-2 pi, 2 pi) in steps of 4 pi / res, with index res/2 at 0.  The
// physical wave vector is q = M^{-T} (u, v), where M is the position frame
// (identity for the square zone, shear_matrix(shear) for the hexagonal
// zone), so q . r equals (u, v) . (grid coordinates) in every frame.
struct SqGrid {
    Zone zone = Zone::Square;
    int resolution = 0;
    double shear = 0.0;
    std::size_t sites = 0;
    std::size_t reads = 0;
    std::vector<double> qx;         // row-major, row = v index
    std::vector<double> qy;
    std::vector<double> intensity;  // S(q) >= 0

    double raster(int index) const;
    std::size_t at(int u_index, int v_index) const {
        return static_cast<std::size_t>(v_index) * static_cast<std::size_t>(resolution) +
               static_cast<std::size_t>(u_index);
    }
    // Raster index pair nearest to a target raster coordinate (u, v).
    std::pair<int, int> nearest(double u, double v) const;
    double max() const;
    double mean() const;
};

// S(q) = (1/N) |sum_i s_i exp(-i q . r_i)|^2 averaged over reads.
SqGrid structure_factor(const SampleSet& samples, const Lattice& lattice, const SqOptions& options = {});

// Same S(q) for a single point q with explicit positions.
double structure_factor_at(const SampleSet& samples, const std::vector<Vec2>& positions, Vec2 q);

} // namespace lk
