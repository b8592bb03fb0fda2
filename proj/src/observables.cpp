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

#include "lk/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lk/error.hpp"
#include "lk/parallel.hpp"

namespace lk {

MagnetizationStat magnetization(const SampleSet& samples) {
    require(!samples.empty(), "magnetization: empty sample set");
    const auto n = static_cast<double>(samples.sites());
    std::vector<double> values;
    values.reserve(samples.size());
    for (const auto& s : samples.samples()) {
        int total = 0;
        for (auto v : s.config.spins()) total += v;
        values.push_back(std::abs(static_cast<double>(total)) / n);
    }
    const auto reads = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= reads;
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    MagnetizationStat stat;
    stat.mean = mean;
    stat.reads = values.size();
    stat.std_error = values.size() > 1 ? std::sqrt(var / (reads - 1.0)) / std::sqrt(reads) : 0.0;
    return stat;
}

double correlation(const SampleSet& samples, std::size_t i, std::size_t j) {
    require(!samples.empty(), "correlation: empty sample set");
    require(i < samples.sites() && j < samples.sites(), "correlation: site index out of range");
    long total = 0;
    for (const auto& s : samples.samples()) total += s.config[i] * s.config[j];
    return static_cast<double>(total) / static_cast<double>(samples.size());
}

std::string_view to_string(Zone zone) { return zone == Zone::Square ? "square" : "hexagonal"; }

std::optional<Zone> parse_zone(std::string_view text) {
    if (text == "square") return Zone::Square;
    if (text == "hexagonal") return Zone::Hexagonal;
    return std::nullopt;
}

double SqGrid::raster(int index) const {
    const double step = 4.0 * std::numbers::pi / resolution;
    return static_cast<double>(index - resolution / 2) * step;
}

std::pair<int, int> SqGrid::nearest(double u, double v) const {
    const double step = 4.0 * std::numbers::pi / resolution;
    auto idx = [&](double x) {
        const auto k = static_cast<int>(std::lround(x / step)) + resolution / 2;
        return std::clamp(k, 0, resolution - 1);
    };
    return {idx(u), idx(v)};
}

double SqGrid::max() const { return *std::max_element(intensity.begin(), intensity.end()); }

double SqGrid::mean() const {
    double total = 0.0;
    for (double v : intensity) total += v;
    return total / static_cast<double>(intensity.size());
}

namespace {

double sq_point(const std::vector<double>& spins, std::size_t reads, std::size_t n, const std::vector<Vec2>& pos,
                Vec2 q, std::vector<double>& c, std::vector<double>& s) {
    for (std::size_t i = 0; i < n; ++i) {
        const double phase = q[0] * pos[i][0] + q[1] * pos[i][1];
        c[i] = std::cos(phase);
        s[i] = std::sin(phase);
    }
    double total = 0.0;
    for (std::size_t r = 0; r < reads; ++r) {
        const double* sp = spins.data() + r * n;
        double re = 0.0;
        double im = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            re += sp[i] * c[i];
            im -= sp[i] * s[i];
        }
        total += re * re + im * im;
    }
    return total / (static_cast<double>(n) * static_cast<double>(reads));
}

std::vector<double> spins_as_doubles(const SampleSet& samples) {
    std::vector<double> out;
    out.reserve(samples.size() * samples.sites());
    for (const auto& s : samples.samples())
        for (auto v : s.config.spins()) out.push_back(v);
    return out;
}

} // namespace

SqGrid structure_factor(const SampleSet& samples, const Lattice& lattice, const SqOptions& options) {
    require(!samples.empty(), "structure_factor: empty sample set");
    require(samples.sites() == lattice.size(), "structure_factor: sample size does not match lattice");
    require(options.resolution >= SqOptions::kMinResolution,
            "structure_factor: resolution must be >= " + std::to_string(SqOptions::kMinResolution));
    require(options.zone == Zone::Square || options.zone == Zone::Hexagonal, "structure_factor: invalid zone");

    const SampleSet used = options.ground_only ? samples.lowest_energy() : samples;
    const auto frame = options.zone == Zone::Square ? std::array<double, 4>{1.0, 0.0, 0.0, 1.0}
                                                    : shear_matrix(options.shear);
    const auto positions = options.zone == Zone::Square ? lattice.positions_square()
                                                        : kagome_positions(lattice, options.shear);

    SqGrid grid;
    grid.zone = options.zone;
    grid.resolution = options.resolution;
    grid.shear = options.zone == Zone::Square ? 0.0 : options.shear;
    grid.sites = lattice.size();
    grid.reads = used.size();
    const auto res = static_cast<std::size_t>(options.resolution);
    grid.qx.resize(res * res);
    grid.qy.resize(res * res);
    grid.intensity.resize(res * res);
    // q = M^{-T} (u, v) for upper-triangular M = [[a, b], [0, d]].
    const double a = frame[0], b = frame[1], d = frame[3];
    for (int vi = 0; vi < options.resolution; ++vi) {
        for (int ui = 0; ui < options.resolution; ++ui) {
            const double u = grid.raster(ui);
            const double v = grid.raster(vi);
            const auto k = grid.at(ui, vi);
            grid.qx[k] = u / a;
            grid.qy[k] = (a * v - b * u) / (a * d);
        }
    }

    const auto spins = spins_as_doubles(used);
    const std::size_t n = lattice.size();
    parallel_for(res, options.workers, [&](std::size_t row) {
        std::vector<double> c(n), s(n);
        for (std::size_t col = 0; col < res; ++col) {
            const auto k = row * res + col;
            grid.intensity[k] = sq_point(spins, used.size(), n, positions, {grid.qx[k], grid.qy[k]}, c, s);
        }
    });
    return grid;
}

double structure_factor_at(const SampleSet& samples, const std::vector<Vec2>& positions, Vec2 q) {
    require(!samples.empty(), "structure_factor: empty sample set");
    require(samples.sites() == positions.size(), "structure_factor: sample size does not match positions");
    const std::size_t n = positions.size();
    std::vector<double> c(n), s(n);
    return sq_point(spins_as_doubles(samples), samples.size(), n, positions, q, c, s);
}

} // namespace lk
