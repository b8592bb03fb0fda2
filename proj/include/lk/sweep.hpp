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
#include <optional>
#include <string>
#include <vector>

#include "lk/lattice.hpp"
#include "lk/observables.hpp"
#include "lk/samplers.hpp"

namespace lk {

struct SweepOutputs {
    bool magnetization = true;
    bool structure_factor = false;
};

std::vector<double> default_jprime_grid();
std::vector<double> default_field_grid();

// A (J', h) grid over one lattice.  engine.seed is the base seed.
struct SweepPlan {
    int cells = 8;
    Boundary boundary = Boundary::Corner;
    double J = 0.6;
    std::vector<double> jprimes = default_jprime_grid();
    std::vector<double> fields = default_field_grid();
    EngineSpec engine;
    SweepOutputs outputs;
    SqOptions sq;
    bool keep_samples = false;

    // Throws ErrorKind::InvalidArgument naming the offending field.
    void validate() const;
    std::string describe() const;
};

struct PointResult {
    double jprime = 0.0;
    double h = 0.0;
    std::uint64_t seed = 0;
    MagnetizationStat magnetization;
    std::optional<SqGrid> sq;
    std::optional<SampleSet> samples;
};

struct Provenance {
    std::string plan;
    std::string started;
    std::string finished;
    std::string version;
};

struct SweepResult {
    std::vector<PointResult> points;  // sorted by (J', h)
    Provenance provenance;

    const PointResult& at(double jprime, double h) const;
};

// Depends only on the base seed and the point's own (J', h) values, so adding
// or removing other points never changes a point's samples.
std::uint64_t point_seed(std::uint64_t base, double jprime, double h);

PointResult run_point(const Lattice& lattice, const SweepPlan& plan, double jprime, double h);

SweepResult run_sweep(const SweepPlan& plan);

struct FieldPoint {
    double h = 0.0;
    MagnetizationStat magnetization;
};

// <|m|> against h for a plan with exactly one J'; ordered by h.
std::vector<FieldPoint> field_curve(const SweepPlan& plan);

} // namespace lk
