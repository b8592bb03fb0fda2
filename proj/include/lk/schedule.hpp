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

#include <string>
#include <utility>
#include <vector>

namespace lk {

// Piecewise-linear function on [0, 1] given by (s, value) knots with
// strictly increasing s, first knot at 0 and last at 1.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;
    explicit PiecewiseLinear(std::vector<std::pair<double, double>> knots);

    double operator()(double s) const;
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }
    bool nondecreasing() const;
    bool nonincreasing() const;

private:
    std::vector<std::pair<double, double>> knots_;
};

// Classical scale A(s) and transverse scale Gamma(s) = gamma0 * G(s).
// A(0) = 0, A nondecreasing; G(0) = 1, G(1) = 0, G nonincreasing.
class AnnealSchedule {
public:
    static constexpr double kDefaultGamma0 = 3.0;
    static constexpr int kDefaultSteps = 1000;

    // A(s) = s, Gamma(s) = gamma0 (1 - s).
    static AnnealSchedule linear(double gamma0 = kDefaultGamma0, int steps = kDefaultSteps);

    AnnealSchedule(double gamma0, PiecewiseLinear classical, PiecewiseLinear transverse, int steps);

    double gamma0() const { return gamma0_; }
    int steps() const { return steps_; }
    double classical(double s) const { return classical_(s); }
    double transverse(double s) const { return gamma0_ * transverse_(s); }

    // s at step t of steps(); runs from 0 to exactly 1.
    double s_at(int step) const;

    std::string describe() const;

private:
    double gamma0_;
    PiecewiseLinear classical_;
    PiecewiseLinear transverse_;
    int steps_;
};

// Inverse temperatures, one per Metropolis sweep.
class BetaSchedule {
public:
    static constexpr double kDefaultMin = 0.1;
    static constexpr double kDefaultMax = 10.0;

    // Positive and nondecreasing, or the constructor throws.
    explicit BetaSchedule(std::vector<double> betas);

    static BetaSchedule geometric(double beta_min, double beta_max, int sweeps);
    static BetaSchedule constant(double beta, int sweeps);

    const std::vector<double>& betas() const { return betas_; }
    int sweeps() const { return static_cast<int>(betas_.size()); }
    std::string describe() const;

private:
    std::vector<double> betas_;
};

} // namespace lk
