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

#include "lk/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lk/error.hpp"

namespace lk {

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> knots) : knots_(std::move(knots)) {
    require(knots_.size() >= 2, "schedule: a profile needs at least two knots");
    require(knots_.front().first == 0.0 && knots_.back().first == 1.0, "schedule: profile knots must span s = 0..1");
    for (std::size_t k = 1; k < knots_.size(); ++k)
        require(knots_[k].first > knots_[k - 1].first, "schedule: profile knots must be strictly increasing in s");
}

double PiecewiseLinear::operator()(double s) const {
    if (s <= 0.0) return knots_.front().second;
    if (s >= 1.0) return knots_.back().second;
    auto hi = std::upper_bound(knots_.begin(), knots_.end(), s,
                               [](double v, const auto& knot) { return v < knot.first; });
    auto lo = hi - 1;
    const double t = (s - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
}

bool PiecewiseLinear::nondecreasing() const {
    return std::is_sorted(knots_.begin(), knots_.end(),
                          [](const auto& a, const auto& b) { return a.second < b.second; });
}

bool PiecewiseLinear::nonincreasing() const {
    return std::is_sorted(knots_.begin(), knots_.end(),
                          [](const auto& a, const auto& b) { return a.second > b.second; });
}

AnnealSchedule AnnealSchedule::linear(double gamma0, int steps) {
    return AnnealSchedule(gamma0, PiecewiseLinear({{0.0, 0.0}, {1.0, 1.0}}),
                          PiecewiseLinear({{0.0, 1.0}, {1.0, 0.0}}), steps);
}

AnnealSchedule::AnnealSchedule(double gamma0, PiecewiseLinear classical, PiecewiseLinear transverse, int steps)
    : gamma0_(gamma0), classical_(std::move(classical)), transverse_(std::move(transverse)), steps_(steps) {
    require(gamma0_ >= 0.0 && std::isfinite(gamma0_), "schedule: gamma0 must be finite and >= 0");
    require(steps_ >= 1, "schedule: steps must be >= 1");
    require(classical_.knots().front().second == 0.0, "schedule: classical scale must vanish at s = 0");
    require(classical_.nondecreasing(), "schedule: classical scale must be nondecreasing");
    require(transverse_.knots().front().second == 1.0, "schedule: transverse profile must start at 1");
    require(transverse_.knots().back().second == 0.0, "schedule: transverse profile must end at exactly 0");
    require(transverse_.nonincreasing(), "schedule: transverse profile must be nonincreasing");
}

double AnnealSchedule::s_at(int step) const {
    if (steps_ == 1) return 1.0;
    return static_cast<double>(step) / static_cast<double>(steps_ - 1);
}

std::string AnnealSchedule::describe() const {
    std::ostringstream out;
    out << "gamma0=" << gamma0_ << ";steps=" << steps_ << ";A=";
    for (const auto& [s, v] : classical_.knots()) out << '(' << s << ',' << v << ')';
    out << ";G=";
    for (const auto& [s, v] : transverse_.knots()) out << '(' << s << ',' << v << ')';
    return out.str();
}

BetaSchedule::BetaSchedule(std::vector<double> betas) : betas_(std::move(betas)) {
    require(!betas_.empty(), "beta schedule: at least one sweep is required");
    for (double b : betas_) require(b > 0.0 && std::isfinite(b), "beta schedule: every beta must be positive");
    require(std::is_sorted(betas_.begin(), betas_.end()), "beta schedule: betas must be nondecreasing");
}

BetaSchedule BetaSchedule::geometric(double beta_min, double beta_max, int sweeps) {
    require(sweeps >= 1, "beta schedule: sweeps must be >= 1");
    require(beta_min > 0.0 && beta_max >= beta_min, "beta schedule: need 0 < beta_min <= beta_max");
    std::vector<double> betas(static_cast<std::size_t>(sweeps));
    if (sweeps == 1) {
        betas[0] = beta_max;
    } else {
        const double ratio = std::log(beta_max / beta_min);
        for (int k = 0; k < sweeps; ++k)
            betas[static_cast<std::size_t>(k)] = beta_min * std::exp(ratio * k / (sweeps - 1));
        betas.back() = beta_max;
    }
    return BetaSchedule(std::move(betas));
}

BetaSchedule BetaSchedule::constant(double beta, int sweeps) {
    require(sweeps >= 1, "beta schedule: sweeps must be >= 1");
    return BetaSchedule(std::vector<double>(static_cast<std::size_t>(sweeps), beta));
}

std::string BetaSchedule::describe() const {
    std::ostringstream out;
    out << "sweeps=" << betas_.size() << ";beta=" << betas_.front() << ".." << betas_.back();
    return out.str();
}

} // namespace lk
