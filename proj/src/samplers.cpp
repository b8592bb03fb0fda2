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

#include "lk/samplers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "lk/error.hpp"
#include "lk/parallel.hpp"
#include "lk/rng.hpp"

namespace lk {

std::string_view to_string(Engine engine) {
    switch (engine) {
    case Engine::Exact: return "exact";
    case Engine::SA: return "sa";
    case Engine::SQA: return "sqa";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view text) {
    if (text == "exact") return Engine::Exact;
    if (text == "sa") return Engine::SA;
    if (text == "sqa") return Engine::SQA;
    return std::nullopt;
}

SampleSet::SampleSet(const SpinModel& model, std::string engine, std::string schedule)
    : sites_(model.size()), engine_(std::move(engine)), schedule_(std::move(schedule)),
      params_(model.lattice_params()) {}

void SampleSet::add(const SpinModel& model, SpinConfig config, std::uint64_t seed,
                    std::optional<std::size_t> chain_breaks) {
    require(model.size() == sites_, "sample set: model size does not match");
    const double e = model.energy(config);
    samples_.push_back({std::move(config), e, seed, chain_breaks});
}

double SampleSet::min_energy() const {
    require(!samples_.empty(), "sample set: empty");
    double e = std::numeric_limits<double>::infinity();
    for (const auto& s : samples_) e = std::min(e, s.energy);
    return e;
}

std::optional<double> SampleSet::chain_break_rate() const {
    if (samples_.empty() || !samples_.front().chain_breaks) return std::nullopt;
    double broken = 0.0;
    for (const auto& s : samples_) broken += static_cast<double>(s.chain_breaks.value_or(0));
    return broken / (static_cast<double>(samples_.size()) * static_cast<double>(sites_));
}

SampleSet SampleSet::lowest_energy(double tol) const {
    SampleSet out = *this;
    out.samples_.clear();
    const double e0 = min_energy();
    for (const auto& s : samples_)
        if (s.energy <= e0 + tol) out.samples_.push_back(s);
    return out;
}

bool operator==(const SampleSet& a, const SampleSet& b) {
    if (a.sites_ != b.sites_ || a.engine_ != b.engine_ || a.schedule_ != b.schedule_ || a.size() != b.size())
        return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        const auto& x = a.samples_[r];
        const auto& y = b.samples_[r];
        if (x.config != y.config || x.energy != y.energy || x.seed != y.seed || x.chain_breaks != y.chain_breaks)
            return false;
    }
    return true;
}

namespace {

SpinConfig config_from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<Spin> spins(n);
    for (std::size_t k = 0; k < n; ++k) spins[k] = ((mask >> k) & 1U) ? Spin{-1} : Spin{1};
    return SpinConfig(std::move(spins));
}

double energy_scale(const SpinModel& model) {
    double scale = 1.0;
    for (const auto& c : model.couplings()) scale += std::abs(c.value);
    for (double h : model.fields()) scale += std::abs(h);
    return scale;
}

} // namespace

GroundStates exact_ground(const SpinModel& model) {
    const std::size_t n = model.size();
    if (n > kMaxExactSites)
        fail(ErrorKind::Size, "exact_ground: " + std::to_string(n) + " sites exceeds the enumeration bound of " +
                                  std::to_string(kMaxExactSites));

    const double tol = 1e-9 * energy_scale(model);
    std::vector<Spin> spins(n, Spin{1});
    double e = model.energy(std::span<const Spin>(spins));
    double best = e;
    std::vector<std::uint64_t> masks{0};
    std::uint64_t mask = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const auto i = static_cast<std::size_t>(std::countr_zero(k));
        e -= 2.0 * spins[i] * model.local_field_unchecked(spins, i);
        spins[i] = static_cast<Spin>(-spins[i]);
        mask ^= std::uint64_t{1} << i;
        // Resync periodically so rounding cannot drift across 2^26 updates.
        if ((k & 0xFFFF) == 0) e = model.energy(std::span<const Spin>(spins));
        if (e < best - tol) {
            best = e;
            masks.assign(1, mask);
        } else if (e <= best + tol) {
            masks.push_back(mask);
        }
    }

    std::vector<std::pair<double, std::uint64_t>> exact;
    exact.reserve(masks.size());
    for (auto m : masks) exact.emplace_back(model.energy(config_from_mask(m, n)), m);
    double e0 = std::numeric_limits<double>::infinity();
    for (const auto& [en, m] : exact) e0 = std::min(e0, en);

    GroundStates out;
    out.energy = e0;
    std::vector<std::uint64_t> kept;
    for (const auto& [en, m] : exact)
        if (en <= e0 + tol) kept.push_back(m);
    std::sort(kept.begin(), kept.end());
    out.configs.reserve(kept.size());
    for (auto m : kept) out.configs.push_back(config_from_mask(m, n));
    return out;
}

namespace {

std::vector<Spin> random_spins(std::size_t n, Xoshiro256& rng) {
    std::vector<Spin> spins(n);
    for (auto& s : spins) s = rng.spin();
    return spins;
}

void shuffle(std::vector<std::uint32_t>& order, Xoshiro256& rng) {
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
}

std::vector<std::uint32_t> identity_order(std::size_t n) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    return order;
}

// exp(-beta * delta) memoised on the bit pattern of delta.  Lattice models
// produce only a handful of distinct energy changes per temperature.
class BoltzmannCache {
public:
    void set_beta(double beta) {
        if (beta == beta_) return;
        beta_ = beta;
        for (auto& e : entries_) e.valid = false;
    }

    double factor(double delta) {
        const auto bits = std::bit_cast<std::uint64_t>(delta);
        auto& e = entries_[(bits ^ (bits >> 29) ^ (bits >> 47)) & (kSize - 1)];
        if (!e.valid || e.bits != bits) {
            e = {bits, std::exp(-beta_ * delta), true};
        }
        return e.value;
    }

private:
    static constexpr std::size_t kSize = 64;
    struct Entry {
        std::uint64_t bits = 0;
        double value = 0.0;
        bool valid = false;
    };
    double beta_ = -1.0;
    std::array<Entry, kSize> entries_{};
};

bool metropolis_accept(double delta, BoltzmannCache& cache, Xoshiro256& rng) {
    return delta <= 0.0 || rng.uniform() < cache.factor(delta);
}

SpinConfig anneal_one(const SpinModel& model, const SaOptions& options, Xoshiro256 rng) {
    const std::size_t n = model.size();
    auto spins = random_spins(n, rng);
    auto order = identity_order(n);
    BoltzmannCache cache;
    for (double beta : options.schedule.betas()) {
        cache.set_beta(beta);
        if (options.random_order) shuffle(order, rng);
        for (auto i : order) {
            const double delta = -2.0 * spins[i] * model.local_field_unchecked(spins, i);
            if (metropolis_accept(delta, cache, rng)) spins[i] = static_cast<Spin>(-spins[i]);
        }
    }
    return SpinConfig(std::move(spins));
}

SpinConfig quantum_anneal_one(const SpinModel& model, const SqaOptions& options, Xoshiro256 rng) {
    const std::size_t n = model.size();
    const auto trotter = static_cast<std::size_t>(options.trotter);
    const double beta = options.beta;
    // replicas[k] holds slice k; slices k-1 and k+1 wrap around.
    std::vector<std::vector<Spin>> replicas(trotter);
    for (auto& r : replicas) r = random_spins(n, rng);
    auto order = identity_order(n);
    BoltzmannCache cache;
    cache.set_beta(beta);

    const auto& sched = options.schedule;
    for (int step = 0; step < sched.steps(); ++step) {
        const double s = sched.s_at(step);
        const double scale = sched.classical(s) / static_cast<double>(trotter);
        const double jperp = replica_coupling(beta, sched.transverse(s), options.trotter);
        for (std::size_t k = 0; k < trotter; ++k) {
            auto& cur = replicas[k];
            const auto& prev = replicas[(k + trotter - 1) % trotter];
            const auto& next = replicas[(k + 1) % trotter];
            if (options.random_order) shuffle(order, rng);
            for (auto i : order) {
                const double field = scale * model.local_field_unchecked(cur, i) - jperp * (prev[i] + next[i]);
                const double delta = -2.0 * cur[i] * field;
                if (metropolis_accept(delta, cache, rng)) cur[i] = static_cast<Spin>(-cur[i]);
            }
        }
    }

    std::size_t best = 0;
    double best_energy = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < trotter; ++k) {
        const double e = model.energy(std::span<const Spin>(replicas[k]));
        if (e < best_energy) {
            best_energy = e;
            best = k;
        }
    }
    return SpinConfig(std::move(replicas[best]));
}

template <typename RunOne>
std::vector<SpinConfig> run_reads(int reads, std::uint64_t seed, unsigned workers, RunOne&& run_one) {
    std::vector<SpinConfig> out(static_cast<std::size_t>(reads));
    parallel_for(out.size(), workers, [&](std::size_t r) { out[r] = run_one(Xoshiro256::stream(seed, r)); });
    return out;
}

} // namespace

double replica_coupling(double beta, double gamma, int trotter) {
    const double arg = std::max(beta * gamma / static_cast<double>(trotter), SqaOptions::kMinTanhArgument);
    return -std::log(std::tanh(arg)) / (2.0 * beta);
}

SampleSet simulated_anneal(const SpinModel& model, int reads, const SaOptions& options, std::uint64_t seed,
                           unsigned workers) {
    require(reads >= 1, "simulated_anneal: reads must be >= 1");
    auto configs = run_reads(reads, seed, workers, [&](Xoshiro256 rng) { return anneal_one(model, options, rng); });
    SampleSet set(model, "sa", options.schedule.describe() + (options.random_order ? ";order=random" : ""));
    for (std::size_t r = 0; r < configs.size(); ++r) set.add(model, std::move(configs[r]), derive_seed(seed, r));
    return set;
}

SampleSet simulated_quantum_anneal(const SpinModel& model, int reads, const SqaOptions& options,
                                   std::uint64_t seed, unsigned workers) {
    require(reads >= 1, "simulated_quantum_anneal: reads must be >= 1");
    require(options.trotter >= 2, "simulated_quantum_anneal: trotter slices must be >= 2");
    require(options.beta > 0.0 && std::isfinite(options.beta), "simulated_quantum_anneal: beta must be positive");
    auto configs =
        run_reads(reads, seed, workers, [&](Xoshiro256 rng) { return quantum_anneal_one(model, options, rng); });
    std::string desc = "P=" + std::to_string(options.trotter) + ";beta=" + std::to_string(options.beta) + ";" +
                       options.schedule.describe() + (options.random_order ? ";order=random" : "");
    SampleSet set(model, "sqa", desc);
    for (std::size_t r = 0; r < configs.size(); ++r) set.add(model, std::move(configs[r]), derive_seed(seed, r));
    return set;
}

SampleSet sample(const SpinModel& model, const EngineSpec& spec) {
    if (spec.engine != Engine::Exact) require(spec.reads >= 1, "sample: reads must be >= 1");

    std::optional<EmbeddedModel> embedded;
    if (spec.embed) embedded = embed(model, spec.chain_coupling);
    const SpinModel& target = embedded ? embedded->physical : model;

    SampleSet raw;
    if (spec.engine == Engine::Exact) {
        raw = SampleSet(target, "exact", "enumeration");
        for (auto& c : exact_ground(target).configs) raw.add(target, std::move(c), 0);
    } else if (spec.engine == Engine::SA) {
        raw = simulated_anneal(target, spec.reads, spec.sa, spec.seed, spec.workers);
    } else {
        raw = simulated_quantum_anneal(target, spec.reads, spec.sqa, spec.seed, spec.workers);
    }
    if (!embedded) return raw;

    std::string desc = raw.schedule() + ";embedded;jfm=" + std::to_string(spec.chain_coupling);
    SampleSet out(model, raw.engine(), desc);
    for (const auto& s : raw.samples()) {
        auto decoded = unembed(s.config, embedded->embedding);
        out.add(model, std::move(decoded.config), s.seed, decoded.chain_breaks);
    }
    return out;
}

} // namespace lk
