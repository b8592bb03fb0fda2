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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lk/model.hpp"
#include "lk/schedule.hpp"

namespace lk {

enum class Engine { Exact, SA, SQA };

std::string_view to_string(Engine engine);
std::optional<Engine> parse_engine(std::string_view text);

// Largest model exact_ground will enumerate.
inline constexpr std::size_t kMaxExactSites = 26;

struct Sample {
    SpinConfig config;
    double energy = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> chain_breaks;
};

// Readouts plus what produced them.  Energies are always recomputed from the
// model on insertion.
class SampleSet {
public:
    SampleSet() = default;
    SampleSet(const SpinModel& model, std::string engine, std::string schedule);

    void add(const SpinModel& model, SpinConfig config, std::uint64_t seed,
             std::optional<std::size_t> chain_breaks = std::nullopt);

    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }
    std::size_t sites() const { return sites_; }
    const std::vector<Sample>& samples() const { return samples_; }
    const Sample& operator[](std::size_t r) const { return samples_[r]; }

    const std::string& engine() const { return engine_; }
    const std::string& schedule() const { return schedule_; }
    const std::optional<LatticeParams>& params() const { return params_; }

    double min_energy() const;
    // Fraction of chains broken over all reads; nullopt when not embedded.
    std::optional<double> chain_break_rate() const;

    // Reads whose energy is within tol of the minimum.
    SampleSet lowest_energy(double tol = 1e-9) const;

    friend bool operator==(const SampleSet& a, const SampleSet& b);

private:
    std::size_t sites_ = 0;
    std::string engine_;
    std::string schedule_;
    std::optional<LatticeParams> params_;
    std::vector<Sample> samples_;
};

struct GroundStates {
    double energy = 0.0;
    std::vector<SpinConfig> configs;  // ascending by bit pattern, bit k set <=> s_k = -1
    std::size_t degeneracy() const { return configs.size(); }
};

// Exhaustive Gray-code scan over all 2^N states; throws ErrorKind::Size for
// N > kMaxExactSites.
GroundStates exact_ground(const SpinModel& model);

struct SaOptions {
    static constexpr int kDefaultSweeps = 3000;

    BetaSchedule schedule =
        BetaSchedule::geometric(BetaSchedule::kDefaultMin, BetaSchedule::kDefaultMax, kDefaultSweeps);
    bool random_order = false;
};

struct SqaOptions {
    static constexpr int kDefaultTrotter = 8;
    static constexpr double kDefaultBeta = 32.0;
    // Lower bound on beta*Gamma/P inside ln tanh, so the replica coupling
    // stays finite when Gamma reaches 0.
    static constexpr double kMinTanhArgument = 1e-12;

    int trotter = kDefaultTrotter;
    AnnealSchedule schedule = AnnealSchedule::linear();
    double beta = kDefaultBeta;
    bool random_order = false;
};

// Ferromagnetic coupling between neighbouring imaginary-time replicas,
// -(1/(2 beta)) ln tanh(beta Gamma / P).
double replica_coupling(double beta, double gamma, int trotter);

// Metropolis simulated annealing.  Read r starts from a random state drawn
// from stream derive_seed(seed, r).
SampleSet simulated_anneal(const SpinModel& model, int reads, const SaOptions& options, std::uint64_t seed,
                           unsigned workers = 1);

// Path-integral simulated quantum annealing with P Trotter replicas in a
// periodic imaginary-time ring.  Each read reports the replica with the
// lowest classical energy after the final step.
SampleSet simulated_quantum_anneal(const SpinModel& model, int reads, const SqaOptions& options,
                                   std::uint64_t seed, unsigned workers = 1);

struct EngineSpec {
    Engine engine = Engine::SA;
    int reads = 1000;
    std::uint64_t seed = 0;
    SaOptions sa;
    SqaOptions sqa;
    bool embed = false;
    double chain_coupling = kDefaultChainCoupling;
    unsigned workers = 1;
};

// Uniform front end.  With embed set, the engine runs on the chain-embedded
// physical model and every read is decoded by majority vote.  The exact
// engine returns each ground state once, in exact_ground order.
SampleSet sample(const SpinModel& model, const EngineSpec& spec);

} // namespace lk
