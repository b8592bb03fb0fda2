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

#include "lk/verify.hpp"

#include <cmath>
#include <ostream>

#include "lk/lattice.hpp"
#include "lk/samplers.hpp"

namespace lk {

SpinModel random_oracle_model(Xoshiro256& rng, int kind) {
    const double J = 0.3 + 0.7 * rng.uniform();
    const double Jprime = 0.3 + 1.4 * rng.uniform();
    const double h = 0.6 * rng.uniform();
    switch (kind % 3) {
    case 0: return SpinModel::from_lattice(build_lattice(1), J, Jprime, h);
    case 1: return SpinModel::from_lattice(build_lattice(1, Boundary::Edge), J, Jprime, h);
    default: break;
    }
    const auto lattice = build_lattice(2);
    const auto full = SpinModel::from_lattice(lattice, J, Jprime, h);
    std::vector<bool> keep(lattice.size(), true);
    const auto remove = 1 + rng.below(7);
    for (std::uint64_t removed = 0; removed < remove;) {
        const auto i = rng.below(lattice.size());
        if (keep[i]) {
            keep[i] = false;
            ++removed;
        }
    }
    std::vector<std::uint32_t> index(lattice.size(), 0);
    std::uint32_t n = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (keep[i]) index[i] = n++;
    std::vector<Coupling> couplings;
    for (const auto& c : full.couplings())
        if (keep[c.i] && keep[c.j]) couplings.push_back({index[c.i], index[c.j], c.value});
    return SpinModel(n, std::move(couplings), std::vector<double>(n, h));
}

namespace {

bool report(std::ostream& out, bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    return ok;
}

SpinModel triangle(double J, double Jprime) {
    return SpinModel(3, {{0, 1, J}, {0, 2, J}, {1, 2, Jprime}}, {0.0, 0.0, 0.0});
}

} // namespace

bool run_oracle_suite(std::ostream& out, std::uint64_t seed, unsigned workers) {
    bool all = true;
    {
        const auto g = exact_ground(triangle(0.6, 0.6));
        all &= report(out, std::abs(g.energy + 0.6) < 1e-12 && g.degeneracy() == 6,
                      "triangle J=J'=0.6: E0=-0.6, degeneracy 6");
    }
    {
        const auto g = exact_ground(SpinModel::from_lattice(build_lattice(1), 0.6, 0.0, 0.0));
        all &= report(out, std::abs(g.energy + 4.8) < 1e-12 && g.degeneracy() == 2,
                      "L=1 Lieb J'=0: E0=-4.8, degeneracy 2");
    }

    Xoshiro256 rng(seed);
    constexpr int kModels = 10;
    int sa_hits = 0;
    int sqa_hits = 0;
    for (int k = 0; k < kModels; ++k) {
        const auto model = random_oracle_model(rng, k);
        const double e0 = exact_ground(model).energy;
        SaOptions sa;
        sa.schedule = BetaSchedule::geometric(BetaSchedule::kDefaultMin, BetaSchedule::kDefaultMax, 500);
        const auto sa_set = simulated_anneal(model, 200, sa, derive_seed(seed, 2 * k), workers);
        const auto sqa_set = simulated_quantum_anneal(model, 50, SqaOptions{}, derive_seed(seed, 2 * k + 1), workers);
        // Sampled energies can never undercut the enumerated minimum.
        all &= report(out, sa_set.min_energy() >= e0 - 1e-9 && sqa_set.min_energy() >= e0 - 1e-9,
                      "model " + std::to_string(k) + " (N=" + std::to_string(model.size()) +
                          "): samplers never below exact E0");
        sa_hits += sa_set.min_energy() <= e0 + 1e-9;
        sqa_hits += sqa_set.min_energy() <= e0 + 1e-9;
    }
    all &= report(out, sa_hits >= 0.95 * kModels,
                  "SA reaches exact E0 on " + std::to_string(sa_hits) + "/" + std::to_string(kModels) + " models");
    all &= report(out, sqa_hits >= 0.90 * kModels,
                  "SQA reaches exact E0 on " + std::to_string(sqa_hits) + "/" + std::to_string(kModels) + " models");

    {
        EngineSpec spec;
        spec.engine = Engine::SA;
        spec.reads = 100;
        spec.seed = seed;
        spec.embed = true;
        spec.workers = workers;
        const auto set = sample(triangle(0.6, 0.6), spec);
        all &= report(out, std::abs(set.min_energy() + 0.6) < 1e-12 && set.chain_break_rate().value_or(1.0) < 0.05,
                      "embedded SA on triangle decodes to E0=-0.6 with chain-break rate < 5%");
    }
    return all;
}

} // namespace lk
