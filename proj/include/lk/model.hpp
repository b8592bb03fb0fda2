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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lk/lattice.hpp"

namespace lk {

using Spin = std::int8_t;

// A classical readout: one +1/-1 per site.
class SpinConfig {
public:
    SpinConfig() = default;
    explicit SpinConfig(std::vector<Spin> spins);
    SpinConfig(std::initializer_list<int> spins);

    static SpinConfig uniform(std::size_t n, Spin value);

    std::size_t size() const { return spins_.size(); }
    Spin operator[](std::size_t i) const { return spins_[i]; }
    std::span<const Spin> spins() const { return spins_; }

    void flip(std::size_t i) { spins_[i] = static_cast<Spin>(-spins_[i]); }
    SpinConfig flipped(std::size_t i) const;
    SpinConfig negated() const;

    // '+' / '-' per site.
    std::string to_string() const;
    static SpinConfig parse(std::string_view text);

    friend bool operator==(const SpinConfig&, const SpinConfig&) = default;
    friend auto operator<=>(const SpinConfig&, const SpinConfig&) = default;

private:
    std::vector<Spin> spins_;
};

struct Coupling {
    std::uint32_t i;
    std::uint32_t j;
    double value;
};

// Parameters echoed into sample sets when a model came from a lattice.
struct LatticeParams {
    int cells = 0;
    Boundary boundary = Boundary::Corner;
    double J = 0.0;
    double Jprime = 0.0;
    double h = 0.0;
};

// Classical Ising energy
//     E(s) = sum_bonds J_ij s_i s_j + sum_i h_i s_i
// with positive J_ij antiferromagnetic and positive h_i favouring s_i = -1.
class SpinModel {
public:
    SpinModel(std::size_t sites, std::vector<Coupling> couplings, std::vector<double> fields);

    static SpinModel from_lattice(const Lattice& lattice, double J, double Jprime, double h);

    std::size_t size() const { return fields_.size(); }
    const std::vector<Coupling>& couplings() const { return couplings_; }
    const std::vector<double>& fields() const { return fields_; }
    const std::optional<LatticeParams>& lattice_params() const { return params_; }

    // Neighbours of site i and the coupling to each.
    std::span<const std::uint32_t> neighbors(std::size_t i) const {
        return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
    }
    std::span<const double> weights(std::size_t i) const {
        return {weight_.data() + offsets_[i], weight_.data() + offsets_[i + 1]};
    }

    double energy(const SpinConfig& config) const;
    double energy(std::span<const Spin> spins) const;

    // h_i + sum_j J_ij s_j.  Flipping site i changes the energy by
    // -2 s_i local_field(i).
    double local_field(const SpinConfig& config, std::size_t i) const;

    double local_field_unchecked(std::span<const Spin> spins, std::size_t i) const {
        double f = fields_[i];
        const auto nb = neighbors(i);
        const auto w = weights(i);
        for (std::size_t k = 0; k < nb.size(); ++k) f += w[k] * spins[nb[k]];
        return f;
    }

private:
    std::vector<Coupling> couplings_;
    std::vector<double> fields_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> adj_;
    std::vector<double> weight_;
    std::optional<LatticeParams> params_;
};

inline constexpr std::size_t kChainLength = 3;
inline constexpr double kDefaultChainCoupling = -2.0;

// Logical site k occupies physical spins 3k, 3k+1, 3k+2, joined as a path
// by `coupling`.  Logical bonds sit on the first spin of each chain.
struct ChainEmbedding {
    std::size_t logical_sites = 0;
    double coupling = kDefaultChainCoupling;

    std::size_t physical_sites() const { return kChainLength * logical_sites; }
    std::size_t chain_bonds() const { return (kChainLength - 1) * logical_sites; }
    std::size_t physical_index(std::size_t logical, std::size_t member) const {
        return kChainLength * logical + member;
    }

    // Every chain aligned with its logical spin.
    SpinConfig expand(const SpinConfig& logical) const;
};

struct EmbeddedModel {
    SpinModel physical;
    ChainEmbedding embedding;
};

EmbeddedModel embed(const SpinModel& logical, double chain_coupling = kDefaultChainCoupling);

struct Decoded {
    SpinConfig config;
    std::size_t chain_breaks = 0;
};

// Majority vote per chain; a chain is broken when its spins disagree.
Decoded unembed(const SpinConfig& physical, const ChainEmbedding& embedding);

} // namespace lk
