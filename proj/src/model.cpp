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

#include "lk/model.hpp"

#include <algorithm>

#include "lk/error.hpp"

namespace lk {

SpinConfig::SpinConfig(std::vector<Spin> spins) : spins_(std::move(spins)) {
    for (auto s : spins_) require(s == 1 || s == -1, "spin config: values must be +1 or -1");
}

SpinConfig::SpinConfig(std::initializer_list<int> spins) {
    spins_.reserve(spins.size());
    for (int s : spins) {
        require(s == 1 || s == -1, "spin config: values must be +1 or -1");
        spins_.push_back(static_cast<Spin>(s));
    }
}

SpinConfig SpinConfig::uniform(std::size_t n, Spin value) {
    return SpinConfig(std::vector<Spin>(n, value));
}

SpinConfig SpinConfig::flipped(std::size_t i) const {
    SpinConfig c = *this;
    c.flip(i);
    return c;
}

SpinConfig SpinConfig::negated() const {
    SpinConfig c = *this;
    for (auto& s : c.spins_) s = static_cast<Spin>(-s);
    return c;
}

std::string SpinConfig::to_string() const {
    std::string out(spins_.size(), '+');
    for (std::size_t i = 0; i < spins_.size(); ++i)
        if (spins_[i] < 0) out[i] = '-';
    return out;
}

SpinConfig SpinConfig::parse(std::string_view text) {
    std::vector<Spin> spins;
    spins.reserve(text.size());
    for (char c : text) {
        if (c == '+') spins.push_back(1);
        else if (c == '-') spins.push_back(-1);
        else fail(ErrorKind::InvalidArgument, std::string("spin config: unexpected character '") + c + "'");
    }
    return SpinConfig(std::move(spins));
}

SpinModel::SpinModel(std::size_t sites, std::vector<Coupling> couplings, std::vector<double> fields)
    : couplings_(std::move(couplings)), fields_(std::move(fields)) {
    require(fields_.size() == sites, "model: field vector length does not match site count");
    std::vector<std::size_t> degree(sites, 0);
    for (const auto& c : couplings_) {
        require(c.i < sites && c.j < sites, "model: coupling references a missing site");
        require(c.i != c.j, "model: self-coupling on site " + std::to_string(c.i));
        ++degree[c.i];
        ++degree[c.j];
    }
    offsets_.assign(sites + 1, 0);
    for (std::size_t i = 0; i < sites; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    adj_.resize(offsets_.back());
    weight_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& c : couplings_) {
        adj_[fill[c.i]] = c.j;
        weight_[fill[c.i]++] = c.value;
        adj_[fill[c.j]] = c.i;
        weight_[fill[c.j]++] = c.value;
    }
}

SpinModel SpinModel::from_lattice(const Lattice& lattice, double J, double Jprime, double h) {
    std::vector<Coupling> couplings;
    couplings.reserve(lattice.bonds().size());
    for (const auto& b : lattice.bonds()) couplings.push_back({b.i, b.j, b.cls == BondClass::J ? J : Jprime});
    SpinModel model(lattice.size(), std::move(couplings), std::vector<double>(lattice.size(), h));
    model.params_ = LatticeParams{lattice.cells(), lattice.boundary(), J, Jprime, h};
    return model;
}

double SpinModel::energy(const SpinConfig& config) const { return energy(config.spins()); }

double SpinModel::energy(std::span<const Spin> spins) const {
    require(spins.size() == size(), "energy: config length " + std::to_string(spins.size()) +
                                        " does not match model size " + std::to_string(size()));
    double e = 0.0;
    for (const auto& c : couplings_) e += c.value * spins[c.i] * spins[c.j];
    for (std::size_t i = 0; i < fields_.size(); ++i) e += fields_[i] * spins[i];
    return e;
}

double SpinModel::local_field(const SpinConfig& config, std::size_t i) const {
    require(config.size() == size(), "local_field: config length does not match model size");
    if (i >= size()) fail(ErrorKind::InvalidArgument, "local_field: site index " + std::to_string(i) + " out of range");
    return local_field_unchecked(config.spins(), i);
}

SpinConfig ChainEmbedding::expand(const SpinConfig& logical) const {
    require(logical.size() == logical_sites, "expand: config length does not match embedding");
    std::vector<Spin> phys;
    phys.reserve(physical_sites());
    for (std::size_t k = 0; k < logical.size(); ++k) phys.insert(phys.end(), kChainLength, logical[k]);
    return SpinConfig(std::move(phys));
}

EmbeddedModel embed(const SpinModel& logical, double chain_coupling) {
    ChainEmbedding emb{logical.size(), chain_coupling};
    std::vector<Coupling> couplings;
    couplings.reserve(logical.couplings().size() + emb.chain_bonds());
    for (std::size_t k = 0; k < logical.size(); ++k) {
        for (std::size_t m = 0; m + 1 < kChainLength; ++m) {
            couplings.push_back({static_cast<std::uint32_t>(emb.physical_index(k, m)),
                                 static_cast<std::uint32_t>(emb.physical_index(k, m + 1)), chain_coupling});
        }
    }
    for (const auto& c : logical.couplings()) {
        couplings.push_back({static_cast<std::uint32_t>(emb.physical_index(c.i, 0)),
                             static_cast<std::uint32_t>(emb.physical_index(c.j, 0)), c.value});
    }
    std::vector<double> fields(emb.physical_sites());
    for (std::size_t k = 0; k < logical.size(); ++k)
        for (std::size_t m = 0; m < kChainLength; ++m)
            fields[emb.physical_index(k, m)] = logical.fields()[k] / static_cast<double>(kChainLength);
    return {SpinModel(emb.physical_sites(), std::move(couplings), std::move(fields)), emb};
}

Decoded unembed(const SpinConfig& physical, const ChainEmbedding& embedding) {
    require(physical.size() == embedding.physical_sites(),
            "unembed: physical config length " + std::to_string(physical.size()) + ", expected " +
                std::to_string(embedding.physical_sites()));
    std::vector<Spin> logical(embedding.logical_sites);
    std::size_t breaks = 0;
    for (std::size_t k = 0; k < embedding.logical_sites; ++k) {
        int sum = 0;
        for (std::size_t m = 0; m < kChainLength; ++m) sum += physical[embedding.physical_index(k, m)];
        logical[k] = sum > 0 ? Spin{1} : Spin{-1};
        if (std::abs(sum) != static_cast<int>(kChainLength)) ++breaks;
    }
    return {SpinConfig(std::move(logical)), breaks};
}

} // namespace lk
