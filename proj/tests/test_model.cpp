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

#include <doctest.h>

#include <cmath>

#include "lk/error.hpp"
#include "lk/model.hpp"
#include "lk/rng.hpp"
#include "oracles.hpp"

using namespace lk;

namespace {

SpinModel triangle(double J = 0.6, double h = 0.0) {
    return SpinModel(3, {{0, 1, J}, {0, 2, J}, {1, 2, J}}, {h, h, h});
}

SpinConfig random_config(Xoshiro256& rng, std::size_t n) {
    std::vector<Spin> s(n);
    for (auto& v : s) v = rng.spin();
    return SpinConfig(std::move(s));
}

std::vector<int> as_ints(const SpinConfig& c) { return {c.spins().begin(), c.spins().end()}; }

} // namespace

TEST_SUITE("model") {

TEST_CASE("spin config basics") {
    const SpinConfig c{1, -1, 1};
    CHECK(c.size() == 3);
    CHECK(c.to_string() == "+-+");
    CHECK(SpinConfig::parse("+-+") == c);
    CHECK(c.negated().to_string() == "-+-");
    CHECK(c.flipped(1).to_string() == "+++");
    CHECK(SpinConfig::uniform(4, -1).to_string() == "----");
    CHECK_THROWS_AS(SpinConfig({1, 0, -1}), Error);
    CHECK_THROWS_AS(SpinConfig::parse("+x-"), Error);
}

TEST_CASE("triangle energies") {
    const auto m = triangle();
    CHECK(m.energy(SpinConfig{1, 1, -1}) == doctest::Approx(-0.6));
    CHECK(m.energy(SpinConfig{1, 1, 1}) == doctest::Approx(1.8));
    const auto g = oracle::enumerate(oracle::edges_of(m), m.fields());
    CHECK(g.energy == doctest::Approx(-0.6));
    CHECK(g.masks.size() == 6);
}

TEST_CASE("zero-field energy is invariant under global flip") {
    Xoshiro256 rng(11);
    const auto lat = build_lattice(3, Boundary::Edge);
    const auto m = SpinModel::from_lattice(lat, 0.6, 0.9, 0.0);
    for (int k = 0; k < 50; ++k) {
        const auto c = random_config(rng, m.size());
        CHECK(m.energy(c) == doctest::Approx(m.energy(c.negated())).epsilon(1e-12));
    }
}

TEST_CASE("L=1 Neel energy") {
    const auto lat = build_lattice(1);
    const auto neel = oracle::neel(lat);
    CHECK(SpinModel::from_lattice(lat, 0.6, 0.0, 0.0).energy(neel) == doctest::Approx(-4.8));
    // Both J' bonds join two edge spins (both down).
    CHECK(SpinModel::from_lattice(lat, 0.6, 0.5, 0.0).energy(neel) == doctest::Approx(-4.8 + 2 * 0.5));
    // Four corners up, four edges down: zero net field term.
    CHECK(SpinModel::from_lattice(lat, 0.6, 0.0, 0.3).energy(neel) == doctest::Approx(-4.8));
}

TEST_CASE("energy matches the bond-sum oracle") {
    Xoshiro256 rng(3);
    for (auto bnd : {Boundary::Corner, Boundary::Edge}) {
        const auto lat = build_lattice(4, bnd);
        const auto m = SpinModel::from_lattice(lat, 0.7, 1.3, 0.25);
        const auto edges = oracle::edges_of(m);
        CHECK(edges.size() == lat.bonds().size());
        for (int k = 0; k < 20; ++k) {
            const auto c = random_config(rng, m.size());
            CHECK(m.energy(c) == doctest::Approx(oracle::energy(edges, m.fields(), as_ints(c))).epsilon(1e-12));
        }
    }
}

TEST_CASE("local field") {
    const SpinModel isolated(1, {}, {0.3});
    CHECK(isolated.local_field(SpinConfig{1}, 0) == doctest::Approx(0.3));
    CHECK(triangle().local_field(SpinConfig{1, 1, -1}, 0) == doctest::Approx(0.0));
    CHECK(triangle().local_field(SpinConfig{1, 1, -1}, 2) == doctest::Approx(1.2));
    CHECK_THROWS_AS(triangle().local_field(SpinConfig{1, 1}, 0), Error);
    CHECK_THROWS_AS(triangle().local_field(SpinConfig{1, 1, 1}, 3), Error);
}

TEST_CASE("single flip energy change matches the local field") {
    Xoshiro256 rng(5);
    const auto lat = build_lattice(4, Boundary::Edge);
    const auto m = SpinModel::from_lattice(lat, 0.6, 1.1, 0.2);
    for (int k = 0; k < 1000; ++k) {
        const auto c = random_config(rng, m.size());
        const auto i = static_cast<std::size_t>(rng.below(m.size()));
        const double predicted = -2.0 * c[i] * m.local_field(c, i);
        CHECK(std::abs(m.energy(c.flipped(i)) - m.energy(c) - predicted) < 1e-12);
    }
}

TEST_CASE("energy is extensive over disconnected copies") {
    const auto base = triangle(0.6, 0.1);
    std::vector<Coupling> cs = base.couplings();
    for (const auto& c : base.couplings()) cs.push_back({c.i + 3, c.j + 3, c.value});
    const SpinModel doubled(6, cs, {0.1, 0.1, 0.1, 0.1, 0.1, 0.1});
    const SpinConfig a{1, -1, 1}, b{-1, -1, 1};
    CHECK(doubled.energy(SpinConfig{1, -1, 1, -1, -1, 1}) == doctest::Approx(base.energy(a) + base.energy(b)));
}

TEST_CASE("model construction rejects bad input") {
    CHECK_THROWS_AS(SpinModel(2, {{0, 0, 1.0}}, {0, 0}), Error);
    CHECK_THROWS_AS(SpinModel(2, {{0, 2, 1.0}}, {0, 0}), Error);
    CHECK_THROWS_AS(SpinModel(3, {}, {0, 0}), Error);
    CHECK_THROWS_AS(triangle().energy(SpinConfig{1, 1}), Error);
}

TEST_CASE("from_lattice records its parameters") {
    const auto lat = build_lattice(2, Boundary::Edge);
    const auto m = SpinModel::from_lattice(lat, 0.6, 0.8, 0.3);
    REQUIRE(m.lattice_params());
    CHECK(m.lattice_params()->cells == 2);
    CHECK(m.lattice_params()->boundary == Boundary::Edge);
    CHECK(m.lattice_params()->Jprime == 0.8);
    std::size_t jp = 0;
    for (const auto& c : m.couplings()) jp += c.value == 0.8;
    CHECK(jp == lat.count(BondClass::Jprime));
}

TEST_CASE("embedding sizes") {
    const auto lat = build_lattice(1);
    const auto emb = embed(SpinModel::from_lattice(lat, 0.6, 0.9, 0.0));
    CHECK(emb.physical.size() == 24);
    CHECK(emb.embedding.chain_bonds() == 16);
    CHECK(emb.physical.couplings().size() == 16 + lat.bonds().size());
}

TEST_CASE("embedded triangle ground state") {
    const auto emb = embed(triangle(0.6, 0.0));
    const auto g = oracle::enumerate(oracle::edges_of(emb.physical), emb.physical.fields());
    CHECK(g.energy == doctest::Approx(-12.6));
    CHECK(g.masks.size() == 6);
    for (auto mask : g.masks) {
        std::vector<Spin> s;
        for (int v : oracle::state(mask, 9)) s.push_back(static_cast<Spin>(v));
        const auto d = unembed(SpinConfig(std::move(s)), emb.embedding);
        CHECK(d.chain_breaks == 0);
        CHECK(triangle().energy(d.config) == doctest::Approx(-0.6));
    }
}

TEST_CASE("embedded energy of an aligned state equals logical plus chain energy") {
    Xoshiro256 rng(9);
    const auto lat = build_lattice(2);
    const auto logical = SpinModel::from_lattice(lat, 0.6, 1.2, 0.3);
    const auto emb = embed(logical, -2.0);
    for (int k = 0; k < 20; ++k) {
        const auto c = random_config(rng, logical.size());
        const double chain = -2.0 * static_cast<double>(emb.embedding.chain_bonds());
        CHECK(emb.physical.energy(emb.embedding.expand(c)) ==
              doctest::Approx(logical.energy(c) + chain).epsilon(1e-12));
    }
}

TEST_CASE("unembed majority vote and round trip") {
    const ChainEmbedding emb{2, -2.0};
    const auto d = unembed(SpinConfig{1, -1, 1, -1, -1, -1}, emb);
    CHECK(d.config == SpinConfig{1, -1});
    CHECK(d.chain_breaks == 1);
    Xoshiro256 rng(2);
    for (int k = 0; k < 20; ++k) {
        const auto c = random_config(rng, 7);
        const ChainEmbedding e{7, -2.0};
        const auto back = unembed(e.expand(c), e);
        CHECK(back.config == c);
        CHECK(back.chain_breaks == 0);
    }
    CHECK_THROWS_AS(unembed(SpinConfig{1, 1}, emb), Error);
}

}
