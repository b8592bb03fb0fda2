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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "lk/error.hpp"
#include "lk/lattice.hpp"

using namespace lk;

namespace {

std::vector<std::vector<std::uint32_t>> adjacency(const Lattice& lat, std::optional<BondClass> only) {
    std::vector<std::vector<std::uint32_t>> adj(lat.size());
    for (const auto& b : lat.bonds()) {
        if (only && b.cls != *only) continue;
        adj[b.i].push_back(b.j);
        adj[b.j].push_back(b.i);
    }
    return adj;
}

bool interior(const Lattice& lat, GridPoint p) {
    const int lo = lat.boundary() == Boundary::Corner ? 0 : -1;
    const int hi = lat.boundary() == Boundary::Corner ? 2 * lat.cells() : 2 * lat.cells() + 1;
    return p.x > lo + 1 && p.x < hi - 1 && p.y > lo + 1 && p.y < hi - 1;
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("L=1 hand enumeration") {
    const auto lat = build_lattice(1);
    REQUIRE(lat.size() == 8);
    CHECK(lat.count(SiteRole::Corner) == 4);
    CHECK(lat.count(SiteRole::EdgeH) == 2);
    CHECK(lat.count(SiteRole::EdgeV) == 2);
    CHECK(lat.count(BondClass::J) == 8);
    CHECK(lat.count(BondClass::Jprime) == 2);
    // Row-major: (0,0),(1,0),(2,0),(0,1),(2,1),(0,2),(1,2),(2,2).
    const std::vector<GridPoint> expected{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(lat.sites()[i].grid == expected[i]);
    CHECK_FALSE(lat.index_of({1, 1}).has_value());
}

TEST_CASE("site count formulas") {
    CHECK(build_lattice(2).size() == 21);
    CHECK(build_lattice(8).size() == 225);
    for (int L = 1; L <= 10; ++L) {
        CHECK(build_lattice(L).size() == static_cast<std::size_t>(3 * L * L + 4 * L + 1));
        CHECK(build_lattice(L, Boundary::Edge).size() == static_cast<std::size_t>((L + 1) * (3 * L + 5)));
    }
}

TEST_CASE("rejects L = 0") {
    CHECK_THROWS_AS(build_lattice(0), Error);
    CHECK_THROWS_AS(build_lattice(-3), Error);
}

TEST_CASE("roles follow grid parity") {
    for (auto bnd : {Boundary::Corner, Boundary::Edge}) {
        const auto lat = build_lattice(4, bnd);
        for (const auto& s : lat.sites()) {
            const bool xo = (s.grid.x & 1) != 0, yo = (s.grid.y & 1) != 0;
            CHECK_FALSE((xo && yo));
            if (!xo && !yo) CHECK(s.role == SiteRole::Corner);
            if (xo && !yo) CHECK(s.role == SiteRole::EdgeH);
            if (!xo && yo) CHECK(s.role == SiteRole::EdgeV);
        }
    }
}

TEST_CASE("bond classes connect the right roles") {
    for (auto bnd : {Boundary::Corner, Boundary::Edge}) {
        for (int L : {1, 3, 6}) {
            const auto lat = build_lattice(L, bnd);
            std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
            for (const auto& b : lat.bonds()) {
                CHECK(b.i != b.j);
                CHECK(seen.insert({std::min(b.i, b.j), std::max(b.i, b.j)}).second);
                const auto& a = lat.sites()[b.i];
                const auto& c = lat.sites()[b.j];
                const int dx = c.grid.x - a.grid.x, dy = c.grid.y - a.grid.y;
                if (b.cls == BondClass::J) {
                    CHECK(std::abs(dx) + std::abs(dy) == 1);
                    CHECK(((a.role == SiteRole::Corner) != (c.role == SiteRole::Corner)));
                } else {
                    CHECK(((dx == 1 && dy == -1) || (dx == -1 && dy == 1)));
                    const bool h_to_v = (a.role == SiteRole::EdgeH && c.role == SiteRole::EdgeV) ||
                                        (a.role == SiteRole::EdgeV && c.role == SiteRole::EdgeH);
                    CHECK(h_to_v);
                }
            }
        }
    }
}

TEST_CASE("J bond count agrees with edge adjacency count") {
    for (auto bnd : {Boundary::Corner, Boundary::Edge}) {
        for (int L = 1; L <= 6; ++L) {
            const auto lat = build_lattice(L, bnd);
            // Every edge site touches the corners on either side along its axis.
            std::size_t adjacencies = 0;
            for (const auto& s : lat.sites()) {
                if (s.role == SiteRole::Corner) continue;
                const int dx = s.role == SiteRole::EdgeH ? 1 : 0;
                const int dy = 1 - dx;
                adjacencies += lat.index_of({s.grid.x + dx, s.grid.y + dy}).has_value();
                adjacencies += lat.index_of({s.grid.x - dx, s.grid.y - dy}).has_value();
            }
            CHECK(lat.count(BondClass::J) == adjacencies);
            if (bnd == Boundary::Corner) CHECK(adjacencies == 2 * (lat.size() - lat.count(SiteRole::Corner)));
        }
    }
}

TEST_CASE("interior coordination is four") {
    for (auto bnd : {Boundary::Corner, Boundary::Edge}) {
        const auto lat = build_lattice(6, bnd);
        const auto j_adj = adjacency(lat, BondClass::J);
        const auto jp_adj = adjacency(lat, BondClass::Jprime);
        for (std::size_t i = 0; i < lat.size(); ++i) {
            const auto& s = lat.sites()[i];
            if (!interior(lat, s.grid)) continue;
            if (s.role == SiteRole::Corner) {
                CHECK(j_adj[i].size() == 4);
                CHECK(jp_adj[i].empty());
            } else {
                CHECK(j_adj[i].size() == 2);
                CHECK(jp_adj[i].size() == 2);
            }
        }
    }
}

TEST_CASE("edge boundary gives every corner four J bonds") {
    const auto lat = build_lattice(5, Boundary::Edge);
    const auto j_adj = adjacency(lat, BondClass::J);
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (lat.sites()[i].role == SiteRole::Corner) CHECK(j_adj[i].size() == 4);
}

TEST_CASE("J-only graph is bipartite by 2-colouring") {
    for (auto bnd : {Boundary::Corner, Boundary::Edge}) {
        const auto lat = build_lattice(5, bnd);
        const auto adj = adjacency(lat, BondClass::J);
        std::vector<int> colour(lat.size(), -1);
        bool ok = true;
        for (std::size_t start = 0; start < lat.size(); ++start) {
            if (colour[start] >= 0) continue;
            colour[start] = 0;
            std::vector<std::size_t> stack{start};
            while (!stack.empty()) {
                const auto u = stack.back();
                stack.pop_back();
                for (auto v : adj[u]) {
                    if (colour[v] < 0) {
                        colour[v] = 1 - colour[u];
                        stack.push_back(v);
                    } else if (colour[v] == colour[u]) {
                        ok = false;
                    }
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("every J' bond closes exactly one J,J,J' triangle") {
    for (auto bnd : {Boundary::Corner, Boundary::Edge}) {
        const auto lat = build_lattice(5, bnd);
        const auto j_adj = adjacency(lat, BondClass::J);
        const auto jp_adj = adjacency(lat, BondClass::Jprime);
        for (const auto& b : lat.bonds()) {
            if (b.cls != BondClass::Jprime) continue;
            std::size_t common = 0;
            for (auto u : j_adj[b.i])
                common += std::count(j_adj[b.j].begin(), j_adj[b.j].end(), u);
            CHECK(common == 1);
            // No J' triangle: J' neighbours of i and j are disjoint.
            for (auto u : jp_adj[b.i]) CHECK(std::count(jp_adj[b.j].begin(), jp_adj[b.j].end(), u) == 0);
        }
    }
}

TEST_CASE("J' subgraph is a union of anti-diagonal paths") {
    const auto lat = build_lattice(6);
    const auto jp = adjacency(lat, BondClass::Jprime);
    std::size_t components = 0;
    std::vector<bool> seen(lat.size(), false);
    for (std::size_t i = 0; i < lat.size(); ++i) {
        CHECK(jp[i].size() <= 2);
        if (seen[i] || jp[i].empty()) continue;
        ++components;
        std::size_t nodes = 0, degree_sum = 0;
        const int diag = lat.sites()[i].grid.x + lat.sites()[i].grid.y;
        std::vector<std::size_t> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            ++nodes;
            degree_sum += jp[u].size();
            CHECK(lat.sites()[u].grid.x + lat.sites()[u].grid.y == diag);
            for (auto v : jp[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        CHECK(degree_sum / 2 == nodes - 1);  // tree with max degree 2 => path
    }
    CHECK(components == 2 * 6);  // diagonals x + y = 1, 3, ..., 4L - 1
}

TEST_CASE("construction is deterministic") {
    const auto a = build_lattice(5, Boundary::Edge);
    const auto b = build_lattice(5, Boundary::Edge);
    std::ostringstream sa, sb;
    write_lattice(sa, a);
    write_lattice(sb, b);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("kagome positions") {
    const auto lat = build_lattice(2);
    const auto p0 = kagome_positions(lat, 0.0);
    CHECK(p0 == lat.positions_square());
    const auto origin = *lat.index_of({0, 0});
    CHECK(p0[origin][0] == 0.0);
    CHECK(p0[origin][1] == 0.0);

    const auto p1 = kagome_positions(lat, 1.0);
    const auto top = *lat.index_of({0, 2});
    CHECK(p1[top][0] == doctest::Approx(1.0));
    CHECK(p1[top][1] == doctest::Approx(std::sqrt(3.0)));

    auto dist = [&](GridPoint a, GridPoint b) {
        const auto& u = p1[*lat.index_of(a)];
        const auto& v = p1[*lat.index_of(b)];
        return std::hypot(u[0] - v[0], u[1] - v[1]);
    };
    CHECK(dist({0, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(dist({0, 0}, {0, 1}) == doctest::Approx(1.0));
    CHECK(dist({1, 0}, {0, 1}) == doctest::Approx(1.0));
    // Down-pointing triangle of the corner at (2, 2).
    CHECK(dist({2, 2}, {1, 2}) == doctest::Approx(1.0));
    CHECK(dist({2, 2}, {2, 1}) == doctest::Approx(1.0));
    CHECK(dist({1, 2}, {2, 1}) == doctest::Approx(1.0));

    const auto half = kagome_positions(lat, 0.5);
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (int c = 0; c < 2; ++c) CHECK(half[i][c] == doctest::Approx(0.5 * (p0[i][c] + p1[i][c])));

    CHECK_THROWS_AS(kagome_positions(lat, -0.1), Error);
    CHECK_THROWS_AS(kagome_positions(lat, 1.5), Error);
}

TEST_CASE("lattice dump format") {
    const auto lat = build_lattice(1);
    std::ostringstream out;
    write_lattice(out, lat);
    std::istringstream in(out.str());
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 3 + 8 + 10);
    CHECK(lines[2] == "0 0 0 corner");
    CHECK(lines[3] == "1 1 0 edge_h");
    CHECK(lines[5] == "3 0 1 edge_v");
    CHECK(lines[10] == "# bonds 10");
    CHECK(lines[11] == "0 1 J");
    CHECK(lines[14] == "1 3 Jprime");
}

TEST_CASE("Neel magnetization from role counts") {
    // Corner boundary: corners (L+1)^2, edges 2L(L+1) => (L-1)/(3L+1).
    CHECK(build_lattice(8).neel_abs_magnetization() == doctest::Approx(7.0 / 25.0));
    // Edge boundary: edges 2(L+1)(L+2) => (L+3)/(3L+5).
    CHECK(build_lattice(8, Boundary::Edge).neel_abs_magnetization() == doctest::Approx(11.0 / 29.0));
}

}
