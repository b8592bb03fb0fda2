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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace lk {

// Grid coordinates: corners sit at (even, even), edge centres at
// (odd, even) [EdgeH] and (even, odd) [EdgeV].  (odd, odd) cells are empty.
enum class SiteRole : std::uint8_t { Corner, EdgeH, EdgeV };

enum class BondClass : std::uint8_t { J, Jprime };

// Corner: grid 0..2L, every boundary site is a corner or a two-bond edge.
// Site count 3L^2 + 4L + 1.
// Edge: grid -1..2L+1, every corner carries four J bonds and both of its
// triangles; the outer ring is made of dangling edge sites.  Site count
// (L + 1)(3L + 5).
enum class Boundary : std::uint8_t { Corner, Edge };

std::string_view to_string(SiteRole role);
std::string_view to_string(BondClass cls);
std::string_view to_string(Boundary boundary);
std::optional<Boundary> parse_boundary(std::string_view text);

struct GridPoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct Site {
    GridPoint grid;
    SiteRole role;
};

struct Bond {
    std::uint32_t i;
    std::uint32_t j;
    BondClass cls;
};

using Vec2 = std::array<double, 2>;

class Lattice {
public:
    int cells() const { return cells_; }
    Boundary boundary() const { return boundary_; }
    std::size_t size() const { return sites_.size(); }

    const std::vector<Site>& sites() const { return sites_; }
    const std::vector<Bond>& bonds() const { return bonds_; }
    const std::vector<Vec2>& positions_square() const { return square_; }
    const std::vector<Vec2>& positions_kagome() const { return kagome_; }

    std::size_t count(SiteRole role) const;
    std::size_t count(BondClass cls) const;

    // Index of the site at grid point p, if it exists.
    std::optional<std::uint32_t> index_of(GridPoint p) const;

    // |#corners - #edges| / N: the |m| of the state with corners and edges
    // on opposite sides.
    double neel_abs_magnetization() const;

    friend Lattice build_lattice(int cells, Boundary boundary);

private:
    int cells_ = 0;
    Boundary boundary_ = Boundary::Corner;
    int lo_ = 0;
    int hi_ = 0;
    std::vector<Site> sites_;
    std::vector<Bond> bonds_;
    std::vector<Vec2> square_;
    std::vector<Vec2> kagome_;
    std::vector<std::int32_t> lookup_;
};

// Deterministic row-major (y outer, x inner) construction.
Lattice build_lattice(int cells, Boundary boundary = Boundary::Corner);

// Linear interpolation between the square frame (shear = 0) and the
// equilateral kagome frame (x + y/2, y*sqrt(3)/2) at shear = 1.
std::vector<Vec2> kagome_positions(const Lattice& lattice, double shear);

// Affine map applied by kagome_positions, as a row-major 2x2 matrix.
std::array<double, 4> shear_matrix(double shear);

// `index x y role` per site, then `i j class` per bond.
void write_lattice(std::ostream& out, const Lattice& lattice);

} // namespace lk
