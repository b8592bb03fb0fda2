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

#include "lk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lk/error.hpp"

namespace lk {

std::string_view to_string(SiteRole role) {
    switch (role) {
    case SiteRole::Corner: return "corner";
    case SiteRole::EdgeH: return "edge_h";
    case SiteRole::EdgeV: return "edge_v";
    }
    return "?";
}

std::string_view to_string(BondClass cls) {
    return cls == BondClass::J ? "J" : "Jprime";
}

std::string_view to_string(Boundary boundary) {
    return boundary == Boundary::Corner ? "corner" : "edge";
}

std::optional<Boundary> parse_boundary(std::string_view text) {
    if (text == "corner") return Boundary::Corner;
    if (text == "edge") return Boundary::Edge;
    return std::nullopt;
}

namespace {

bool is_odd(int v) { return (v & 1) != 0; }

SiteRole role_of(GridPoint p) {
    if (!is_odd(p.x) && !is_odd(p.y)) return SiteRole::Corner;
    return is_odd(p.x) ? SiteRole::EdgeH : SiteRole::EdgeV;
}

} // namespace

std::size_t Lattice::count(SiteRole role) const {
    return static_cast<std::size_t>(
        std::count_if(sites_.begin(), sites_.end(), [&](const Site& s) { return s.role == role; }));
}

std::size_t Lattice::count(BondClass cls) const {
    return static_cast<std::size_t>(
        std::count_if(bonds_.begin(), bonds_.end(), [&](const Bond& b) { return b.cls == cls; }));
}

std::optional<std::uint32_t> Lattice::index_of(GridPoint p) const {
    if (p.x < lo_ || p.x > hi_ || p.y < lo_ || p.y > hi_) return std::nullopt;
    const int width = hi_ - lo_ + 1;
    const auto slot = lookup_[static_cast<std::size_t>((p.y - lo_) * width + (p.x - lo_))];
    if (slot < 0) return std::nullopt;
    return static_cast<std::uint32_t>(slot);
}

double Lattice::neel_abs_magnetization() const {
    const auto corners = static_cast<double>(count(SiteRole::Corner));
    const auto edges = static_cast<double>(size()) - corners;
    return std::abs(corners - edges) / static_cast<double>(size());
}

Lattice build_lattice(int cells, Boundary boundary) {
    require(cells >= 1, "lattice: L must be >= 1, got " + std::to_string(cells));

    Lattice lat;
    lat.cells_ = cells;
    lat.boundary_ = boundary;
    lat.lo_ = boundary == Boundary::Corner ? 0 : -1;
    lat.hi_ = boundary == Boundary::Corner ? 2 * cells : 2 * cells + 1;
    const int width = lat.hi_ - lat.lo_ + 1;
    lat.lookup_.assign(static_cast<std::size_t>(width) * width, -1);

    for (int y = lat.lo_; y <= lat.hi_; ++y) {
        for (int x = lat.lo_; x <= lat.hi_; ++x) {
            if (is_odd(x) && is_odd(y)) continue;
            const GridPoint p{x, y};
            lat.lookup_[static_cast<std::size_t>((y - lat.lo_) * width + (x - lat.lo_))] =
                static_cast<std::int32_t>(lat.sites_.size());
            lat.sites_.push_back({p, role_of(p)});
        }
    }

    // Forward-looking displacements only, so each bond is emitted once with i < j.
    struct Step {
        int dx, dy;
        BondClass cls;
    };
    constexpr std::array<Step, 3> steps{{{1, 0, BondClass::J}, {0, 1, BondClass::J}, {-1, 1, BondClass::Jprime}}};
    for (std::uint32_t i = 0; i < lat.sites_.size(); ++i) {
        const auto& s = lat.sites_[i];
        for (const auto& st : steps) {
            // An anti-diagonal step from a corner lands on an (odd, odd) hole.
            const auto j = lat.index_of({s.grid.x + st.dx, s.grid.y + st.dy});
            if (j) lat.bonds_.push_back({i, *j, st.cls});
        }
    }
    std::sort(lat.bonds_.begin(), lat.bonds_.end(), [](const Bond& a, const Bond& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });

    lat.square_.reserve(lat.sites_.size());
    for (const auto& s : lat.sites_)
        lat.square_.push_back({static_cast<double>(s.grid.x), static_cast<double>(s.grid.y)});
    lat.kagome_ = kagome_positions(lat, 1.0);
    return lat;
}

std::array<double, 4> shear_matrix(double shear) {
    require(shear >= 0.0 && shear <= 1.0, "lattice: shear must lie in [0, 1]");
    const double sy = 1.0 - shear + shear * std::sqrt(3.0) / 2.0;
    return {1.0, shear / 2.0, 0.0, sy};
}

std::vector<Vec2> kagome_positions(const Lattice& lattice, double shear) {
    const auto m = shear_matrix(shear);
    std::vector<Vec2> out;
    out.reserve(lattice.size());
    for (const auto& p : lattice.positions_square())
        out.push_back({m[0] * p[0] + m[1] * p[1], m[2] * p[0] + m[3] * p[1]});
    return out;
}

void write_lattice(std::ostream& out, const Lattice& lattice) {
    out << "# lattice L=" << lattice.cells() << " boundary=" << to_string(lattice.boundary()) << '\n';
    out << "# sites " << lattice.size() << '\n';
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto& s = lattice.sites()[i];
        out << i << ' ' << s.grid.x << ' ' << s.grid.y << ' ' << to_string(s.role) << '\n';
    }
    out << "# bonds " << lattice.bonds().size() << '\n';
    for (const auto& b : lattice.bonds()) out << b.i << ' ' << b.j << ' ' << to_string(b.cls) << '\n';
}

} // namespace lk
