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

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace lk {

// Shortest round-trip decimal form ("0.35", "0", "1e-05").
inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::optional<double> parse_number(std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

// Grid value snapped to 1e-9 so that 0.3 + 1 * 0.05 prints as 0.35.
inline double snap(double v) { return std::round(v * 1e9) / 1e9; }

// start, start + step, ... up to and including stop (within 1e-9).
inline std::vector<double> linear_range(double start, double stop, double step) {
    std::vector<double> out;
    if (step <= 0.0 || stop < start) return out;
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) out.push_back(snap(start + static_cast<double>(k) * step));
    return out;
}

} // namespace lk
