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

// Fixed, platform-independent random streams.
//
// Every read of every engine owns one Xoshiro256 stream (xoshiro256**,
// Blackman & Vigna) whose 256-bit state is filled from SplitMix64 applied to
// derive_seed(base, stream).  Uniform doubles take the top 53 bits.  None of
// the std:: distributions are used, so outputs are identical across standard
// libraries and machines.

#include <array>
#include <bit>
#include <cstdint>

namespace lk {

constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Order-sensitive hash of (base, stream); independent of any other stream id.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t s = base;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

class Xoshiro256 {
public:
    explicit constexpr Xoshiro256(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    static constexpr Xoshiro256 stream(std::uint64_t base, std::uint64_t index) {
        return Xoshiro256(derive_seed(base, index));
    }

    constexpr std::uint64_t next() {
        const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    // [0, 1)
    constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    constexpr std::int8_t spin() { return (next() >> 63) ? std::int8_t{1} : std::int8_t{-1}; }

    // Modulo bias is below 2^-50 for the site counts used here.
    constexpr std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::array<std::uint64_t, 4> state_{};
};

} // namespace lk
