// chansvc - service-rate analysis and simulation for i.i.d. fading channels
// Copyright (C) 2026 the chansvc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "chansvc/rng.hpp"

#include <cmath>

namespace chansvc {

namespace {

using u128 = unsigned __int128;

constexpr u128 kPcgMult = (u128(0x2360ed051fc65da4ULL) << 64) | 0x4385df649fccf645ULL;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotr64(std::uint64_t value, unsigned rot) {
    return (value >> rot) | (value << ((-rot) & 63u));
}

} // namespace

RngStream::RngStream(std::uint64_t base_seed, std::uint64_t stream_index)
    : base_seed_(base_seed), stream_index_(stream_index) {
    // State material comes from the base seed alone, the stream increment
    // from base seed and stream index; distinct increments select distinct
    // orbits of the underlying 128-bit LCG.
    std::uint64_t chain_state = base_seed;
    const u128 init_state = (u128(splitmix64(chain_state)) << 64) | splitmix64(chain_state);

    std::uint64_t chain_stream =
        base_seed ^ (stream_index * 0xA24BAED4963EE407ULL + 0x9E3779B97F4A7C15ULL);
    const u128 init_seq = (u128(splitmix64(chain_stream)) << 64) | splitmix64(chain_stream);

    inc_ = (init_seq << 1) | 1u;
    state_ = 0;
    (void)next_u64();
    state_ += init_state;
    (void)next_u64();
    has_spare_ = false;
}

std::uint64_t RngStream::next_u64() {
    state_ = state_ * kPcgMult + inc_;
    const std::uint64_t xored = static_cast<std::uint64_t>(state_ >> 64) ^
                                static_cast<std::uint64_t>(state_);
    const unsigned rot = static_cast<unsigned>(state_ >> 122);
    return rotr64(xored, rot);
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

} // namespace chansvc
