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

#ifndef CHANSVC_RNG_HPP
#define CHANSVC_RNG_HPP

#include <cstdint>
#include <string_view>

namespace chansvc {

// Identifier of the fixed generator stack, echoed into output metadata so
// runs can be reproduced byte for byte.
inline constexpr std::string_view kRngAlgorithmId =
    "pcg64-xsl-rr/splitmix64-streams/polar-normal/mt2000-gamma";

// One seeded random stream. Streams are derived from (base_seed,
// stream_index) through a splitmix64 chain that selects the PCG64 state and
// stream increment; identical pairs reproduce identical draw sequences and
// distinct stream indices give distinct LCG orbits (period 2^128 each).
//
// A stream is single-owner: not safe for concurrent use, cheap to create per
// work unit.
class RngStream {
public:
    RngStream(std::uint64_t base_seed, std::uint64_t stream_index);

    std::uint64_t base_seed() const noexcept { return base_seed_; }
    std::uint64_t stream_index() const noexcept { return stream_index_; }

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53 random bits.
    double next_double();

    // Standard normal deviate (Marsaglia polar method, spare cached).
    double next_normal();

private:
    unsigned __int128 state_;
    unsigned __int128 inc_;
    std::uint64_t base_seed_;
    std::uint64_t stream_index_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace chansvc

#endif
