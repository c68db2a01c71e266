// SPDX-License-Identifier: Apache-2.0
//
// relay-mi: asymptotic mutual-information statistics of two-hop AF MIMO relay channels
// Copyright (C) 2026 The relay-mi Authors
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

#ifndef relaymi_rng_H
#define relaymi_rng_H

#include <cmath>
#include <complex>
#include <cstdint>

namespace relaymi
{

    // Counter-based generator: word i of stream j is a pure function of
    // (seed, j, i), so parallel batches reproduce bit-for-bit regardless of
    // thread scheduling.
    struct SeededRng
    {
        std::uint64_t seed = 0;
        std::uint64_t stream = 0;
    };

    namespace detail
    {
        inline std::uint64_t mix64(std::uint64_t z)
        {
            z += 0x9e3779b97f4a7c15ull;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        }
    } // namespace detail

    inline std::uint64_t rng_word(const SeededRng &g, std::uint64_t counter)
    {
        using detail::mix64;
        return mix64(mix64(mix64(g.seed) ^ g.stream) ^ counter);
    }

    // Uniform draw in (0, 1]; the open lower end keeps log() finite.
    inline double rng_uniform(const SeededRng &g, std::uint64_t counter)
    {
        return double((rng_word(g, counter) >> 11) + 1) * 0x1.0p-53;
    }

    // ZMCSCG draw with unit total variance (each component variance 1/2),
    // polar Box-Muller from two counter-indexed uniforms.
    inline std::complex<double> rng_complex_normal(const SeededRng &g, std::uint64_t counter)
    {
        const double u1 = rng_uniform(g, counter);
        const double u2 = rng_uniform(g, counter + 1);
        const double r = std::sqrt(-std::log(u1));
        const double phi = 2.0 * M_PI * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

} // namespace relaymi

#endif
