/*
 * Copyright 2026 The cbsim Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cbsim/rng.hpp"

#include <array>

namespace cbsim {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t run_seed(std::uint64_t master_seed, std::uint64_t run_index)
{
    return splitmix64(splitmix64(master_seed) ^ splitmix64(run_index + 0x5851f42d4c957f2dULL));
}

Engine make_stream(std::uint64_t seed, Stream stream, std::uint64_t substream)
{
    const auto tag = static_cast<std::uint64_t>(stream);
    const std::array<std::uint32_t, 5> words{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(substream),
        static_cast<std::uint32_t>(substream >> 32)};
    std::seed_seq seq(words.begin(), words.end());
    return Engine(seq);
}

}  // namespace cbsim
