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

#pragma once

#include <cstdint>
#include <random>

namespace cbsim {

using Engine = std::mt19937_64;

/// Purpose tags for the independent random streams of a single run.
///
/// Every random quantity of a run is drawn from its own stream so that two
/// scenarios sharing a seed see the same deployment, channel, initial
/// energies and phase errors no matter which strategy consumes them.
enum class Stream : std::uint64_t {
    deployment = 1,
    channel = 2,
    energy = 3,
    phase = 4,
    partition = 5,
    channel_redraw = 6,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of run `run_index` within an ensemble.
std::uint64_t run_seed(std::uint64_t master_seed, std::uint64_t run_index);

/// Engine for one purpose within a run; `substream` separates e.g. the
/// channel toward destination k from the channel toward destination l.
Engine make_stream(std::uint64_t seed, Stream stream, std::uint64_t substream = 0);

}  // namespace cbsim
