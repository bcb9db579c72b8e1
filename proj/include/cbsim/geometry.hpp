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

#include <cstddef>
#include <numbers>
#include <vector>

#include "cbsim/rng.hpp"

namespace cbsim {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Point in the cluster plane. All distances are in carrier wavelengths, so
/// the wavelength itself is 1 throughout the geometry code.
struct PolarPoint {
    double rho = 0.0;  ///< distance from the origin, >= 0
    double phi = 0.0;  ///< azimuth in [0, 2*pi)

    friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

struct Destination {
    PolarPoint location;
    std::size_t index = 0;
};

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double radians);

/// Nodes drawn uniformly over a disk of radius `disk_radius` (uniform in
/// area). Throws InvalidConfig for n == 0 or a negative radius.
std::vector<PolarPoint> deploy_cluster(std::size_t n, double disk_radius, Engine& rng);

/// Far-field path length from `node` to the point at range `dest_rho` in
/// direction `direction`: dest_rho - rho * cos(direction - phi).
double far_field_distance(const PolarPoint& node, double direction, double dest_rho);

/// True when the destination range is at least 10x every node radius.
bool far_field_holds(const std::vector<PolarPoint>& nodes, double dest_rho);

/// Phase accumulated over the far-field path toward `direction`.
double propagation_phase(const PolarPoint& node, double direction, double dest_rho);

/// Initial carrier phase that cancels the propagation phase toward `dest`.
double carrier_phase(const PolarPoint& node, const Destination& dest);

/// Phase of node's contribution at the destination before synchronization
/// errors, wrapped to [0, 2*pi). Zero up to rounding when the carrier phase
/// is set by carrier_phase().
double residual_phase(const PolarPoint& node, const Destination& dest);

}  // namespace cbsim
