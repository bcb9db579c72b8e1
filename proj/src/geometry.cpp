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

#include "cbsim/geometry.hpp"

#include <cmath>

#include "cbsim/errors.hpp"

namespace cbsim {

double wrap_angle(double radians)
{
    double r = std::fmod(radians, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // fmod of a value just below a multiple of 2*pi can round up to 2*pi
    if (r >= two_pi) {
        r = 0.0;
    }
    return r;
}

std::vector<PolarPoint> deploy_cluster(std::size_t n, double disk_radius, Engine& rng)
{
    if (n == 0) {
        throw InvalidConfig("deploy_cluster: cluster needs at least one node");
    }
    if (!(disk_radius >= 0.0)) {
        throw InvalidConfig("deploy_cluster: disk radius must be non-negative");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<PolarPoint> nodes;
    nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // radius first, then angle: the draw order is part of the seed contract
        const double rho = disk_radius * std::sqrt(unit(rng));
        const double phi = wrap_angle(two_pi * unit(rng));
        nodes.push_back({rho, phi});
    }
    return nodes;
}

double far_field_distance(const PolarPoint& node, double direction, double dest_rho)
{
    return dest_rho - node.rho * std::cos(direction - node.phi);
}

bool far_field_holds(const std::vector<PolarPoint>& nodes, double dest_rho)
{
    for (const auto& p : nodes) {
        if (p.rho > 0.0 && dest_rho < 10.0 * p.rho) {
            return false;
        }
    }
    return true;
}

double propagation_phase(const PolarPoint& node, double direction, double dest_rho)
{
    return two_pi * far_field_distance(node, direction, dest_rho);
}

double carrier_phase(const PolarPoint& node, const Destination& dest)
{
    return -two_pi * far_field_distance(node, dest.location.phi, dest.location.rho);
}

double residual_phase(const PolarPoint& node, const Destination& dest)
{
    return wrap_angle(carrier_phase(node, dest) +
                      propagation_phase(node, dest.location.phi, dest.location.rho));
}

}  // namespace cbsim
