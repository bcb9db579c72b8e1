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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "cbsim/channel.hpp"
#include "cbsim/errors.hpp"
#include "cbsim/geometry.hpp"
#include "cbsim/rng.hpp"

using namespace cbsim;

namespace {

// Distance of an angle from 0 on the circle.
double circular_distance(double a)
{
    const double r = std::remainder(a, two_pi);
    return std::abs(r);
}

}  // namespace

TEST_CASE("deploy_cluster places every node inside the disk")
{
    auto rng = make_stream(7, Stream::deployment);
    const auto nodes = deploy_cluster(100, 250.0, rng);
    REQUIRE(nodes.size() == 100);
    for (const auto& p : nodes) {
        CHECK(p.rho >= 0.0);
        CHECK(p.rho <= 250.0);
        CHECK(p.phi >= 0.0);
        CHECK(p.phi < two_pi);
    }
}

TEST_CASE("deploy_cluster with zero radius puts the node at the origin")
{
    auto rng = make_stream(1, Stream::deployment);
    const auto nodes = deploy_cluster(1, 0.0, rng);
    REQUIRE(nodes.size() == 1);
    CHECK(nodes[0].rho == 0.0);
}

TEST_CASE("deploy_cluster rejects an empty cluster and a negative radius")
{
    auto rng = make_stream(1, Stream::deployment);
    CHECK_THROWS_AS(deploy_cluster(0, 1.0, rng), InvalidConfig);
    CHECK_THROWS_AS(deploy_cluster(3, -1.0, rng), InvalidConfig);
}

TEST_CASE("deploy_cluster is uniform in area")
{
    // E[rho^2] = R^2 / 2 for the uniform disk law.
    auto rng = make_stream(3, Stream::deployment);
    const auto nodes = deploy_cluster(100000, 1.0, rng);
    double sum = 0.0;
    for (const auto& p : nodes) {
        sum += p.rho * p.rho;
    }
    CHECK(sum / 1e5 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("deploy_cluster is reproducible from the seed")
{
    auto a = make_stream(42, Stream::deployment);
    auto b = make_stream(42, Stream::deployment);
    auto c = make_stream(43, Stream::deployment);
    const auto pa = deploy_cluster(50, 250.0, a);
    CHECK(pa == deploy_cluster(50, 250.0, b));
    CHECK(pa != deploy_cluster(50, 250.0, c));
}

TEST_CASE("far_field_distance known values")
{
    CHECK(far_field_distance({0.0, 1.3}, 0.0, 1000.0) == doctest::Approx(1000.0));
    CHECK(far_field_distance({250.0, 0.0}, 0.0, 1000.0) == doctest::Approx(750.0));
    CHECK(far_field_distance({100.0, std::numbers::pi / 3}, 0.0, 1000.0) ==
          doctest::Approx(950.0));
}

TEST_CASE("far_field_holds compares the range with ten node radii")
{
    const std::vector<PolarPoint> nodes{{10.0, 0.0}, {25.0, 1.0}};
    CHECK(far_field_holds(nodes, 250.0));
    CHECK_FALSE(far_field_holds(nodes, 249.0));
}

TEST_CASE("carrier phase of the origin node is a multiple of two pi")
{
    const Destination dest{{1000.0, 0.0}, 0};
    const double psi = carrier_phase({0.0, 0.0}, dest);
    CHECK(psi == doctest::Approx(-2000.0 * std::numbers::pi));
    CHECK(circular_distance(psi) < 1e-9);
}

TEST_CASE("nodes with equal path length share a carrier phase")
{
    const Destination dest{{1000.0, 0.5}, 0};
    // Mirror images about the destination direction have the same delta.
    const PolarPoint p{120.0, 0.5 + 0.7};
    const PolarPoint q{120.0, 0.5 - 0.7};
    CHECK(carrier_phase(p, dest) == doctest::Approx(carrier_phase(q, dest)));
}

TEST_CASE("property: carrier phase cancels the propagation phase")
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> rho(0.0, 250.0);
    std::uniform_real_distribution<double> ang(0.0, two_pi);
    std::uniform_real_distribution<double> range(2500.0, 1e5);
    for (int trial = 0; trial < 2000; ++trial) {
        const PolarPoint node{rho(gen), ang(gen)};
        const Destination dest{{range(gen), ang(gen)}, 0};
        const double sum = carrier_phase(node, dest) +
                           two_pi * far_field_distance(node, dest.location.phi, dest.location.rho);
        REQUIRE(circular_distance(sum) < 1e-9);
        REQUIRE(circular_distance(residual_phase(node, dest)) < 1e-9);
    }
}

TEST_CASE("wrap_angle maps into [0, 2 pi)")
{
    CHECK(wrap_angle(-0.5) == doctest::Approx(two_pi - 0.5));
    CHECK(wrap_angle(two_pi + 0.25) == doctest::Approx(0.25));
    CHECK(wrap_angle(0.0) == 0.0);
}

TEST_CASE("sample_channel with zero shadowing gives unit gains")
{
    auto rng = make_stream(5, Stream::channel);
    const auto ch = sample_channel(20, 0.0, rng);
    for (double a : ch.gains) {
        CHECK(a == 1.0);
    }
}

TEST_CASE("sample_channel log-gain moments match the dB law")
{
    auto rng = make_stream(9, Stream::channel);
    const auto ch = sample_channel(1000000, 16.0, rng);
    std::vector<double> logs;
    logs.reserve(ch.gains.size());
    for (double a : ch.gains) {
        logs.push_back(std::log(a));
    }
    const auto [mean, var] = oracle::two_pass_moments(logs);
    const double expected = 16.0 * std::pow(std::log(10.0) / 10.0, 2);
    CHECK(std::abs(mean) < 0.01 * std::sqrt(expected));
    CHECK(var == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("lognormal_channel_stats agree with the closed form")
{
    for (double div : {10.0, 20.0}) {
        for (double s2 : {0.0, 1.0, 16.0, 36.0}) {
            const auto ref = oracle::lognormal_moments(s2, div);
            const auto st = lognormal_channel_stats(s2, div);
            CHECK(st.mean == doctest::Approx(static_cast<double>(ref.mean)).epsilon(1e-13));
            CHECK(st.variance == doctest::Approx(static_cast<double>(ref.variance)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sample_channel moments match the analytic channel stats")
{
    auto rng = make_stream(10, Stream::channel);
    const auto ch = sample_channel(1000000, 16.0, rng);
    const auto [mean, var] = oracle::two_pass_moments(ch.gains);
    const auto st = lognormal_channel_stats(16.0);
    CHECK(mean == doctest::Approx(st.mean).epsilon(0.01));
    CHECK(var == doctest::Approx(st.variance).epsilon(0.05));
}

TEST_CASE("sample_phase_errors stay within the bound")
{
    auto rng = make_stream(2, Stream::phase);
    const double bound = 5.0 * std::numbers::pi / 180.0;
    const auto pe = sample_phase_errors(10000, bound, rng);
    double lo = 1.0;
    double hi = -1.0;
    for (double e : pe.errors) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    CHECK(lo >= -bound);
    CHECK(hi <= bound);
    CHECK(lo < -0.99 * bound);
    CHECK(hi > 0.99 * bound);
}

TEST_CASE("received_snr coherent sum and cancellation")
{
    const std::vector<double> w{1.0, 1.0};
    const std::vector<double> a{1.0, 1.0};
    CHECK(received_snr(w, a, std::vector<double>{}, 1.0) == doctest::Approx(4.0));
    CHECK(received_snr(w, a, std::vector<double>{0.0, std::numbers::pi}, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("received_snr rejects mismatched lengths and non-positive noise")
{
    const std::vector<double> w{1.0, 1.0};
    const std::vector<double> a{1.0};
    CHECK_THROWS_AS(received_snr(w, a, std::vector<double>{}, 1.0), InvalidInput);
    CHECK_THROWS_AS(received_snr(w, w, std::vector<double>{0.0}, 1.0), InvalidInput);
    CHECK_THROWS_AS(received_snr(w, w, std::vector<double>{}, 0.0), InvalidInput);
}

TEST_CASE("received_snr matches an independent complex sum")
{
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + gen() % 12;
        std::vector<double> w(n), a(n), ph(n);
        std::complex<long double> sum = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = u(gen);
            a[i] = 0.1 + 2.0 * u(gen);
            ph[i] = two_pi * u(gen);
            sum += std::polar<long double>(static_cast<long double>(w[i]) * a[i], ph[i]);
        }
        const double noise = 0.1 + u(gen);
        const double ref = static_cast<double>(std::norm(sum) / noise);
        REQUIRE(received_snr(w, a, ph, noise) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("property: received_snr is invariant under a common phase shift")
{
    std::mt19937_64 gen(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + gen() % 20;
        std::vector<double> w(n), a(n), ph(n), shifted(n);
        const double c = two_pi * u(gen);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = u(gen);
            a[i] = 0.1 + u(gen);
            ph[i] = two_pi * u(gen);
            shifted[i] = ph[i] + c;
        }
        REQUIRE(received_snr(w, a, ph, 1.0) ==
                doctest::Approx(received_snr(w, a, shifted, 1.0)).epsilon(1e-10));
    }
}

TEST_CASE("property: received_snr is monotone in each weight without phase errors")
{
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + gen() % 20;
        std::vector<double> w(n), a(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = u(gen);
            a[i] = 0.05 + u(gen);
        }
        const double before = received_snr(w, a, std::vector<double>{}, 1.0);
        w[gen() % n] += u(gen);
        REQUIRE(received_snr(w, a, std::vector<double>{}, 1.0) >= before);
    }
}

TEST_CASE("received_snr structured overload applies phase errors")
{
    ChannelRealization ch{{1.0, 1.0}, 0.0, 10.0};
    PhaseErrorVector pe{{0.0, std::numbers::pi}};
    const std::vector<double> w{1.0, 1.0};
    CHECK(received_snr(w, ch, pe, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("streams with different tags or substreams differ")
{
    auto a = make_stream(1, Stream::channel, 0);
    auto b = make_stream(1, Stream::channel, 1);
    auto c = make_stream(1, Stream::energy, 0);
    const auto x = a();
    CHECK(x != b());
    CHECK(x != c());
    CHECK(run_seed(1, 0) != run_seed(1, 1));
    CHECK(run_seed(1, 0) == run_seed(1, 0));
}
