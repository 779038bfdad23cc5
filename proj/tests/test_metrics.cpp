// Copyright 2026 The repnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "repnet/metrics.hpp"

using namespace repnet;

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == Catch::Approx(1.0));
    CHECK(binary_entropy(0.11) == Catch::Approx(0.499916).margin(1e-6));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
}

TEST_CASE("secret fraction") {
    CHECK(secret_fraction(0.0, 0.0) == 1.0);
    CHECK(secret_fraction(0.5, 0.0) == 0.0);
    // Past the threshold the fraction floors at zero.
    CHECK(secret_fraction(0.2, 0.2) == 0.0);
    double e = 0.02;
    CHECK(secret_fraction(e, e) == Catch::Approx(1.0 - 2.0 * binary_entropy(e)));
    // Rates above 1/2 are clamped, not rejected.
    CHECK(secret_fraction(0.7, 0.0) == 0.0);
}

TEST_CASE("line success probability") {
    CHECK(line_success_probability(0.9, 2, 0.8) == Catch::Approx(0.81 * 0.8));
    CHECK(line_success_probability(0.5, 0, 1.0) == 1.0);
    CHECK_THROWS_AS(line_success_probability(0.9, -1, 1.0), std::invalid_argument);
}

TEST_CASE("fidelity bounds") {
    auto [lo, hi] = fidelity_bounds(std::vector<double>{0.01, 0.02, 0.03});
    CHECK(lo == Catch::Approx(0.94).margin(1e-12));
    CHECK(hi == Catch::Approx(0.97).margin(1e-12));

    // Six equal rates reproduce the 94% <= F <= 99% shape.
    auto [lo6, hi6] = fidelity_bounds(std::vector<double>(6, 0.01));
    CHECK(lo6 == Catch::Approx(0.94).margin(1e-12));
    CHECK(hi6 == Catch::Approx(0.99).margin(1e-12));

    auto [lo2, hi2] = fidelity_bounds(std::vector<double>{0.6, 0.7});
    CHECK(lo2 == 0.0);  // floored
    CHECK(hi2 == Catch::Approx(0.3));

    CHECK_THROWS_AS(fidelity_bounds(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(fidelity_bounds(std::vector<double>{1.5}), std::invalid_argument);
}

TEST_CASE("cost performance") {
    CHECK(cost_performance({23, 100, 1000.0, 0.5}) == Catch::Approx(4.6));
    CHECK(cost_performance({1, 0, 10.0, 1.0}) == 0.0);
    CHECK(std::isinf(cost_performance({7, 10, 100.0, 0.0})));
    CHECK_THROWS_AS(cost_performance({0, 10, 100.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(cost_performance({7, 10, 0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(cost_performance({7, 10, 100.0, 1.5}), std::invalid_argument);
}

TEST_CASE("stations in parity") {
    CHECK(stations_in_parity(6, StabilizerConvention::HalfLink) == 3);
    CHECK(stations_in_parity(6, StabilizerConvention::FullLink) == 6);
    CHECK(stations_in_parity(0, StabilizerConvention::HalfLink) == 0);
    CHECK_THROWS_AS(stations_in_parity(3, StabilizerConvention::HalfLink),
                    std::invalid_argument);
}

TEST_CASE("stabilizer error rate combines station and node flips") {
    NetworkGraph net;
    net.add_vertex("A");
    net.add_vertex("B");
    net.add_edge("A", "B", 40, 4);
    RepeaterGraph rg = expand_to_repeater_graph(net);

    double fbar = 0.01;
    std::map<VertexId, double> node_flips{{"A", 0.002}, {"B", 0.003}};
    double e = stabilizer_error_rate("A", rg, fbar, node_flips);
    CHECK(e == Catch::Approx(p_odd_tilde(std::vector<double>{p_odd(0.01, 2), 0.002, 0.003})));

    // The per-link variant agrees when every link shares the same rate.
    std::map<const LinkChain*, double> per_link{{&rg.links()[0], fbar}};
    double e2 = stabilizer_error_rate("A", rg, per_link, node_flips);
    CHECK(e2 == Catch::Approx(e).margin(1e-15));

    // Full-link convention doubles the station count in the parity.
    double eD = stabilizer_error_rate("A", rg, fbar, node_flips,
                                      StabilizerConvention::FullLink);
    CHECK(eD == Catch::Approx(p_odd_tilde(std::vector<double>{p_odd(0.01, 4), 0.002, 0.003})));
    CHECK(eD > e);
}

TEST_CASE("error rate increases with degree for identical links") {
    HardwareParams p;
    p.f_P_u = 1e-3;
    p.f_G_u = 1e-3;
    p.f_M_u = 1e-3;

    auto build_star = [&](int degree) {
        NetworkGraph net;
        net.add_vertex("C");
        for (int i = 0; i < degree; ++i) {
            VertexId leaf = "L" + std::to_string(i);
            net.add_vertex(leaf);
            net.add_edge("C", leaf, 10, 2);
        }
        RepeaterGraph rg = expand_to_repeater_graph(net);
        double fbar = station_rates(p, rg.links()[0].spacing_km()).f_u;
        std::map<VertexId, double> flips;
        for (const VertexId& v : rg.network_nodes()) {
            Degrees d = rg.degrees(v);
            flips[v] = node_rates(p, d.total, d.in, d.out, rg.links()[0].spacing_km()).f_u;
        }
        return stabilizer_error_rate("C", rg, fbar, flips);
    };

    double prev = 0.0;
    for (int degree = 1; degree <= 5; ++degree) {
        double e = build_star(degree);
        CHECK(e > prev);
        prev = e;
    }
}
