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

#include <random>
#include <sstream>
#include <vector>

#include "repnet/error_model.hpp"

using namespace repnet;

namespace {

/// Brute-force odd-parity probability over all 2^N outcome patterns.
double p_odd_enumerated(const std::vector<double>& p) {
    double total = 0.0;
    for (uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
        if (std::popcount(mask) % 2 == 0) continue;
        double prob = 1.0;
        for (size_t k = 0; k < p.size(); ++k) {
            prob *= (mask >> k) & 1 ? p[k] : 1.0 - p[k];
        }
        total += prob;
    }
    return total;
}

}  // namespace

TEST_CASE("p_odd basics") {
    CHECK(p_odd(0.0, 5) == 0.0);
    CHECK(p_odd(0.01, 2) == Catch::Approx(0.0198).margin(1e-15));
    CHECK(p_odd(0.5, 3) == Catch::Approx(0.5));
    CHECK(p_odd(0.3, 0) == 0.0);
    CHECK_THROWS_AS(p_odd(1.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(p_odd(0.1, -1), std::invalid_argument);

    // N = 1 must return f itself, with no detour through the closed form.
    for (double f : {0.0, 1e-17, 0.1239871, 0.5, 0.75, 1.0}) {
        CHECK(p_odd(f, 1) == f);
    }
}

TEST_CASE("p_odd_tilde matches enumeration") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> len(0, 16);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> p(len(rng));
        for (double& x : p) x = u(rng);
        CHECK(p_odd_tilde(p) == Catch::Approx(p_odd_enumerated(p)).margin(1e-12));
    }
    CHECK(p_odd_tilde({}) == 0.0);
    CHECK_THROWS_AS(p_odd_tilde(std::vector<double>{1.2}), std::invalid_argument);
}

TEST_CASE("p_odd equals p_odd_tilde with repeated entries") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        double f = u(rng);
        int n = static_cast<int>(rng() % 10) + 2;
        std::vector<double> rep(n, f);
        CHECK(p_odd(f, n) == Catch::Approx(p_odd_tilde(rep)).margin(1e-14));
    }
}

TEST_CASE("transmission failure") {
    HardwareParams p;
    p.f_C = 0.0;
    CHECK(transmission_failure(0.0, p) == Catch::Approx(0.0));
    CHECK(transmission_failure(20.0, p) == Catch::Approx(1.0 - std::exp(-1.0)));
    p.f_C = 0.1;
    CHECK(transmission_failure(0.0, p) == Catch::Approx(0.1));
    CHECK_THROWS_AS(transmission_failure(-1.0, p), std::invalid_argument);

    p.f_T_n_extra = 0.95;
    CHECK(noticed_transmission(200.0, p) == 1.0);  // clamped
}

TEST_CASE("station error vector and rates") {
    HardwareParams p;
    p.f_P_u = 0.02;
    p.f_P_n = 0.01;
    p.f_G_u = 0.03;
    p.f_G_n = 0.004;
    p.f_T_u = 0.05;
    p.f_M_u = 0.006;
    p.f_M_n = 0.002;
    p.f_C = 0.01;

    auto vec = station_error_vector(p, 10.0);
    CHECK(vec[0] == Catch::Approx(p_odd(0.01, 2)));
    CHECK(vec[1] == Catch::Approx(0.015));
    CHECK(vec[2] == Catch::Approx(p_odd(0.015, 3)));
    CHECK(vec[3] == Catch::Approx(p_odd(0.025, 2)));
    CHECK(vec[4] == Catch::Approx(0.003));

    StationRates r = station_rates(p, 10.0);
    CHECK(r.f_u == Catch::Approx(p_odd_tilde(vec)));
    double ftn = noticed_transmission(10.0, p);
    double expected_fn = 1.0 - std::pow(1 - p.f_P_n, 2) * std::pow(1 - p.f_G_n, 3) *
                                   std::pow(1 - ftn, 2) * std::pow(1 - p.f_M_n, 2);
    CHECK(r.f_n == Catch::Approx(expected_fn).margin(1e-15));
}

TEST_CASE("node rates at degree (2,1,1) match station rates bitwise") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0, 0.2);
    for (int trial = 0; trial < 100; ++trial) {
        HardwareParams p;
        p.f_C = u(rng);
        p.f_P_u = u(rng);
        p.f_P_n = u(rng);
        p.f_G_u = u(rng);
        p.f_G_n = u(rng);
        p.f_T_u = u(rng);
        p.f_T_n_extra = u(rng);
        p.f_M_u = u(rng);
        p.f_M_n = u(rng);
        double L0 = 50.0 * u(rng);
        StationRates st = station_rates(p, L0);
        StationRates nd = node_rates(p, 2, 1, 1, L0);
        CHECK(st.f_u == nd.f_u);
        CHECK(st.f_n == nd.f_n);
    }
}

TEST_CASE("node error vector degree scaling") {
    HardwareParams p;
    p.f_P_u = 0.01;
    p.f_G_u = 0.01;
    p.f_T_u = 0.01;
    p.f_M_u = 0.01;
    auto v3 = node_error_vector(p, 3, 1, 2);
    CHECK(v3[0] == Catch::Approx(p_odd(0.005, 2)));
    CHECK(v3[1] == Catch::Approx(p_odd(0.005, 2)));
    CHECK(v3[2] == Catch::Approx(p_odd(0.005, 4)));
    CHECK(v3[3] == Catch::Approx(p_odd(0.005, 2)));
    CHECK(v3[4] == Catch::Approx(0.005));
    CHECK_THROWS_AS(node_error_vector(p, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(node_error_vector(p, 1, -1, 2), std::invalid_argument);
}

TEST_CASE("hardware parameter parsing") {
    std::istringstream good(R"(# defaults
f_C=0.01
f_G_u=1e-4  # inline comment
L_att_km=22
)");
    HardwareParams p = parse_hardware_params(good);
    CHECK(p.f_C == Catch::Approx(0.01));
    CHECK(p.f_G_u == Catch::Approx(1e-4));
    CHECK(p.L_att_km == Catch::Approx(22.0));
    CHECK(p.f_M_u == 0.0);

    std::istringstream bad1("f_X_u=0.1\n");
    CHECK_THROWS_WITH(parse_hardware_params(bad1), Catch::Matchers::ContainsSubstring("f_X_u"));
    std::istringstream bad2("f_C=2.0\n");
    CHECK_THROWS_AS(parse_hardware_params(bad2), std::invalid_argument);
    std::istringstream bad3("f_C\n");
    CHECK_THROWS_WITH(parse_hardware_params(bad3), Catch::Matchers::ContainsSubstring("line 1"));
}
