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

#ifndef REPNET_ERROR_MODEL_HPP
#define REPNET_ERROR_MODEL_HPP

#include <array>
#include <cmath>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

namespace repnet {

/// Per-component failure probabilities. "_u" entries are unnoticed (silent
/// outcome flips), "_n" entries are noticed (heralded erasures).
struct HardwareParams {
    double f_C = 0.0;         ///< fiber coupling failure probability
    double L_att_km = 20.0;   ///< fiber attenuation length
    double f_P_u = 0.0;       ///< preparation, unnoticed
    double f_P_n = 0.0;       ///< preparation, noticed
    double f_G_u = 0.0;       ///< gate, unnoticed
    double f_G_n = 0.0;       ///< gate, noticed
    double f_T_u = 0.0;       ///< residual channel depolarization, unnoticed
    double f_T_n_extra = 0.0; ///< additive noticed transmission failure on top of fiber loss
    double f_M_u = 0.0;       ///< measurement, unnoticed
    double f_M_n = 0.0;       ///< measurement, noticed

    void validate() const {
        auto chk = [](double p, const char* name) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument(std::string(name) + " must be in [0,1]");
            }
        };
        chk(f_C, "f_C");
        chk(f_P_u, "f_P_u");
        chk(f_P_n, "f_P_n");
        chk(f_G_u, "f_G_u");
        chk(f_G_n, "f_G_n");
        chk(f_T_u, "f_T_u");
        chk(f_T_n_extra, "f_T_n_extra");
        chk(f_M_u, "f_M_u");
        chk(f_M_n, "f_M_n");
        if (!(L_att_km > 0.0)) throw std::invalid_argument("L_att_km must be positive");
    }
};

struct StationRates {
    double f_u = 0.0;  ///< unnoticed outcome-flip probability, in [0, 1/2]
    double f_n = 0.0;  ///< noticed erasure probability, in [0, 1]
};

/// Heralded transmission failure over a fiber segment of length L0.
inline double transmission_failure(double L0_km, const HardwareParams& p) {
    if (L0_km < 0.0) throw std::invalid_argument("negative segment length");
    return 1.0 - (1.0 - p.f_C) * std::exp(-L0_km / p.L_att_km);
}

/// Probability of an odd number of successes among N i.i.d. Bernoulli(f)
/// trials. N == 1 returns f exactly (no round trip through the closed form).
inline double p_odd(double f, long n) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("p_odd: f out of [0,1]");
    if (n < 0) throw std::invalid_argument("p_odd: negative N");
    if (n == 1) return f;
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * f, static_cast<double>(n)));
}

/// Odd-parity probability for independent, non-identical Bernoulli trials.
/// Empty input yields 0.
inline double p_odd_tilde(std::span<const double> p) {
    double prod = 1.0;
    for (double pk : p) {
        if (!(pk >= 0.0 && pk <= 1.0)) {
            throw std::invalid_argument("p_odd_tilde: entry out of [0,1]");
        }
        prod *= 1.0 - 2.0 * pk;
    }
    return 0.5 * (1.0 - prod);
}

/// Noticed transmission rate for a segment: heralded fiber loss plus the
/// configured additive extra, clamped to [0,1].
inline double noticed_transmission(double L0_km, const HardwareParams& p) {
    double f = transmission_failure(L0_km, p) + p.f_T_n_extra;
    return f > 1.0 ? 1.0 : f;
}

/// The five independent sources that can silently flip the measurement
/// outcome of a repeater station.
inline std::array<double, 5> station_error_vector(const HardwareParams& p, double L0_km) {
    (void)L0_km;  // the unnoticed channel component f_T_u is length-independent
    return {
        p_odd(p.f_P_u / 2.0, 2),
        (p.f_P_n + p.f_P_u) / 2.0,
        p_odd(p.f_G_u / 2.0, 3),
        p_odd(p.f_T_u / 2.0, 2),
        p.f_M_u / 2.0,
    };
}

/// Degree-generalized flip sources for a network node with the given degree,
/// in-degree, and out-degree.
inline std::array<double, 5> node_error_vector(const HardwareParams& p, int deg, int deg_in,
                                               int deg_out) {
    if (deg != deg_in + deg_out || deg_in < 0 || deg_out < 0) {
        throw std::invalid_argument("inconsistent degrees");
    }
    return {
        p_odd(p.f_P_u / 2.0, 1 + deg_in),
        p_odd((p.f_P_n + p.f_P_u) / 2.0, deg_out),
        p_odd(p.f_G_u / 2.0, 1 + deg),
        p_odd(p.f_T_u / 2.0, 1 + deg_in),
        p.f_M_u / 2.0,
    };
}

inline StationRates station_rates(const HardwareParams& p, double L0_km) {
    auto vec = station_error_vector(p, L0_km);
    double f_T_n = noticed_transmission(L0_km, p);
    StationRates r;
    r.f_u = p_odd_tilde(vec);
    r.f_n = 1.0 - std::pow(1.0 - p.f_P_n, 2.0) * std::pow(1.0 - p.f_G_n, 3.0) *
                      std::pow(1.0 - f_T_n, 2.0) * std::pow(1.0 - p.f_M_n, 2.0);
    return r;
}

inline StationRates node_rates(const HardwareParams& p, int deg, int deg_in, int deg_out,
                               double L0_km) {
    auto vec = node_error_vector(p, deg, deg_in, deg_out);
    double f_T_n = noticed_transmission(L0_km, p);
    StationRates r;
    r.f_u = p_odd_tilde(vec);
    r.f_n = 1.0 - std::pow(1.0 - p.f_P_n, static_cast<double>(1 + deg_in)) *
                      std::pow(1.0 - p.f_G_n, static_cast<double>(1 + deg)) *
                      std::pow(1.0 - f_T_n, static_cast<double>(1 + deg_in)) *
                      std::pow(1.0 - p.f_M_n, static_cast<double>(1 + deg_in));
    return r;
}

/// Parses the key=value hardware parameter format. Unknown keys are rejected;
/// missing keys keep their defaults (all zero, L_att_km = 20).
inline HardwareParams parse_hardware_params(std::istream& in) {
    HardwareParams p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kv;
        if (!(ls >> kv)) continue;
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected key=value");
        }
        std::string key = kv.substr(0, eq);
        double val;
        try {
            val = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad value for '" + key +
                                     "'");
        }
        if (key == "f_C") p.f_C = val;
        else if (key == "L_att_km") p.L_att_km = val;
        else if (key == "f_P_u") p.f_P_u = val;
        else if (key == "f_P_n") p.f_P_n = val;
        else if (key == "f_G_u") p.f_G_u = val;
        else if (key == "f_G_n") p.f_G_n = val;
        else if (key == "f_T_u") p.f_T_u = val;
        else if (key == "f_T_n_extra") p.f_T_n_extra = val;
        else if (key == "f_M_u") p.f_M_u = val;
        else if (key == "f_M_n") p.f_M_n = val;
        else {
            throw std::runtime_error("line " + std::to_string(lineno) + ": unknown key '" + key +
                                     "'");
        }
    }
    p.validate();
    return p;
}

}  // namespace repnet

#endif  // REPNET_ERROR_MODEL_HPP
