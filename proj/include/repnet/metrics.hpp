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

#ifndef REPNET_METRICS_HPP
#define REPNET_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "repnet/error_model.hpp"
#include "repnet/graph.hpp"

namespace repnet {

/// Which vertices of a link count towards the byproduct parity of a main
/// stabilizer: half the stations (the derivation's own count) or all of them
/// (the generalized formula's literal reading). HalfLink is the default; the
/// alternative is kept behind a flag rather than silently dropped.
enum class StabilizerConvention { HalfLink, FullLink };

inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binary_entropy: p out of [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Caps a stabilizer error rate at 1/2 (parity formulas cannot exceed it;
/// user-supplied rates might).
inline double clamp_error_rate(double e) {
    if (e > 0.5) {
        std::cerr << "warning: error rate " << e << " clamped to 0.5\n";
        return 0.5;
    }
    return e;
}

/// Asymptotic BB84 secret fraction for end-node error rates e_A, e_B.
inline double secret_fraction(double e_A, double e_B) {
    e_A = clamp_error_rate(e_A);
    e_B = clamp_error_rate(e_B);
    return std::max(1.0 - binary_entropy(e_A) - binary_entropy(e_B), 0.0);
}

inline double effective_secret_fraction(double p_succ, double r_inf) { return p_succ * r_inf; }

/// Non-abort probability of a whole line: independent product over the w
/// stations and the two end nodes.
inline double line_success_probability(double p_succ_station, int w, double p_succ_endnodes) {
    if (w < 0) throw std::invalid_argument("negative station count");
    return std::pow(p_succ_station, static_cast<double>(w)) * p_succ_endnodes;
}

/// Fidelity window implied by the per-node stabilizer error rates.
inline std::pair<double, double> fidelity_bounds(std::span<const double> e) {
    if (e.empty()) throw std::invalid_argument("fidelity_bounds: empty rate list");
    double sum = 0.0, mx = 0.0;
    for (double ev : e) {
        if (!(ev >= 0.0 && ev <= 1.0)) throw std::invalid_argument("rate out of [0,1]");
        sum += ev;
        mx = std::max(mx, ev);
    }
    return {std::max(0.0, 1.0 - sum), 1.0 - mx};
}

struct CostInputs {
    int n = 1;       ///< qubits per station (code block length)
    int w = 0;       ///< repeater stations
    double L = 1.0;  ///< total distance, km
    double Q = 1.0;  ///< quality factor
};

/// Cost-performance ratio C = n*w/(L*Q), in qubits per km per unit quality.
/// Q = 0 yields +infinity: the protocol produces nothing.
inline double cost_performance(const CostInputs& ci) {
    if (ci.n < 1 || ci.w < 0 || !(ci.L > 0.0) || ci.Q < 0.0 || ci.Q > 1.0) {
        throw std::invalid_argument("cost_performance: invalid inputs");
    }
    if (ci.Q == 0.0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(ci.n) * ci.w / (ci.L * ci.Q);
}

/// Number of stations on a link that enter the byproduct parity of a main
/// stabilizer, under the selected convention. Requires an even station count.
inline long stations_in_parity(int w, StabilizerConvention conv) {
    if (w % 2 != 0) throw std::invalid_argument("odd repeater count unsupported");
    return conv == StabilizerConvention::HalfLink ? w / 2 : w;
}

/// Stabilizer error rate at node v from a uniform per-station logical flip
/// rate plus per-node logical flip rates (the node's own and each
/// neighbour's).
inline double stabilizer_error_rate(const VertexId& v, const RepeaterGraph& rg,
                                    double fbar_station,
                                    const std::map<VertexId, double>& node_flip_rates,
                                    StabilizerConvention conv = StabilizerConvention::HalfLink) {
    long stations = 0;
    std::vector<double> sources;
    for (const LinkChain* link : rg.links_at(v)) {
        stations += stations_in_parity(link->repeater_count(), conv);
        const VertexId& other = link->from == v ? link->to : link->from;
        sources.push_back(node_flip_rates.at(other));
    }
    sources.insert(sources.begin(), {p_odd(fbar_station, stations), node_flip_rates.at(v)});
    return p_odd_tilde(sources);
}

/// Variant with a per-link station flip rate, for networks whose links have
/// different spacings.
inline double stabilizer_error_rate(const VertexId& v, const RepeaterGraph& rg,
                                    const std::map<const LinkChain*, double>& fbar_per_link,
                                    const std::map<VertexId, double>& node_flip_rates,
                                    StabilizerConvention conv = StabilizerConvention::HalfLink) {
    std::vector<double> sources{node_flip_rates.at(v)};
    for (const LinkChain* link : rg.links_at(v)) {
        long stations = stations_in_parity(link->repeater_count(), conv);
        sources.push_back(p_odd(fbar_per_link.at(link), stations));
        const VertexId& other = link->from == v ? link->to : link->from;
        sources.push_back(node_flip_rates.at(other));
    }
    return p_odd_tilde(sources);
}

}  // namespace repnet

#endif  // REPNET_METRICS_HPP
