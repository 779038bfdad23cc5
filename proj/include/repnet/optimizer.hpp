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
//
// Repeater-count optimization for a single link, code comparison across
// distances, and whole-network evaluation.

#ifndef REPNET_OPTIMIZER_HPP
#define REPNET_OPTIMIZER_HPP

#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "repnet/codes.hpp"
#include "repnet/error_model.hpp"
#include "repnet/graph.hpp"
#include "repnet/metrics.hpp"

namespace repnet {

/// Which figure of merit fills Q in C = n*w/(L*Q).
enum class QualityMetric { SecretRate, Fidelity };

/// The full formula chain evaluated at one (L, w) point.
struct LinkPoint {
    int w = 0;
    double L0 = 0.0;
    double f_u = 0.0;     ///< physical per-station flip rate
    double f_n = 0.0;     ///< physical per-station erasure rate
    double fbar_u = 0.0;  ///< logical per-station flip rate
    double p_succ_station = 1.0;
    double e_A = 0.0;
    double e_B = 0.0;
    double r_inf = 0.0;
    double p_succ = 1.0;  ///< whole-line non-abort probability
    double R = 0.0;
    double Q = 0.0;
    double C = std::numeric_limits<double>::infinity();
    bool feasible = false;  ///< Q > 0
};

/// Evaluates the analytic pipeline for a line of length L with w stations:
/// station rates, code rates, end-node stabilizer error rates, secret
/// fraction, success probability, and the cost-performance ratio.
inline LinkPoint evaluate_link_point(double L, int w, const CodeSpec& code,
                                     const HardwareParams& params,
                                     StabilizerConvention conv = StabilizerConvention::HalfLink,
                                     QualityMetric quality = QualityMetric::SecretRate) {
    if (!(L > 0.0)) throw std::invalid_argument("link length must be positive");
    if (w < 0 || w % 2 != 0) throw std::invalid_argument("station count must be even and >= 0");

    LinkPoint pt;
    pt.w = w;
    pt.L0 = L / static_cast<double>(w + 1);

    StationRates sr = station_rates(params, pt.L0);
    pt.f_u = sr.f_u;
    pt.f_n = sr.f_n;
    CodeRates cr = code.rates(sr.f_u, sr.f_n);
    pt.fbar_u = cr.fbar_u;
    pt.p_succ_station = cr.p_succ;

    // End nodes: transmission runs from A to B, so A only sends and B only
    // receives.
    StationRates ra = node_rates(params, 1, 0, 1, pt.L0);
    StationRates rb = node_rates(params, 1, 1, 0, pt.L0);
    CodeRates ca = code.rates(ra.f_u, ra.f_n);
    CodeRates cb = code.rates(rb.f_u, rb.f_n);

    long s = stations_in_parity(w, conv);
    std::vector<double> sources{p_odd(pt.fbar_u, s), ca.fbar_u, cb.fbar_u};
    pt.e_A = p_odd_tilde(sources);
    pt.e_B = pt.e_A;  // the same three sources feed both end stabilizers

    pt.r_inf = secret_fraction(pt.e_A, pt.e_B);
    pt.p_succ = line_success_probability(cr.p_succ, w, ca.p_succ * cb.p_succ);
    pt.R = effective_secret_fraction(pt.p_succ, pt.r_inf);
    pt.Q = quality == QualityMetric::SecretRate
               ? pt.R
               : pt.p_succ * fidelity_bounds(std::vector<double>{pt.e_A, pt.e_B}).first;
    pt.feasible = pt.Q > 0.0;
    if (pt.feasible) pt.C = cost_performance(CostInputs{code.n, w, L, pt.Q});
    return pt;
}

struct WRange {
    int min = 0;
    int max = 2000;
    int step = 2;
};

struct LinkOptimum {
    bool feasible = false;
    LinkPoint best;                ///< valid only when feasible
    std::vector<LinkPoint> scan;   ///< every evaluated point, ascending w
};

/// Exhaustive scan of even station counts; returns the C-minimizing point
/// (ties broken towards smaller w) together with the whole scan.
inline LinkOptimum optimize_link(double L, const CodeSpec& code, const HardwareParams& params,
                                 WRange range = {},
                                 StabilizerConvention conv = StabilizerConvention::HalfLink,
                                 QualityMetric quality = QualityMetric::SecretRate) {
    if (range.min < 0 || range.max < range.min || range.step <= 0 || range.min % 2 != 0 ||
        range.step % 2 != 0) {
        throw std::invalid_argument("w range must be even, ascending, positive step");
    }
    LinkOptimum opt;
    for (int w = range.min; w <= range.max; w += range.step) {
        LinkPoint pt = evaluate_link_point(L, w, code, params, conv, quality);
        if (pt.feasible && (!opt.feasible || pt.C < opt.best.C)) {
            opt.feasible = true;
            opt.best = pt;
        }
        opt.scan.push_back(std::move(pt));
    }
    return opt;
}

struct CompareRow {
    double L = 0.0;
    std::string code;
    bool feasible = false;
    int w_star = 0;
    double C_star = std::numeric_limits<double>::infinity();
    double L0_star = 0.0;
};

/// Runs optimize_link for every (L, code) pair. Infeasible combinations stay
/// in the table with empty optimum fields; the sweep never aborts.
inline std::vector<CompareRow> compare_codes(const std::vector<double>& L_grid,
                                             const std::vector<CodeSpec>& codes,
                                             const HardwareParams& params, WRange range = {},
                                             StabilizerConvention conv = StabilizerConvention::HalfLink,
                                             QualityMetric quality = QualityMetric::SecretRate) {
    std::vector<CompareRow> table;
    for (double L : L_grid) {
        for (const CodeSpec& code : codes) {
            CompareRow row;
            row.L = L;
            row.code = code.name;
            LinkOptimum opt = optimize_link(L, code, params, range, conv, quality);
            if (opt.feasible) {
                row.feasible = true;
                row.w_star = opt.best.w;
                row.C_star = opt.best.C;
                row.L0_star = opt.best.L0;
            }
            table.push_back(std::move(row));
        }
    }
    return table;
}

enum class WPolicy { Fixed, PerEdgeOptimal };

struct NodeRow {
    VertexId node;
    int degree = 0;
    double e_v = 0.0;
};

struct NetworkReport {
    std::vector<NodeRow> nodes;
    double fidelity_lower = 0.0;
    double fidelity_upper = 1.0;
    double p_succ = 1.0;  ///< whole-network non-abort probability
    std::map<std::pair<VertexId, VertexId>, int> assigned_w;
    size_t edge_count = 0;
    size_t cycle_count = 0;  ///< circuit rank |E| - |V| + components
    int total_repeaters = 0;
    int max_degree = 0;
};

/// Evaluates a whole network: assigns a station count to each edge (as given,
/// or per-edge optimal), then computes every node's stabilizer error rate,
/// the induced fidelity window, and topology summary statistics. Odd station
/// counts in the input are rounded up to even with a warning.
inline NetworkReport evaluate_network(const NetworkGraph& net, const CodeSpec& code,
                                      const HardwareParams& params,
                                      WPolicy policy = WPolicy::Fixed, WRange range = {2, 2000, 2},
                                      StabilizerConvention conv = StabilizerConvention::HalfLink,
                                      QualityMetric quality = QualityMetric::SecretRate) {
    NetworkGraph assigned;
    for (const auto& v : net.vertices()) assigned.add_vertex(v, net.label(v));
    NetworkReport report;
    for (const NetworkEdge& e : net.edges()) {
        int w = e.repeaters;
        if (policy == WPolicy::PerEdgeOptimal) {
            LinkOptimum opt = optimize_link(e.length_km, code, params, range, conv, quality);
            if (!opt.feasible) {
                throw std::runtime_error("no feasible station count for edge (" + e.from + "," +
                                         e.to + ")");
            }
            w = opt.best.w;
        } else if (w % 2 != 0) {
            std::cerr << "warning: edge (" << e.from << "," << e.to << ") has odd w=" << w
                      << ", rounding to " << w + 1 << "\n";
            w += 1;
        }
        assigned.add_edge(e.from, e.to, e.length_km, w);
        report.assigned_w[{e.from, e.to}] = w;
    }

    RepeaterGraph rg = expand_to_repeater_graph(assigned);

    std::map<const LinkChain*, double> fbar_per_link;
    double p_succ = 1.0;
    for (const LinkChain& link : rg.links()) {
        StationRates sr = station_rates(params, link.spacing_km());
        CodeRates cr = code.rates(sr.f_u, sr.f_n);
        fbar_per_link[&link] = cr.fbar_u;
        p_succ *= std::pow(cr.p_succ, static_cast<double>(link.repeater_count()));
    }
    std::map<VertexId, double> node_flip, node_succ;
    for (const VertexId& v : rg.network_nodes()) {
        Degrees d = rg.degrees(v);
        double L0 = 0.0;
        auto links = rg.links_at(v);
        for (const LinkChain* link : links) L0 += link->spacing_km();
        if (!links.empty()) L0 /= static_cast<double>(links.size());
        StationRates nr = node_rates(params, d.total, d.in, d.out, L0);
        CodeRates cn = code.rates(nr.f_u, nr.f_n);
        node_flip[v] = cn.fbar_u;
        p_succ *= cn.p_succ;
    }

    std::vector<double> rates;
    for (const VertexId& v : rg.network_nodes()) {
        NodeRow row;
        row.node = v;
        row.degree = rg.degrees(v).total;
        row.e_v = stabilizer_error_rate(v, rg, fbar_per_link, node_flip, conv);
        rates.push_back(row.e_v);
        report.nodes.push_back(std::move(row));
    }
    auto [lo, hi] = fidelity_bounds(rates);
    report.fidelity_lower = lo;
    report.fidelity_upper = hi;
    report.p_succ = p_succ;

    SimpleGraph topo = assigned.topology();
    report.edge_count = topo.edge_count();
    report.cycle_count = topo.edge_count() + topo.connected_components() - topo.vertex_count();
    report.total_repeaters = assigned.total_repeaters();
    for (const auto& v : assigned.vertices()) {
        report.max_degree = std::max(report.max_degree, assigned.degree(v));
    }
    return report;
}

}  // namespace repnet

#endif  // REPNET_OPTIMIZER_HPP
