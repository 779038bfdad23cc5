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
// Command-line front end. Subcommands:
//   optimize-line    sweep (L, code) and report per-pair optima as CSV
//   analyze-network  per-node error rates and fidelity bounds for a network
//   simulate         Monte-Carlo node error rates vs the analytic formulas
//   lc-check         local-complementation equivalence of two topologies
//
// Every output is a pure function of (flags, input files, seed); reruns are
// byte-identical. Exit codes: 0 ok, 1 infeasible or negative result, 2
// usage or IO error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repnet/codes.hpp"
#include "repnet/error_model.hpp"
#include "repnet/graph.hpp"
#include "repnet/metrics.hpp"
#include "repnet/optimizer.hpp"
#include "repnet/oracle.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct CommonOpts {
    std::string params_path;
    std::string network_path;
    std::vector<std::string> codes{"none"};
    std::string l_spec;
    int w_max = 2000;
    long trials = 100000;
    uint64_t seed = 1;
    std::string convention = "A";
    std::string quality = "R";
    std::string w_policy = "fixed";
    std::string out_path;
};

repnet::StabilizerConvention parse_convention(const std::string& c) {
    if (c == "A") return repnet::StabilizerConvention::HalfLink;
    if (c == "D") return repnet::StabilizerConvention::FullLink;
    throw std::runtime_error("convention must be A or D");
}

repnet::QualityMetric parse_quality(const std::string& q) {
    if (q == "R") return repnet::QualityMetric::SecretRate;
    if (q == "fidelity") return repnet::QualityMetric::Fidelity;
    throw std::runtime_error("quality must be R or fidelity");
}

/// "100,200,400" or "100:2000:100" (inclusive range).
std::vector<double> parse_l_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double start, stop, step;
        char c1, c2;
        std::istringstream ss(spec);
        if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0) {
            throw std::runtime_error("bad --L range '" + spec + "', expected start:stop:step");
        }
        for (double L = start; L <= stop + 1e-9; L += step) out.push_back(L);
    } else {
        std::istringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw std::runtime_error("bad --L entry '" + item + "'");
            }
        }
    }
    if (out.empty()) throw std::runtime_error("--L grid is empty");
    for (double L : out) {
        if (!(L > 0)) throw std::runtime_error("--L entries must be positive");
    }
    return out;
}

repnet::HardwareParams load_params(const std::string& path) {
    if (path.empty()) return repnet::HardwareParams{};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open params file '" + path + "'");
    return repnet::parse_hardware_params(in);
}

repnet::NetworkGraph load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open network file '" + path + "'");
    return repnet::parse_network(in);
}

/// Writes atomically (temp file + rename) so failures leave no partial output.
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file '" + tmp + "'");
        f << content;
        if (!f) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + out_path + "'");
    }
}

std::string header(const std::string& subcommand, const CommonOpts& o,
                   const std::vector<std::string>& extra = {}) {
    std::ostringstream h;
    h << "# repnet " << kVersion << "\n";
    h << "# command: " << subcommand << "\n";
    if (!o.params_path.empty()) h << "# params: " << o.params_path << "\n";
    if (!o.network_path.empty()) h << "# network: " << o.network_path << "\n";
    h << "# codes:";
    for (const auto& c : o.codes) h << " " << c;
    h << "\n";
    if (!o.l_spec.empty()) h << "# L: " << o.l_spec << "\n";
    h << "# w_max: " << o.w_max << "\n";
    h << "# convention: " << o.convention << "\n";
    h << "# quality: " << o.quality << "\n";
    for (const auto& line : extra) h << "# " << line << "\n";
    return h.str();
}

int cmd_optimize_line(const CommonOpts& o) {
    auto params = load_params(o.params_path);
    auto grid = parse_l_grid(o.l_spec);
    std::vector<repnet::CodeSpec> codes;
    for (const auto& sel : o.codes) codes.push_back(repnet::CodeSpec::parse(sel));
    auto conv = parse_convention(o.convention);
    auto quality = parse_quality(o.quality);
    if (o.w_max < 2) throw std::runtime_error("--w-max must be >= 2");

    std::ostringstream csv;
    csv << header("optimize-line", o);
    csv << "L_km,code,w,L0_km,f_u,f_n,fbar_u,P_succ,e_A,e_B,r_inf,R,C\n";
    bool any_feasible = false;
    for (double L : grid) {
        for (const repnet::CodeSpec& code : codes) {
            repnet::LinkOptimum opt =
                repnet::optimize_link(L, code, params, {2, o.w_max, 2}, conv, quality);
            csv << fmt(L) << "," << code.name << ",";
            if (opt.feasible) {
                any_feasible = true;
                const repnet::LinkPoint& b = opt.best;
                csv << b.w << "," << fmt(b.L0) << "," << fmt(b.f_u) << "," << fmt(b.f_n) << ","
                    << fmt(b.fbar_u) << "," << fmt(b.p_succ) << "," << fmt(b.e_A) << ","
                    << fmt(b.e_B) << "," << fmt(b.r_inf) << "," << fmt(b.R) << "," << fmt(b.C);
            } else {
                csv << ",,,,,,,,,,";
            }
            csv << "\n";
        }
    }
    emit(o.out_path, csv.str());
    return any_feasible ? 0 : 1;
}

int cmd_analyze_network(const CommonOpts& o) {
    auto params = load_params(o.params_path);
    auto net = load_network(o.network_path);
    auto code = repnet::CodeSpec::parse(o.codes.at(0));
    auto conv = parse_convention(o.convention);
    auto quality = parse_quality(o.quality);

    bool per_edge_optimal = o.w_policy == "optimal";
    if (!per_edge_optimal && o.w_policy != "fixed") {
        throw std::runtime_error("--w-policy must be 'fixed' or 'optimal'");
    }
    repnet::NetworkReport report = repnet::evaluate_network(
        net, code, params,
        per_edge_optimal ? repnet::WPolicy::PerEdgeOptimal : repnet::WPolicy::Fixed,
        {2, o.w_max, 2}, conv, quality);

    std::ostringstream csv;
    csv << header("analyze-network", o,
                  {"edges: " + std::to_string(report.edge_count),
                   "cycles: " + std::to_string(report.cycle_count),
                   "repeaters: " + std::to_string(report.total_repeaters),
                   "max_degree: " + std::to_string(report.max_degree),
                   "P_succ: " + fmt(report.p_succ)});
    csv << "node,degree,e_v\n";
    for (const repnet::NodeRow& row : report.nodes) {
        csv << row.node << "," << row.degree << "," << fmt(row.e_v) << "\n";
    }
    csv << "fidelity_lower,," << fmt(report.fidelity_lower) << "\n";
    csv << "fidelity_upper,," << fmt(report.fidelity_upper) << "\n";
    emit(o.out_path, csv.str());
    return 0;
}

int cmd_simulate(const CommonOpts& o) {
    auto params = load_params(o.params_path);
    auto net = load_network(o.network_path);
    auto code = repnet::CodeSpec::parse(o.codes.at(0));
    auto conv = parse_convention(o.convention);
    if (o.trials < 1) throw std::runtime_error("--trials must be positive");

    // Analytic rates via the same pipeline as analyze-network.
    repnet::NetworkReport report =
        repnet::evaluate_network(net, code, params, repnet::WPolicy::Fixed, {2, o.w_max, 2}, conv);
    const repnet::CodeSpec* code_ptr = code.name == "none" ? nullptr : &code;
    auto estimates =
        repnet::monte_carlo_node_error(net, params, o.trials, o.seed, code_ptr, conv);

    std::ostringstream csv;
    csv << header("simulate", o,
                  {"trials: " + std::to_string(o.trials), "seed: " + std::to_string(o.seed)});
    csv << "node,e_analytic,e_hat,std_err,trials_kept,trials_aborted,status\n";
    bool all_ok = true;
    for (size_t i = 0; i < estimates.size(); ++i) {
        const repnet::NodeEstimate& est = estimates[i];
        double analytic = report.nodes.at(i).e_v;
        bool ok = std::abs(est.e_hat - analytic) <= 3.0 * std::max(est.std_err, 1e-12);
        all_ok = all_ok && ok;
        csv << est.node << "," << fmt(analytic) << "," << fmt(est.e_hat) << ","
            << fmt(est.std_err) << "," << est.trials_kept << "," << est.trials_aborted << ","
            << (ok ? "ok" : "deviation") << "\n";
    }
    emit(o.out_path, csv.str());
    return all_ok ? 0 : 1;
}

int cmd_lc_check(const std::string& path1, const std::string& path2, size_t max_states) {
    repnet::SimpleGraph g1 = load_network(path1).topology();
    repnet::SimpleGraph g2 = load_network(path2).topology();
    repnet::LuWitness w = repnet::check_lu_equivalence(g1, g2, max_states);
    switch (w.status) {
        case repnet::LuWitness::Status::Equivalent: {
            std::cout << "equivalent; local complementations:";
            for (const auto& v : w.sequence) std::cout << " " << v;
            std::cout << "\n";
            return 0;
        }
        case repnet::LuWitness::Status::NotEquivalent:
            std::cout << "not equivalent\n";
            return 1;
        default:
            std::cout << "not found within bound\n";
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-state repeater network planner"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("repnet ") + kVersion);

    CommonOpts o;
    auto add_common = [&](CLI::App* sub, bool needs_network) {
        sub->add_option("--params", o.params_path, "hardware parameter file (key=value)");
        auto* net = sub->add_option("--network", o.network_path, "network description file");
        if (needs_network) net->required();
        sub->add_option("--code", o.codes, "code selector: none | steane:<n_max> | golay");
        sub->add_option("--w-max", o.w_max, "largest station count scanned");
        sub->add_option("--seed", o.seed, "PRNG seed");
        sub->add_option("--convention", o.convention, "stabilizer parity convention: A | D");
        sub->add_option("--quality", o.quality, "quality metric for C: R | fidelity");
        sub->add_option("--out", o.out_path, "output CSV path (default: stdout)");
    };

    auto* opt_line = app.add_subcommand("optimize-line", "sweep L and codes, emit optima CSV");
    add_common(opt_line, false);
    opt_line->add_option("--L", o.l_spec, "distance grid: list 'a,b,c' or range 'a:b:step'")
        ->required();

    auto* analyze = app.add_subcommand("analyze-network", "per-node error rates for a network");
    add_common(analyze, true);
    analyze->add_option("--w-policy", o.w_policy, "station policy: 'fixed' (default) or 'optimal'");

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo vs analytic node error rates");
    add_common(simulate, true);
    simulate->add_option("--trials", o.trials, "Monte-Carlo trials");

    std::string lc1, lc2;
    size_t lc_bound = 200000;
    auto* lc = app.add_subcommand("lc-check", "local-complementation equivalence of topologies");
    lc->add_option("graph1", lc1, "first network file")->required();
    lc->add_option("graph2", lc2, "second network file")->required();
    lc->add_option("--max-states", lc_bound, "search bound on visited graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (opt_line->parsed()) return cmd_optimize_line(o);
        if (analyze->parsed()) return cmd_analyze_network(o);
        if (simulate->parsed()) return cmd_simulate(o);
        if (lc->parsed()) return cmd_lc_check(lc1, lc2, lc_bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
