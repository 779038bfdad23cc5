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
// Independent ground truth for the analytic pipeline: exact stabilizer
// simulation of the graph-state repeater protocol, Pauli error injection via
// frame tracking, Monte-Carlo sampling of the per-station error sources, and
// a local-complementation search for local-unitary equivalence of graphs.

#ifndef REPNET_ORACLE_HPP
#define REPNET_ORACLE_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "repnet/codes.hpp"
#include "repnet/error_model.hpp"
#include "repnet/graph.hpp"
#include "repnet/metrics.hpp"
#include "repnet/tableau.hpp"

namespace repnet {

enum class PauliKind { X, Z, Y };

/// Where an injected error strikes relative to the qubit's lifetime:
/// right after preparation (so it propagates through the qubit's CZ gates) or
/// right before its measurement.
enum class ErrorStage { AfterPrepare, BeforeMeasure };

struct PauliError {
    VertexId qubit;
    PauliKind kind = PauliKind::Z;
    ErrorStage stage = ErrorStage::BeforeMeasure;
    bool noticed = false;
};

/// Error propagation through a CZ gate: Z stays on its leg, X stays on its
/// leg and adds Z on the other. Y behaves as the composite.
struct CzLegError {
    bool x = false;
    bool z = false;
};

inline std::pair<CzLegError, CzLegError> propagate_through_cz(CzLegError in, int input_leg) {
    CzLegError same = in;
    CzLegError other;
    other.z = in.x;
    if (input_leg == 0) return {same, other};
    return {other, same};
}

struct ProtocolTrace {
    std::vector<std::pair<VertexId, int>> outcomes;    ///< +1, -1, or 0 for '?'
    std::vector<std::pair<VertexId, bool>> byproducts; ///< node -> Z applied
    std::vector<VertexId> node_order;                  ///< qubit order of final_state
    StabilizerTableau final_state{0};                  ///< restricted to network nodes
    bool matches_target = false;

    std::string dump() const {
        std::ostringstream os;
        for (const auto& [id, outcome] : outcomes) {
            os << "station " << id << " outcome "
               << (outcome == 0 ? "?" : (outcome > 0 ? "+1" : "-1")) << "\n";
        }
        for (const auto& [node, applied] : byproducts) {
            os << "byproduct " << node << " " << (applied ? "Z" : "I") << "\n";
        }
        return os.str();
    }
};

namespace detail {

struct QubitIndex {
    std::vector<VertexId> order;         // sorted vertex ids
    std::map<VertexId, size_t> to_index;

    explicit QubitIndex(const SimpleGraph& g) : order(g.vertices()) {
        if (order.size() > 64) throw std::invalid_argument("oracle limited to 64 qubits");
        for (size_t i = 0; i < order.size(); ++i) to_index[order[i]] = i;
    }
};

inline StabilizerTableau graph_state_of(const SimpleGraph& g, const QubitIndex& idx) {
    std::vector<uint64_t> adj(idx.order.size(), 0);
    for (size_t i = 0; i < idx.order.size(); ++i) {
        for (const auto& nb : g.neighbors(idx.order[i])) {
            adj[i] |= 1ull << idx.to_index.at(nb);
        }
    }
    return StabilizerTableau::graph_state(adj);
}

}  // namespace detail

/// Runs the two-step protocol: build the expanded repeater-graph state
/// (batch or streaming order), inject the listed errors, measure every
/// repeater station in the X basis, and apply byproduct corrections from the
/// main-stabilizer outcome parities. Injected errors are tracked as a Pauli
/// frame on top of the noiseless tableau, propagated through each CZ with
/// the standard rules, so recorded outcomes are the noiseless outcomes XOR
/// the frame's effect.
inline ProtocolTrace run_protocol(const NetworkGraph& net, uint64_t seed,
                                  const std::vector<PauliError>& errors = {},
                                  bool streaming = false) {
    RepeaterGraph rg = expand_to_repeater_graph(net);
    detail::QubitIndex idx(rg.graph());
    const size_t n = idx.order.size();
    std::mt19937_64 rng(seed);

    // Validate injected errors and group them.
    uint64_t frame_x = 0, frame_z = 0;
    std::map<size_t, std::pair<uint64_t, uint64_t>> late;  // qubit -> (x,z) before measurement
    std::set<VertexId> noticed_at;
    auto kind_bits = [](PauliKind k) -> std::pair<uint64_t, uint64_t> {
        switch (k) {
            case PauliKind::X: return {1, 0};
            case PauliKind::Z: return {0, 1};
            default: return {1, 1};
        }
    };
    for (const PauliError& e : errors) {
        auto it = idx.to_index.find(e.qubit);
        if (it == idx.to_index.end()) throw std::invalid_argument("unknown qubit '" + e.qubit + "'");
        auto [bx, bz] = kind_bits(e.kind);
        if (e.stage == ErrorStage::AfterPrepare) {
            frame_x ^= bx << it->second;
            frame_z ^= bz << it->second;
        } else {
            auto& acc = late[it->second];
            acc.first ^= bx << it->second;
            acc.second ^= bz << it->second;
        }
        if (e.noticed) {
            noticed_at.insert(e.qubit);
            // A noticed event on a station also erases the next station
            // downstream: its error has propagated there through the CZ.
            for (const LinkChain& link : rg.links()) {
                auto pos = std::find(link.stations.begin(), link.stations.end(), e.qubit);
                if (pos != link.stations.end() && pos + 1 != link.stations.end()) {
                    noticed_at.insert(*(pos + 1));
                }
            }
        }
    }

    StabilizerTableau t = StabilizerTableau::plus_states(n);
    auto edges = rg.graph().edges();  // sorted

    std::map<VertexId, int> recorded;
    auto measure_station = [&](const VertexId& r) {
        size_t q = idx.to_index.at(r);
        if (auto it = late.find(q); it != late.end()) {
            frame_x ^= it->second.first;
            frame_z ^= it->second.second;
            late.erase(it);
        }
        int base = t.measure_x(q, rng);
        int rec = base ^ static_cast<int>((frame_z >> q) & 1);
        frame_x &= ~(1ull << q);  // X acts trivially on the measured qubit
        recorded[r] = noticed_at.count(r) ? 0 : (rec ? -1 : +1);
    };

    auto apply_cz_with_frame = [&](const VertexId& a, const VertexId& b) {
        size_t qa = idx.to_index.at(a), qb = idx.to_index.at(b);
        t.apply_cz(qa, qb);
        uint64_t fxa = (frame_x >> qa) & 1, fxb = (frame_x >> qb) & 1;
        frame_z ^= fxb << qa;
        frame_z ^= fxa << qb;
    };

    if (streaming) {
        std::map<VertexId, int> pending;
        for (const auto& v : rg.graph().vertices()) pending[v] = rg.graph().degree(v);
        for (const auto& [a, b] : edges) {
            apply_cz_with_frame(a, b);
            for (const VertexId& v : {a, b}) {
                if (--pending[v] == 0 && rg.is_repeater(v)) measure_station(v);
            }
        }
    } else {
        for (const auto& [a, b] : edges) apply_cz_with_frame(a, b);
        for (const VertexId& r : rg.repeaters()) measure_station(r);
    }
    // Late errors on network nodes (never measured) land now.
    for (const auto& [q, xz] : late) {
        frame_x ^= xz.first;
        frame_z ^= xz.second;
    }

    ProtocolTrace trace;
    for (const VertexId& r : rg.repeaters()) trace.outcomes.emplace_back(r, recorded.at(r));

    // Byproducts: parity of recorded outcomes over each main stabilizer.
    for (const VertexId& v : rg.network_nodes()) {
        int parity = 0;
        for (const VertexId& s : rg.main_stabilizer_support(v)) {
            if (s == v) continue;
            parity ^= recorded.at(s) == -1 ? 1 : 0;
        }
        trace.byproducts.emplace_back(v, parity != 0);
        if (parity != 0) frame_z ^= 1ull << idx.to_index.at(v);
    }

    // Fold the residual frame into the state and restrict to network nodes.
    t.apply_pauli(frame_x, frame_z);
    uint64_t keep = 0;
    for (const VertexId& v : rg.network_nodes()) keep |= 1ull << idx.to_index.at(v);
    trace.final_state = t.restricted_to(keep);
    trace.node_order = rg.network_nodes();

    SimpleGraph target = net.topology();
    detail::QubitIndex node_idx(target);
    trace.matches_target = trace.final_state.same_state(detail::graph_state_of(target, node_idx));
    return trace;
}

/// Per-node empirical stabilizer error rate.
struct NodeEstimate {
    VertexId node;
    double e_hat = 0.0;
    double std_err = 0.0;
    long trials_kept = 0;
    long trials_aborted = 0;
};

/// Samples the per-station flip sources (the five-entry vectors of the error
/// model, or per-block logical rates when a code is given), combines them
/// over each main-stabilizer support together with the end nodes' own rates,
/// and tallies parity flips. Noticed events abort the trial.
inline std::vector<NodeEstimate> monte_carlo_node_error(
    const NetworkGraph& net, const HardwareParams& params, long trials, uint64_t seed,
    const CodeSpec* code = nullptr,
    StabilizerConvention conv = StabilizerConvention::HalfLink) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    RepeaterGraph rg = expand_to_repeater_graph(net);

    struct Site {
        std::vector<double> flip_sources;  // sample parity of these
        double flip_rate = 0.0;            // or sample one Bernoulli (encoded)
        double notice_rate = 0.0;
        bool logical = false;
    };
    std::vector<VertexId> sites;      // stations then nodes, fixed order
    std::vector<Site> site_cfg;
    std::map<VertexId, size_t> site_of;

    auto add_site = [&](const VertexId& v, const std::array<double, 5>& vec, double f_u,
                        double f_n) {
        Site s;
        if (code != nullptr) {
            CodeRates cr = code->rates(f_u, f_n);
            s.logical = true;
            s.flip_rate = cr.fbar_u;
            s.notice_rate = 1.0 - cr.p_succ;
        } else {
            s.flip_sources.assign(vec.begin(), vec.end());
            s.notice_rate = f_n;
        }
        site_of[v] = sites.size();
        sites.push_back(v);
        site_cfg.push_back(std::move(s));
    };

    for (const LinkChain& link : rg.links()) {
        double L0 = link.spacing_km();
        StationRates sr = station_rates(params, L0);
        for (const VertexId& st : link.stations) {
            add_site(st, station_error_vector(params, L0), sr.f_u, sr.f_n);
        }
    }
    for (const VertexId& v : rg.network_nodes()) {
        Degrees d = rg.degrees(v);
        double L0 = 0.0;
        auto links = rg.links_at(v);
        for (const LinkChain* link : links) L0 += link->spacing_km();
        if (!links.empty()) L0 /= static_cast<double>(links.size());
        StationRates nr = node_rates(params, d.total, d.in, d.out, L0);
        add_site(v, node_error_vector(params, d.total, d.in, d.out), nr.f_u, nr.f_n);
    }

    // Precompute, per network node, the site indices whose flips enter the
    // stabilizer parity: supporting stations, the node itself, and its
    // neighbour nodes.
    std::vector<VertexId> nodes = rg.network_nodes();
    std::vector<std::vector<size_t>> parity_sites(nodes.size());
    for (size_t vi = 0; vi < nodes.size(); ++vi) {
        const VertexId& v = nodes[vi];
        std::vector<size_t>& list = parity_sites[vi];
        if (conv == StabilizerConvention::HalfLink) {
            for (const VertexId& s : rg.main_stabilizer_support(v)) {
                if (s != v) list.push_back(site_of.at(s));
            }
        } else {
            for (const LinkChain* link : rg.links_at(v)) {
                if (link->repeater_count() % 2 != 0) {
                    throw std::invalid_argument("odd repeater count unsupported");
                }
                for (const VertexId& s : link->stations) list.push_back(site_of.at(s));
            }
        }
        list.push_back(site_of.at(v));
        for (const LinkChain* link : rg.links_at(v)) {
            list.push_back(site_of.at(link->from == v ? link->to : link->from));
        }
    }

    std::vector<long> flips_seen(nodes.size(), 0);
    long kept = 0, aborted = 0;
    std::vector<uint8_t> flip(sites.size());

    const long block_size = 1 << 16;
    for (long block = 0, done = 0; done < trials; ++block) {
        std::seed_seq sq{seed, static_cast<uint64_t>(block)};
        std::mt19937_64 rng(sq);
        auto uniform = [&]() { return (rng() >> 11) * 0x1.0p-53; };
        long in_block = std::min(block_size, trials - done);
        done += in_block;
        for (long i = 0; i < in_block; ++i) {
            bool abort = false;
            for (size_t s = 0; s < sites.size(); ++s) {
                const Site& cfg = site_cfg[s];
                if (cfg.notice_rate > 0.0 && uniform() < cfg.notice_rate) abort = true;
                int f = 0;
                if (cfg.logical) {
                    f = uniform() < cfg.flip_rate ? 1 : 0;
                } else {
                    for (double p : cfg.flip_sources) {
                        if (p > 0.0 && uniform() < p) f ^= 1;
                    }
                }
                flip[s] = static_cast<uint8_t>(f);
            }
            if (abort) {
                ++aborted;
                continue;
            }
            ++kept;
            for (size_t vi = 0; vi < nodes.size(); ++vi) {
                int parity = 0;
                for (size_t s : parity_sites[vi]) parity ^= flip[s];
                flips_seen[vi] += parity;
            }
        }
    }

    std::vector<NodeEstimate> out;
    for (size_t vi = 0; vi < nodes.size(); ++vi) {
        NodeEstimate est;
        est.node = nodes[vi];
        est.trials_kept = kept;
        est.trials_aborted = aborted;
        if (kept > 0) {
            est.e_hat = static_cast<double>(flips_seen[vi]) / static_cast<double>(kept);
            est.std_err = std::sqrt(est.e_hat * (1.0 - est.e_hat) / static_cast<double>(kept));
        }
        out.push_back(est);
    }
    return out;
}

/// Result of the bounded local-complementation search.
struct LuWitness {
    enum class Status { Equivalent, NotEquivalent, BoundExceeded };
    Status status = Status::NotEquivalent;
    std::vector<VertexId> sequence;  ///< LC vertices mapping g1 onto g2
};

/// Breadth-first search over local-complementation sequences from g1 towards
/// g2. Exhausting the orbit proves inequivalence; hitting the state bound is
/// reported separately.
inline LuWitness check_lu_equivalence(const SimpleGraph& g1, const SimpleGraph& g2,
                                      size_t max_states = 200000) {
    LuWitness w;
    if (g1.vertices() != g2.vertices()) return w;  // NotEquivalent
    if (g1.connected_components() != g2.connected_components()) return w;  // LC-invariant

    detail::QubitIndex idx(g1);
    const size_t n = idx.order.size();
    auto encode = [&](const SimpleGraph& g) {
        std::vector<uint64_t> adj(n, 0);
        for (size_t i = 0; i < n; ++i) {
            for (const auto& nb : g.neighbors(idx.order[i])) {
                adj[i] |= 1ull << idx.to_index.at(nb);
            }
        }
        return adj;
    };
    auto lc = [&](std::vector<uint64_t> adj, size_t v) {
        uint64_t nbrs = adj[v];
        for (uint64_t rest = nbrs; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            adj[static_cast<size_t>(a)] ^= nbrs & ~(1ull << a);
        }
        return adj;
    };

    std::vector<uint64_t> start = encode(g1), goal = encode(g2);
    if (start == goal) {
        w.status = LuWitness::Status::Equivalent;
        return w;
    }
    std::map<std::vector<uint64_t>, std::pair<std::vector<uint64_t>, size_t>> parent;
    std::deque<std::vector<uint64_t>> queue{start};
    parent[start] = {start, n};  // sentinel
    while (!queue.empty()) {
        std::vector<uint64_t> cur = queue.front();
        queue.pop_front();
        for (size_t v = 0; v < n; ++v) {
            if (cur[v] == 0) continue;  // LC at an isolated vertex is a no-op
            std::vector<uint64_t> next = lc(cur, v);
            if (parent.count(next)) continue;
            parent[next] = {cur, v};
            if (next == goal) {
                std::vector<size_t> moves;
                std::vector<uint64_t> walk = next;
                while (true) {
                    auto& [prev, mv] = parent.at(walk);
                    if (mv == n) break;
                    moves.push_back(mv);
                    walk = prev;
                }
                for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
                    w.sequence.push_back(idx.order[*it]);
                }
                w.status = LuWitness::Status::Equivalent;
                return w;
            }
            if (parent.size() > max_states) {
                w.status = LuWitness::Status::BoundExceeded;
                return w;
            }
            queue.push_back(std::move(next));
        }
    }
    w.status = LuWitness::Status::NotEquivalent;
    return w;
}

}  // namespace repnet

#endif  // REPNET_ORACLE_HPP
