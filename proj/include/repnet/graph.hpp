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

#ifndef REPNET_GRAPH_HPP
#define REPNET_GRAPH_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace repnet {

using VertexId = std::string;

/// Plain undirected simple graph with string vertex ids. Adjacency is kept in
/// sorted containers so every derived quantity iterates in a fixed order.
class SimpleGraph {
  public:
    void add_vertex(const VertexId& v) { adj_.try_emplace(v); }

    bool has_vertex(const VertexId& v) const { return adj_.count(v) > 0; }

    void add_edge(const VertexId& u, const VertexId& v) {
        if (u == v) {
            throw std::invalid_argument("self-loop on vertex '" + u + "'");
        }
        add_vertex(u);
        add_vertex(v);
        adj_.at(u).insert(v);
        adj_.at(v).insert(u);
    }

    void remove_edge(const VertexId& u, const VertexId& v) {
        adj_.at(u).erase(v);
        adj_.at(v).erase(u);
    }

    void toggle_edge(const VertexId& u, const VertexId& v) {
        if (has_edge(u, v)) {
            remove_edge(u, v);
        } else {
            add_edge(u, v);
        }
    }

    bool has_edge(const VertexId& u, const VertexId& v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) > 0;
    }

    const std::set<VertexId>& neighbors(const VertexId& v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) {
            throw std::invalid_argument("unknown vertex '" + v + "'");
        }
        return it->second;
    }

    int degree(const VertexId& v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(adj_.size());
        for (const auto& [v, _] : adj_) {
            out.push_back(v);
        }
        return out;
    }

    /// Edges as sorted (min,max) pairs.
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (const auto& [u, nbrs] : adj_) {
            for (const auto& v : nbrs) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    size_t vertex_count() const { return adj_.size(); }

    size_t edge_count() const { return edges().size(); }

    size_t connected_components() const {
        std::set<VertexId> seen;
        size_t components = 0;
        for (const auto& [start, _] : adj_) {
            if (seen.count(start)) continue;
            ++components;
            std::vector<VertexId> stack{start};
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                if (!seen.insert(v).second) continue;
                for (const auto& w : adj_.at(v)) {
                    if (!seen.count(w)) stack.push_back(w);
                }
            }
        }
        return components;
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.adj_ == b.adj_; }

  private:
    std::map<VertexId, std::set<VertexId>> adj_;
};

/// Complements the edge set within the neighborhood of v. Edges incident to v
/// itself are untouched; applying the transform twice restores the graph.
inline SimpleGraph local_complement(SimpleGraph g, const VertexId& v) {
    std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    for (size_t i = 0; i < nbrs.size(); ++i) {
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            g.toggle_edge(nbrs[i], nbrs[j]);
        }
    }
    return g;
}

/// A long-distance link: directed transmission from `from` to `to`, with a
/// physical length and a repeater count used when expanding the network.
struct NetworkEdge {
    VertexId from;
    VertexId to;
    double length_km = 0.0;
    int repeaters = 0;
};

/// Network-level graph: nodes plus weighted, oriented links. The value is
/// immutable in practice once built; transforms return new graphs.
class NetworkGraph {
  public:
    void add_vertex(const VertexId& v, const std::string& label = "") {
        if (labels_.count(v)) {
            throw std::invalid_argument("duplicate vertex id '" + v + "'");
        }
        labels_[v] = label;
    }

    void add_edge(const VertexId& u, const VertexId& v, double length_km, int repeaters) {
        if (u == v) {
            throw std::invalid_argument("self-loop on vertex '" + u + "'");
        }
        if (!labels_.count(u)) throw std::invalid_argument("unknown vertex '" + u + "'");
        if (!labels_.count(v)) throw std::invalid_argument("unknown vertex '" + v + "'");
        if (length_km < 0) throw std::invalid_argument("negative edge length");
        if (repeaters < 0) throw std::invalid_argument("negative repeater count");
        for (const auto& e : edges_) {
            if ((e.from == u && e.to == v) || (e.from == v && e.to == u)) {
                throw std::invalid_argument("duplicate edge (" + u + "," + v + ")");
            }
        }
        edges_.push_back(NetworkEdge{u, v, length_km, repeaters});
    }

    bool has_vertex(const VertexId& v) const { return labels_.count(v) > 0; }

    const std::string& label(const VertexId& v) const { return labels_.at(v); }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (const auto& [v, _] : labels_) out.push_back(v);
        return out;
    }

    const std::vector<NetworkEdge>& edges() const { return edges_; }

    std::vector<VertexId> neighbors(const VertexId& v) const {
        std::set<VertexId> nbrs;
        for (const auto& e : edges_) {
            if (e.from == v) nbrs.insert(e.to);
            if (e.to == v) nbrs.insert(e.from);
        }
        return {nbrs.begin(), nbrs.end()};
    }

    int degree(const VertexId& v) const { return static_cast<int>(neighbors(v).size()); }

    int total_repeaters() const {
        int total = 0;
        for (const auto& e : edges_) total += e.repeaters;
        return total;
    }

    SimpleGraph topology() const {
        SimpleGraph g;
        for (const auto& [v, _] : labels_) g.add_vertex(v);
        for (const auto& e : edges_) g.add_edge(e.from, e.to);
        return g;
    }

  private:
    std::map<VertexId, std::string> labels_;
    std::vector<NetworkEdge> edges_;
};

struct Degrees {
    int total = 0;
    int in = 0;
    int out = 0;
};

/// One expanded link: the station chain between two network nodes, ordered in
/// transmission direction.
struct LinkChain {
    VertexId from;
    VertexId to;
    std::vector<VertexId> stations;
    double length_km = 0.0;

    int repeater_count() const { return static_cast<int>(stations.size()); }

    /// Distance between consecutive stations (and between end nodes and the
    /// chain), assuming equal spacing.
    double spacing_km() const { return length_km / (stations.size() + 1); }
};

/// The fully expanded graph: network nodes plus repeater stations, each
/// station sitting on exactly one link with in-degree and out-degree 1.
class RepeaterGraph {
  public:
    static RepeaterGraph expand(const NetworkGraph& net) {
        RepeaterGraph rg;
        for (const auto& v : net.vertices()) {
            rg.graph_.add_vertex(v);
            rg.inout_.try_emplace(v, std::pair<int, int>{0, 0});
        }
        for (const auto& e : net.edges()) {
            LinkChain chain;
            chain.from = e.from;
            chain.to = e.to;
            chain.length_km = e.length_km;
            VertexId prev = e.from;
            for (int k = 1; k <= e.repeaters; ++k) {
                VertexId r = e.from + ">" + e.to + ":" + std::to_string(k);
                if (rg.graph_.has_vertex(r)) {
                    throw std::invalid_argument("repeater id collision: '" + r + "'");
                }
                chain.stations.push_back(r);
                rg.repeaters_.insert(r);
                rg.graph_.add_edge(prev, r);
                rg.add_directed(prev, r);
                prev = r;
            }
            rg.graph_.add_edge(prev, e.to);
            rg.add_directed(prev, e.to);
            rg.links_.push_back(std::move(chain));
        }
        return rg;
    }

    const SimpleGraph& graph() const { return graph_; }

    bool is_repeater(const VertexId& v) const { return repeaters_.count(v) > 0; }

    const std::set<VertexId>& repeaters() const { return repeaters_; }

    std::vector<VertexId> network_nodes() const {
        std::vector<VertexId> out;
        for (const auto& v : graph_.vertices()) {
            if (!is_repeater(v)) out.push_back(v);
        }
        return out;
    }

    const std::vector<LinkChain>& links() const { return links_; }

    std::vector<const LinkChain*> links_at(const VertexId& node) const {
        std::vector<const LinkChain*> out;
        for (const auto& link : links_) {
            if (link.from == node || link.to == node) out.push_back(&link);
        }
        return out;
    }

    Degrees degrees(const VertexId& v) const {
        Degrees d;
        d.total = graph_.degree(v);
        auto it = inout_.find(v);
        if (it == inout_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
        d.in = it->second.first;
        d.out = it->second.second;
        return d;
    }

    /// Vertices of the main stabilizer centred on `node`: the node itself plus
    /// the stations at even distance 2,4,...,w along each incident link. The
    /// generator product over this set carries X on the set and Z only on the
    /// neighbouring network nodes.
    std::set<VertexId> main_stabilizer_support(const VertexId& node) const {
        if (is_repeater(node)) {
            throw std::invalid_argument("main stabilizer must be centred on a network node");
        }
        if (!graph_.has_vertex(node)) {
            throw std::invalid_argument("unknown vertex '" + node + "'");
        }
        std::set<VertexId> support{node};
        for (const LinkChain* link : links_at(node)) {
            if (link->repeater_count() % 2 != 0) {
                throw std::invalid_argument("odd repeater count unsupported on link (" +
                                            link->from + "," + link->to + ")");
            }
            const auto& st = link->stations;
            if (link->from == node) {
                for (size_t k = 1; k < st.size(); k += 2) support.insert(st[k]);
            } else {
                for (size_t k = st.size(); k >= 2; k -= 2) support.insert(st[k - 2]);
            }
        }
        return support;
    }

  private:
    void add_directed(const VertexId& from, const VertexId& to) {
        inout_.try_emplace(from, std::pair<int, int>{0, 0});
        inout_.try_emplace(to, std::pair<int, int>{0, 0});
        inout_[from].second += 1;
        inout_[to].first += 1;
    }

    SimpleGraph graph_;
    std::set<VertexId> repeaters_;
    std::vector<LinkChain> links_;
    std::map<VertexId, std::pair<int, int>> inout_;
};

inline RepeaterGraph expand_to_repeater_graph(const NetworkGraph& net) {
    return RepeaterGraph::expand(net);
}

/// Parses the line-oriented network description format:
///   node <id> [label]
///   edge <u> <v> length_km=<x> [w=<int>]
/// with '#' comments. Errors carry the offending line number.
inline NetworkGraph parse_network(std::istream& in) {
    NetworkGraph net;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        auto fail = [&](const std::string& msg) -> std::runtime_error {
            return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
        };
        try {
            if (kind == "node") {
                std::string id, label;
                if (!(ls >> id)) throw fail("node requires an id");
                ls >> label;
                net.add_vertex(id, label);
            } else if (kind == "edge") {
                std::string u, v;
                if (!(ls >> u >> v)) throw fail("edge requires two endpoints");
                std::optional<double> length;
                int w = 0;
                std::string kv;
                while (ls >> kv) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos) throw fail("expected key=value, got '" + kv + "'");
                    std::string key = kv.substr(0, eq);
                    std::string val = kv.substr(eq + 1);
                    try {
                        if (key == "length_km") {
                            length = std::stod(val);
                        } else if (key == "w") {
                            w = std::stoi(val);
                        } else {
                            throw fail("unknown edge attribute '" + key + "'");
                        }
                    } catch (const std::invalid_argument&) {
                        throw fail("bad value for '" + key + "': '" + val + "'");
                    }
                }
                if (!length) throw fail("edge requires length_km");
                net.add_edge(u, v, *length, w);
            } else {
                throw fail("unknown directive '" + kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    return net;
}

}  // namespace repnet

#endif  // REPNET_GRAPH_HPP
