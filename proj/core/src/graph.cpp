#include "netcent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "netcent/errors.hpp"

namespace netcent {

namespace {

void fill_csr(std::size_t n, const std::vector<std::pair<NodeId, Arc>>& entries,
              std::vector<std::size_t>& off, std::vector<Arc>& adj) {
    off.assign(n + 1, 0);
    for (const auto& [u, a] : entries) ++off[u + 1];
    for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
    adj.resize(entries.size());
    std::vector<std::size_t> cursor(off.begin(), off.end() - 1);
    for (const auto& [u, a] : entries) adj[cursor[u]++] = a;
    for (std::size_t u = 0; u < n; ++u) {
        std::sort(adj.begin() + static_cast<std::ptrdiff_t>(off[u]),
                  adj.begin() + static_cast<std::ptrdiff_t>(off[u + 1]),
                  [](const Arc& a, const Arc& b) { return a.node < b.node; });
    }
}

std::uint64_t pair_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

double Graph::strength(NodeId v) const noexcept {
    double s = 0.0;
    for (const Arc& a : out(v)) s += a.weight;
    if (directed_)
        for (const Arc& a : in(v)) s += a.weight;
    return s;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept { return edge_weight(u, v).has_value(); }

std::optional<double> Graph::edge_weight(NodeId u, NodeId v) const noexcept {
    auto adj = out(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Arc& a, NodeId x) { return a.node < x; });
    if (it != adj.end() && it->node == v) return it->weight;
    return std::nullopt;
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::with_coordinates(std::vector<Point> coords) const {
    if (coords.size() != node_count())
        throw_input("coordinate count " + std::to_string(coords.size()) +
                    " does not match node count " + std::to_string(node_count()));
    Graph g = *this;
    g.coords_ = std::move(coords);
    return g;
}

Graph Graph::from_clean_edges(std::vector<std::string> labels, std::vector<Edge> edges,
                              bool directed) {
    Graph g;
    g.directed_ = directed;
    g.labels_ = std::move(labels);
    const std::size_t n = g.labels_.size();
    g.index_.reserve(n);
    for (NodeId i = 0; i < n; ++i) g.index_.emplace(g.labels_[i], i);

    if (!directed)
        for (Edge& e : edges)
            if (e.source > e.target) std::swap(e.source, e.target);
    g.edges_ = std::move(edges);

    std::vector<std::pair<NodeId, Arc>> out_entries;
    std::vector<std::pair<NodeId, Arc>> in_entries;
    out_entries.reserve(g.edges_.size() * (directed ? 1 : 2));
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const Edge& e = g.edges_[id];
        if (e.source >= n || e.target >= n) throw_input("edge endpoint out of range");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw_input("edge weight must be positive and finite");
        if (e.weight != 1.0) g.weighted_ = true;
        out_entries.push_back({e.source, Arc{e.target, id, e.weight}});
        if (directed)
            in_entries.push_back({e.target, Arc{e.source, id, e.weight}});
        else
            out_entries.push_back({e.target, Arc{e.source, id, e.weight}});
    }
    fill_csr(n, out_entries, g.out_off_, g.out_adj_);
    if (directed) fill_csr(n, in_entries, g.in_off_, g.in_adj_);
    return g;
}

BuildResult build_graph(std::span<const LabeledEdge> edges, bool directed,
                        std::span<const std::string> isolated_nodes) {
    BuildResult result;
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::vector<Edge> clean;
    std::unordered_set<std::uint64_t> seen;
    for (const LabeledEdge& le : edges) {
        const double w = le.weight.value_or(1.0);
        if (!(w > 0.0) || !std::isfinite(w)) {
            std::string where = le.line ? "line " + std::to_string(le.line) + ": " : "";
            throw_input(where + "edge weight must be positive, got " + std::to_string(w));
        }
        const NodeId u = intern(le.source);
        const NodeId v = intern(le.target);
        if (u == v) {
            ++result.report.self_loops;
            continue;
        }
        const std::uint64_t key = directed ? pair_key(u, v) : pair_key(std::min(u, v), std::max(u, v));
        if (!seen.insert(key).second) {
            ++result.report.duplicates;
            continue;
        }
        clean.push_back({u, v, w});
    }
    for (const std::string& label : isolated_nodes) intern(label);
    result.graph = Graph::from_clean_edges(std::move(labels), std::move(clean), directed);
    return result;
}

Graph make_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges, bool directed) {
    std::vector<Edge> weighted;
    weighted.reserve(edges.size());
    for (auto [u, v] : edges) weighted.push_back({u, v, 1.0});
    return make_weighted_graph(n, weighted, directed);
}

Graph make_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges,
                 bool directed) {
    return make_graph(n, std::span<const std::pair<NodeId, NodeId>>(edges.begin(), edges.size()),
                      directed);
}

Graph make_weighted_graph(std::size_t n, std::span<const Edge> edges, bool directed) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    std::vector<Edge> clean;
    std::unordered_set<std::uint64_t> seen;
    for (Edge e : edges) {
        if (e.source >= n || e.target >= n) throw_input("edge endpoint out of range");
        if (e.source == e.target) continue;
        const std::uint64_t key = directed ? pair_key(e.source, e.target)
                                           : pair_key(std::min(e.source, e.target),
                                                      std::max(e.source, e.target));
        if (!seen.insert(key).second) continue;
        clean.push_back(e);
    }
    return Graph::from_clean_edges(std::move(labels), std::move(clean), directed);
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    constexpr NodeId kAbsent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> remap(g.node_count(), kAbsent);
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (NodeId i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = i;
        labels.push_back(g.label(keep[i]));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (remap[e.source] != kAbsent && remap[e.target] != kAbsent)
            edges.push_back({remap[e.source], remap[e.target], e.weight});
    }
    Graph sub = Graph::from_clean_edges(std::move(labels), std::move(edges), g.directed());
    if (g.has_coordinates()) {
        std::vector<Point> coords;
        coords.reserve(keep.size());
        for (NodeId v : keep) coords.push_back(g.coordinates()[v]);
        sub = sub.with_coordinates(std::move(coords));
    }
    return sub;
}

Graph reversed(const Graph& g) {
    if (!g.directed()) return g;
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({e.target, e.source, e.weight});
    Graph r = Graph::from_clean_edges(g.labels(), std::move(edges), true);
    if (g.has_coordinates()) r = r.with_coordinates(g.coordinates());
    return r;
}

Graph as_undirected(const Graph& g) {
    if (!g.directed()) return g;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : g.edges()) {
        if (seen.insert(pair_key(std::min(e.source, e.target), std::max(e.source, e.target))).second)
            edges.push_back(e);
    }
    Graph u = Graph::from_clean_edges(g.labels(), std::move(edges), false);
    if (g.has_coordinates()) u = u.with_coordinates(g.coordinates());
    return u;
}

} // namespace netcent
