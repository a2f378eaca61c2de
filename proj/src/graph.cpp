#include "rigi/graph.hpp"

#include <algorithm>

namespace rigi {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n_)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw input_error("duplicate edge");
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

std::vector<int> Graph::support() const {
    std::vector<int> s;
    for (int v = 0; v < n_; ++v)
        if (!adj_[v].empty()) s.push_back(v);
    return s;
}

int Graph::support_size() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (!adj_[v].empty()) ++c;
    return c;
}

VertexSubset::VertexSubset(const Graph& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int v : members_)
        if (v < 0 || v >= parent.vertex_count())
            throw input_error("vertex subset member out of range: " + std::to_string(v));
}

bool VertexSubset::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<Edge> VertexSubset::induced_edges() const {
    return rigi::induced_edges(*parent_, members_);
}

EdgeSubset::EdgeSubset(const Graph& parent, std::vector<Edge> members)
    : parent_(&parent), members_(std::move(members)) {
    for (auto& [u, v] : members_)
        if (u > v) std::swap(u, v);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const auto& e : members_)
        if (!parent.has_edge(e.first, e.second))
            throw input_error("edge subset member not an edge of the parent graph");
}

bool EdgeSubset::contains(const Edge& e) const {
    return std::binary_search(members_.begin(), members_.end(),
                              make_edge(e.first, e.second));
}

std::vector<int> EdgeSubset::support() const {
    std::vector<int> s;
    for (const auto& [u, v] : members_) {
        s.push_back(u);
        s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<Edge> induced_edges(const Graph& g, const std::vector<int>& vertices) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw input_error("vertex out of range: " + std::to_string(v));
        in[v] = 1;
    }
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (in[e.first] && in[e.second]) out.push_back(e);
    return out;
}

InducedGraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> label(g.vertex_count(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.vertex_count())
            throw input_error("vertex out of range: " + std::to_string(vs[i]));
        label[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (label[e.first] >= 0 && label[e.second] >= 0)
            es.emplace_back(label[e.first], label[e.second]);
    return {Graph(static_cast<int>(vs.size()), std::move(es)), std::move(vs)};
}

InducedGraph induced_subgraph(const Graph& g, const VertexSubset& x) {
    return induced_subgraph(g, x.members());
}

Graph spanning_subgraph(const Graph& g, const std::vector<Edge>& subset) {
    for (const auto& e : subset)
        if (!g.has_edge(e.first, e.second))
            throw input_error("subset edge not present in graph");
    return Graph(g.vertex_count(), subset);
}

}  // namespace rigi
