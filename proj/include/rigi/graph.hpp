#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigi {

// Error taxonomy mirrored by the CLI exit codes (1/2/3).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected edge, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple graph on dense vertex ids 0..n-1. Edge iteration order is
// lexicographic. Isolated vertices are representable (n may exceed the
// support); counting operations exclude them unless stated otherwise.
class Graph {
public:
    Graph() = default;
    // Validates: no loops, no duplicates, endpoints < n. Throws input_error.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Vertices with at least one incident edge, ascending.
    std::vector<int> support() const;
    int support_size() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Subset of a parent graph's vertices; members kept sorted.
class VertexSubset {
public:
    VertexSubset() = default;
    VertexSubset(const Graph& parent, std::vector<int> members);

    const Graph& parent() const { return *parent_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const;

    // E(X): parent edges with both endpoints in members.
    std::vector<Edge> induced_edges() const;

private:
    const Graph* parent_ = nullptr;
    std::vector<int> members_;
};

// Subset of a parent graph's edges; members kept sorted.
class EdgeSubset {
public:
    EdgeSubset() = default;
    EdgeSubset(const Graph& parent, std::vector<Edge> members);

    const Graph& parent() const { return *parent_; }
    const std::vector<Edge>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(const Edge& e) const;

    // V(E'): vertices touched by members, ascending.
    std::vector<int> support() const;

private:
    const Graph* parent_ = nullptr;
    std::vector<Edge> members_;
};

struct InducedGraph {
    Graph graph;               // relabeled to 0..|X|-1
    std::vector<int> to_parent; // new id -> parent id (ascending)
};

InducedGraph induced_subgraph(const Graph& g, const VertexSubset& x);
InducedGraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Edges of g with both endpoints inside `vertices` (sorted ascending).
std::vector<Edge> induced_edges(const Graph& g, const std::vector<int>& vertices);

// Graph on the same vertex set carrying only `subset` (must be edges of g).
Graph spanning_subgraph(const Graph& g, const std::vector<Edge>& subset);

}  // namespace rigi
