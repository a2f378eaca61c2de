#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

// Counting parameters for dimension d: (k,l) = (d, d(d+1)/2). Subgraphs on
// fewer than d vertices are clique-exempt.
struct SparsityParams {
    int d;
    explicit SparsityParams(int dim) : d(dim) {
        if (dim < 1) throw input_error("dimension must be >= 1");
    }
    int k() const { return d; }
    int l() const { return d * (d + 1) / 2; }
    int min_support() const { return d; }
};

// d|V| - |E|; V counts non-isolated vertices unless include_isolated is set.
int maxwell_count(const Graph& g, int d, bool include_isolated = false);

// Worst Maxwell-count violation over vertex sets containing a given pair.
struct Deficiency {
    static constexpr int kNegInf = INT_MIN / 2;
    int value = kNegInf;
    std::vector<int> witness;  // inclusion-maximal maximizer; empty iff undefined
    bool defined() const { return value != kNegInf; }
};

// Single flow run: max over V' >= forced of m(V') - d|V'| + l, with the
// inclusion-maximal maximizing witness (maximal min-cut source side).
Deficiency forced_deficiency(const Graph& g, const std::vector<int>& forced, int d);
Deficiency forced_deficiency(int n, const std::vector<Edge>& edges,
                             const std::vector<int>& forced, int d);

// Max over V' containing {u,v} with |V'| >= d. For d >= 3 this loops a
// forced (d-2)-subset over the other vertices (n-2 flow runs at d = 3).
// Returns the -inf sentinel when n < d.
Deficiency deficiency(const Graph& g, int u, int v, int d);

struct MaxwellIndependence {
    bool independent = true;
    std::vector<int> witness;  // violating vertex set when dependent
    Edge witness_edge{-1, -1};
    int deficiency_value = 0;
};

// True iff deficiency(g,u,v,d) <= 0 for every edge (u,v).
MaxwellIndependence is_maxwell_independent(const Graph& g, int d);

// True iff m + e stays Maxwell-independent. Assumes m itself is
// Maxwell-independent (incremental form: only sets containing both endpoints
// of e can newly violate). Cheap preconditions (e in parent, e not in m) are
// checked.
bool edge_admissible(const EdgeSubset& m, Edge e, int d);

std::vector<int> seeded_edge_order(int edge_count, std::uint64_t seed);

// Greedy scan in `order` (a permutation of edge indices; empty = lexicographic),
// keeping each edge whose addition stays Maxwell-independent. Maximality is
// re-verified post hoc.
EdgeSubset maximal_maxwell_independent(const Graph& g, int d,
                                       const std::vector<int>& order = {});

struct MaximalSetEnumeration {
    std::vector<EdgeSubset> sets;
    bool truncated = false;
};

// All maximal Maxwell-independent sets, by include/exclude backtracking with
// admissibility pruning; stops with the truncated flag after `cap` results.
MaximalSetEnumeration enumerate_maximal_maxwell_independent(const Graph& g, int d,
                                                            int cap = 100000);

// A Maxwell-independent spanning set with Maxwell count exactly l, when one
// exists (greedy-first backtracking with admissibility and count pruning;
// exponential worst case, desk scale). For cliques on fewer than d vertices
// the full edge set is returned (exempt).
std::optional<std::vector<Edge>> tight_spanning_set(const Graph& g, int d);

bool is_maxwell_rigid(const Graph& g, int d);

// Every maximal Maxwell-independent set tight on its vertex support
// (clique-exempt supports allowed). Enumeration-backed; a truncated
// enumeration yields an indeterminate verdict.
struct StrongRigidity {
    enum class Verdict { yes, no, indeterminate };
    Verdict verdict = Verdict::yes;
    std::vector<Edge> counterexample;  // a non-tight maximal set, when found
};
StrongRigidity is_strong_maxwell_rigid(const Graph& g, int d, int cap = 100000);

}  // namespace rigi
