#pragma once

#include <cstdint>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

Graph complete_graph(int n);

// Two K5s on {0..4} and {3..7} sharing vertices {3,4}. With hinge=true the
// shared edge (3,4) is present (19 edges); hinge=false removes it (18 edges).
Graph double_banana(bool hinge);

// Hingeless double banana plus a bar (0,5) joining a degree-4 vertex of each
// banana. 8 vertices, 19 edges; rigid in 3D.
Graph double_banana_bar();

// n K5s all sharing the vertex pair {0,1}, with edge (0,1) absent.
// |V| = 3n+2, |E| = 9n. Throws input_error for n = 0.
Graph n_banana(int n);
// The n banana vertex sets (each of size 5), for building covers.
std::vector<std::vector<int>> n_banana_parts(int n);

// n K5s closed into a cycle; neighboring K5s share one edge, and each K5's
// two shared edges are vertex-disjoint. |V| = 3n, |E| = 9n. Requires n >= 3.
Graph k5_ring(int n);
std::vector<std::vector<int>> k5_ring_parts(int n);

// Central K5 "T" plus five rings of seven K5s each (T and six fresh ones per
// ring); consecutive K5s in a ring share an edge, and the two shared edges of
// every K5 are non-adjacent. T's 10 edges are split into 5 vertex-disjoint
// pairs, pair r feeding ring r: (r, r+1 mod 5) and (r+2 mod 5, r+4 mod 5).
// 31 K5s, 85 vertices, 275 edges, 35 shared edges.
struct SmrCounterGraph {
    Graph graph;
    std::vector<std::vector<int>> cover;  // the 31 K5 vertex sets; cover[0] = T
};
SmrCounterGraph smr_counter();

// A small (size 245) maximal Maxwell-independent set of the smr_counter
// graph: nine edges per non-T K5 chosen so the missing edge is unshared,
// then one edge of T swapped against the missing edge of the K5 sharing it.
std::vector<Edge> smr_counter_small_maximal_set(const SmrCounterGraph& sc);

// Uniform random simple graph with exactly m edges; deterministic per seed.
Graph random_graph(int n, int m, std::uint64_t seed);

}  // namespace rigi
