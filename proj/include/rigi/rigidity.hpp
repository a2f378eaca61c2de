#pragma once

#include <cstdint>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

// Arithmetic over Z_p with p = 2^61 - 1 (Mersenne prime).
namespace field {
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kPrime - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % kPrime);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
}  // namespace field

// Random coordinates for vertices 0..n-1, d per vertex, with all pairwise
// per-coordinate differences nonzero (resampled on collision, which makes
// every edge row carry exactly 2d nonzero entries).
struct Placement {
    int d = 0;
    std::vector<std::uint64_t> coords;  // n*d, vertex-major
    int n() const { return d == 0 ? 0 : static_cast<int>(coords.size()) / d; }
    std::uint64_t coord(int v, int j) const { return coords[static_cast<size_t>(v) * d + j]; }
};

Placement sample_placement(int n, int d, std::uint64_t seed);

// Row of the rigidity matrix for vertex pair (u,v): p(u)-p(v) in u's column
// block, the negation in v's, zeros elsewhere. Pairs need not be graph edges.
std::vector<std::uint64_t> edge_row(Edge e, const Placement& p);

// R_d(G): one row per edge in canonical edge order.
std::vector<std::vector<std::uint64_t>> build_matrix(const Graph& g, const Placement& p);

// Incremental row space over Z_p.
class EchelonBasis {
public:
    explicit EchelonBasis(int cols) : cols_(cols) {}
    // Reduces the row against the basis; inserts and returns true if nonzero.
    bool try_insert(std::vector<std::uint64_t> row);
    // Reduction test without insertion.
    bool reduces_to_zero(std::vector<std::uint64_t> row) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(std::vector<std::uint64_t>& row) const;
    int cols_;
    std::vector<std::vector<std::uint64_t>> rows_;  // pivot-normalized
    std::vector<int> pivots_;
};

// Randomized generic-rank oracle for the d-dimensional rigidity matroid.
// Specializations only under-estimate generic rank, so taking the max (or
// any accepting trial) over `trials` placements errs with probability
// O(trials * |E| * n / p) — negligible at desk scale. Reports carry this
// note once.
struct RankOracle {
    int d = 3;
    std::uint64_t prime = field::kPrime;
    int trials = 2;
    std::uint64_t seed = 0xC0FFEE;

    RankOracle() = default;
    RankOracle(int dim, std::uint64_t s, int t = 2) : d(dim), trials(t), seed(s) {
        if (dim < 1) throw input_error("dimension must be >= 1");
        if (t < 2) throw input_error("rank oracle requires trials >= 2");
    }
};

// Per-trial incremental bases over fixed placements; an edge counts as
// independent of the accumulated span if any trial accepts its row.
class SpanTracker {
public:
    SpanTracker(const Graph& g, const RankOracle& oracle);
    bool add_if_independent(Edge e);
    bool in_span(Edge e) const;
    int rank() const;

private:
    int d_;
    std::vector<Placement> placements_;
    std::vector<EchelonBasis> bases_;
};

int generic_rank(const Graph& g, const RankOracle& oracle);
int rank_of_edges(const Graph& g, const std::vector<Edge>& s, const RankOracle& oracle);
bool is_independent(const Graph& g, const EdgeSubset& s, const RankOracle& oracle);

// rank(s + e) == rank(s); e may be any vertex pair of g.
bool in_span(const Graph& g, const std::vector<Edge>& s, Edge e, const RankOracle& oracle);

// Greedily adds pool edges (canonical order) that keep independence.
// Throws input_error when base is dependent.
EdgeSubset extend_to_maximal_independent(const Graph& g, const EdgeSubset& base,
                                         const EdgeSubset& pool, const RankOracle& oracle);

}  // namespace rigi
