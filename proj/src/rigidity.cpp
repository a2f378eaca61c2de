#include "rigi/rigidity.hpp"

#include <algorithm>
#include <random>

namespace rigi {

namespace field {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= kPrime;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a) {
    if (a == 0) throw internal_error("field inverse of zero");
    return pow(a, kPrime - 2);
}

}  // namespace field

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t draw_field_element(std::mt19937_64& rng) {
    while (true) {
        std::uint64_t x = rng() >> 3;  // 61 bits
        if (x < field::kPrime) return x;
    }
}

}  // namespace

Placement sample_placement(int n, int d, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    Placement p;
    p.d = d;
    p.coords.resize(static_cast<size_t>(n) * d);
    while (true) {
        for (auto& c : p.coords) c = draw_field_element(rng);
        bool ok = true;
        std::vector<std::uint64_t> col(n);
        for (int j = 0; j < d && ok; ++j) {
            for (int v = 0; v < n; ++v) col[v] = p.coord(v, j);
            std::sort(col.begin(), col.end());
            ok = std::adjacent_find(col.begin(), col.end()) == col.end();
        }
        if (ok) return p;
    }
}

std::vector<std::uint64_t> edge_row(Edge e, const Placement& p) {
    const int d = p.d;
    std::vector<std::uint64_t> row(static_cast<size_t>(p.n()) * d, 0);
    for (int j = 0; j < d; ++j) {
        std::uint64_t diff = field::sub(p.coord(e.first, j), p.coord(e.second, j));
        row[static_cast<size_t>(e.first) * d + j] = diff;
        row[static_cast<size_t>(e.second) * d + j] = field::sub(0, diff);
    }
    return row;
}

std::vector<std::vector<std::uint64_t>> build_matrix(const Graph& g, const Placement& p) {
    if (p.n() != g.vertex_count())
        throw input_error("placement size does not match the graph");
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        auto row = edge_row(e, p);
        int nonzero = 0;
        for (auto x : row) nonzero += (x != 0);
        if (nonzero != 2 * p.d)
            throw internal_error("edge row with a vanishing coordinate difference");
        rows.push_back(std::move(row));
    }
    return rows;
}

void EchelonBasis::reduce(std::vector<std::uint64_t>& row) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::uint64_t c = row[pivots_[r]];
        if (c == 0) continue;
        const auto& base = rows_[r];
        for (int j = 0; j < cols_; ++j)
            if (base[j]) row[j] = field::sub(row[j], field::mul(c, base[j]));
    }
}

bool EchelonBasis::try_insert(std::vector<std::uint64_t> row) {
    reduce(row);
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (row[j]) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    std::uint64_t iv = field::inv(row[pivot]);
    for (auto& x : row) x = field::mul(x, iv);
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

bool EchelonBasis::reduces_to_zero(std::vector<std::uint64_t> row) const {
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](std::uint64_t x) { return x == 0; });
}

SpanTracker::SpanTracker(const Graph& g, const RankOracle& oracle) : d_(oracle.d) {
    for (int t = 0; t < oracle.trials; ++t) {
        std::uint64_t s = splitmix64(oracle.seed ^ (0x5851f42d4c957f2dULL * (t + 1)));
        placements_.push_back(sample_placement(g.vertex_count(), oracle.d, s));
        bases_.emplace_back(g.vertex_count() * oracle.d);
    }
}

bool SpanTracker::add_if_independent(Edge e) {
    bool grew = false;
    for (size_t t = 0; t < bases_.size(); ++t)
        if (bases_[t].try_insert(edge_row(e, placements_[t]))) grew = true;
    return grew;
}

bool SpanTracker::in_span(Edge e) const {
    for (size_t t = 0; t < bases_.size(); ++t)
        if (!bases_[t].reduces_to_zero(edge_row(e, placements_[t]))) return false;
    return true;
}

int SpanTracker::rank() const {
    int r = 0;
    for (const auto& b : bases_) r = std::max(r, b.rank());
    return r;
}

int rank_of_edges(const Graph& g, const std::vector<Edge>& s, const RankOracle& oracle) {
    SpanTracker tracker(g, oracle);
    for (const auto& e : s) tracker.add_if_independent(e);
    return tracker.rank();
}

int generic_rank(const Graph& g, const RankOracle& oracle) {
    return rank_of_edges(g, g.edges(), oracle);
}

bool is_independent(const Graph& g, const EdgeSubset& s, const RankOracle& oracle) {
    return rank_of_edges(g, s.members(), oracle) == s.size();
}

bool in_span(const Graph& g, const std::vector<Edge>& s, Edge e, const RankOracle& oracle) {
    e = make_edge(e.first, e.second);
    if (e.first < 0 || e.second >= g.vertex_count() || e.first == e.second)
        throw input_error("in_span: pair out of range");
    SpanTracker tracker(g, oracle);
    for (const auto& x : s) tracker.add_if_independent(x);
    return tracker.in_span(e);
}

EdgeSubset extend_to_maximal_independent(const Graph& g, const EdgeSubset& base,
                                         const EdgeSubset& pool,
                                         const RankOracle& oracle) {
    SpanTracker tracker(g, oracle);
    std::vector<Edge> result;
    for (const auto& e : base.members()) {
        if (!tracker.add_if_independent(e))
            throw input_error("extend_to_maximal_independent: base set is dependent");
        result.push_back(e);
    }
    for (const auto& e : pool.members()) {
        if (base.contains(e)) continue;
        if (tracker.add_if_independent(e)) result.push_back(e);
    }
    std::sort(result.begin(), result.end());
    return EdgeSubset(g, result);
}

}  // namespace rigi
