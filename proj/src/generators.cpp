#include "rigi/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace rigi {

namespace {

void add_clique(std::set<Edge>& edges, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            edges.insert(make_edge(verts[i], verts[j]));
}

Graph from_edge_set(int n, const std::set<Edge>& edges) {
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace

Graph complete_graph(int n) {
    std::set<Edge> es;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    add_clique(es, all);
    return from_edge_set(n, es);
}

Graph double_banana(bool hinge) {
    std::set<Edge> es;
    add_clique(es, {0, 1, 2, 3, 4});
    add_clique(es, {3, 4, 5, 6, 7});
    if (!hinge) es.erase({3, 4});
    return from_edge_set(8, es);
}

Graph double_banana_bar() {
    std::set<Edge> es;
    add_clique(es, {0, 1, 2, 3, 4});
    add_clique(es, {3, 4, 5, 6, 7});
    es.erase({3, 4});
    es.insert({0, 5});
    return from_edge_set(8, es);
}

std::vector<std::vector<int>> n_banana_parts(int n) {
    if (n <= 0) throw input_error("n_banana requires n >= 1");
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < n; ++i)
        parts.push_back({0, 1, 2 + 3 * i, 3 + 3 * i, 4 + 3 * i});
    return parts;
}

Graph n_banana(int n) {
    auto parts = n_banana_parts(n);
    std::set<Edge> es;
    for (const auto& p : parts) add_clique(es, p);
    es.erase({0, 1});
    return from_edge_set(3 * n + 2, es);
}

std::vector<std::vector<int>> k5_ring_parts(int n) {
    if (n < 3) throw input_error("k5_ring requires n >= 3");
    // Pair P_i = {3i, 3i+1} is shared by K5_{i-1} and K5_i; m_i = 3i+2 private.
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        parts.push_back({3 * i, 3 * i + 1, 3 * i + 2, 3 * j, 3 * j + 1});
    }
    return parts;
}

Graph k5_ring(int n) {
    auto parts = k5_ring_parts(n);
    std::set<Edge> es;
    for (const auto& p : parts) add_clique(es, p);
    return from_edge_set(3 * n, es);
}

SmrCounterGraph smr_counter() {
    std::set<Edge> es;
    std::vector<std::vector<int>> cover;
    cover.push_back({0, 1, 2, 3, 4});  // T
    add_clique(es, cover[0]);
    int next = 5;
    for (int r = 0; r < 5; ++r) {
        // Ring r extends the non-adjacent T edges (r, r+1) and (r+2, r+4).
        std::pair<int, int> q_prev{r, (r + 1) % 5};
        std::pair<int, int> q_last{(r + 2) % 5, (r + 4) % 5};
        for (int k = 1; k <= 6; ++k) {
            int mid = next++;
            std::pair<int, int> q_next;
            if (k < 6) {
                q_next = {next, next + 1};
                next += 2;
            } else {
                q_next = q_last;
            }
            std::vector<int> part{q_prev.first, q_prev.second, mid, q_next.first,
                                  q_next.second};
            std::sort(part.begin(), part.end());
            add_clique(es, part);
            cover.push_back(part);
            q_prev = q_next;
        }
    }
    return {from_edge_set(next, es), std::move(cover)};
}

std::vector<Edge> smr_counter_small_maximal_set(const SmrCounterGraph& sc) {
    std::map<Edge, int> share_count;
    for (const auto& part : sc.cover)
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                ++share_count[make_edge(part[i], part[j])];

    auto part_edges = [](const std::vector<int>& part) {
        std::vector<Edge> es;
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                es.push_back(make_edge(part[i], part[j]));
        std::sort(es.begin(), es.end());
        return es;
    };

    std::set<Edge> chosen;
    std::map<Edge, Edge> dropped_for;  // shared edge of T -> missing edge of its ring K5
    for (size_t p = 1; p < sc.cover.size(); ++p) {
        auto es = part_edges(sc.cover[p]);
        Edge drop{-1, -1};
        for (const auto& e : es)
            if (share_count.at(e) == 1) {
                drop = e;
                break;
            }
        for (const auto& e : es)
            if (e != drop) chosen.insert(e);
        for (const auto& e : es)
            if (share_count.at(e) > 1) {
                // remember which edge this K5 is missing, keyed by its shared edges
                if (!dropped_for.count(e)) dropped_for[e] = drop;
            }
    }
    // Swap: remove one edge e of T, add the missing edge f of the K5 sharing e.
    auto t_edges = part_edges(sc.cover[0]);
    Edge e = t_edges.front();
    chosen.erase(e);
    chosen.insert(dropped_for.at(e));
    return std::vector<Edge>(chosen.begin(), chosen.end());
}

Graph random_graph(int n, int m, std::uint64_t seed) {
    if (n < 0) throw input_error("random_graph: negative n");
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > total)
        throw input_error("random_graph: m exceeds the number of vertex pairs");
    std::vector<Edge> pool;
    pool.reserve(total);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
    std::mt19937_64 rng(seed);
    std::vector<Edge> picked;
    for (int i = 0; i < m; ++i) {
        size_t j = i + rng() % (pool.size() - i);
        std::swap(pool[i], pool[j]);
        picked.push_back(pool[i]);
    }
    return Graph(n, std::move(picked));
}

}  // namespace rigi
