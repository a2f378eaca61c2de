#include "rigi/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

#include "rigi/maxflow.hpp"

namespace rigi {

namespace {

// Vertices touched by `edges`, ascending.
std::vector<int> edge_support(const std::vector<Edge>& edges) {
    std::vector<int> s;
    for (const auto& [u, v] : edges) {
        s.push_back(u);
        s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

int count_edges_within(const std::vector<Edge>& edges, const std::vector<char>& in) {
    int m = 0;
    for (const auto& [u, v] : edges)
        if (in[u] && in[v]) ++m;
    return m;
}

struct ForcedRun {
    int value;
    std::vector<int> witness;
};

// One project-selection flow: source -> edge nodes (cap 1), edge node -> its
// two endpoint vertex nodes (cap inf), vertex node -> sink (cap d; 0 for
// forced vertices). max over V' >= forced of m(V') - d|V'| equals
// |E| - d|forced| - maxflow; the maximal min-cut source side is the unique
// inclusion-maximal maximizer (supermodularity).
ForcedRun forced_flow(int n, const std::vector<Edge>& edges,
                      const std::vector<int>& forced, int d, bool want_witness) {
    const int m = static_cast<int>(edges.size());
    const int l = d * (d + 1) / 2;
    MaxFlow net(2 + m + n);
    const int s = 0, t = 1;
    auto vnode = [&](int v) { return 2 + m + v; };
    std::vector<char> is_forced(n, 0);
    for (int v : forced) is_forced[v] = 1;
    for (int i = 0; i < m; ++i) {
        net.add_arc(s, 2 + i, 1);
        net.add_arc(2 + i, vnode(edges[i].first), MaxFlow::kInf);
        net.add_arc(2 + i, vnode(edges[i].second), MaxFlow::kInf);
    }
    for (int v = 0; v < n; ++v) net.add_arc(vnode(v), t, is_forced[v] ? 0 : d);
    long long flow = net.solve(s, t);
    int value = static_cast<int>(m - static_cast<long long>(d) * forced.size() - flow) + l;
    ForcedRun run{value, {}};
    if (want_witness) {
        auto side = net.max_source_side(t);
        std::vector<char> in(n, 0);
        for (int v = 0; v < n; ++v)
            if (side[vnode(v)]) in[v] = 1;
        for (int v : forced) in[v] = 1;
        for (int v = 0; v < n; ++v)
            if (in[v]) run.witness.push_back(v);
        int check = count_edges_within(edges, in) -
                    d * static_cast<int>(run.witness.size()) + l;
        if (check != value)
            throw internal_error("flow witness does not reproduce the deficiency value");
    }
    return run;
}

template <typename Fn>
bool for_each_combination(const std::vector<int>& pool, int k, Fn&& fn) {
    // fn returns false to stop early; returns true if the loop ran to the end.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > static_cast<int>(pool.size())) return true;
    std::vector<int> pick(k);
    while (true) {
        for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
        if (!fn(pick)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

constexpr int kDpSupportLimit = 18;

// Value of max over V' containing {u,v} with |V'| >= d, over an arbitrary
// edge list. Small supports use a subset DP over the support; larger ones
// fall back to forced flow runs. Sets smaller than d are padded to exactly d
// vertices (each extra vertex costs d), which realizes the |V'| >= d floor.
int pair_deficiency_value(int n, const std::vector<Edge>& edges, int u, int v, int d) {
    if (n < d) return Deficiency::kNegInf;
    const int l = d * (d + 1) / 2;
    std::vector<int> free_verts;
    for (int w : edge_support(edges))
        if (w != u && w != v) free_verts.push_back(w);
    const int k = static_cast<int>(free_verts.size());

    if (k <= kDpSupportLimit) {
        std::vector<uint32_t> adj(k, 0);
        std::vector<int> to_uv(k, 0);
        auto slot = [&](int w) {
            auto it = std::lower_bound(free_verts.begin(), free_verts.end(), w);
            return (it != free_verts.end() && *it == w)
                       ? static_cast<int>(it - free_verts.begin())
                       : -1;
        };
        int base_edges = 0;
        for (const auto& [a, b] : edges) {
            bool au = (a == u || a == v), bu = (b == u || b == v);
            if (au && bu) {
                base_edges = 1;
                continue;
            }
            if (au || bu) {
                ++to_uv[au ? slot(b) : slot(a)];
                continue;
            }
            int sa = slot(a), sb = slot(b);
            adj[sa] |= (1u << sb);
            adj[sb] |= (1u << sa);
        }
        std::vector<int> dp(size_t{1} << k);
        dp[0] = base_edges;
        int best = Deficiency::kNegInf;
        int small_best = Deficiency::kNegInf;  // best edge count among |S| < d
        if (2 >= d)
            best = base_edges - 2 * d + l;
        else
            small_best = base_edges;
        for (uint32_t mask = 1; mask < (1u << k); ++mask) {
            int low = std::countr_zero(mask);
            uint32_t prev = mask & (mask - 1);
            dp[mask] = dp[prev] + std::popcount(adj[low] & prev) + to_uv[low];
            int sz = std::popcount(mask) + 2;
            if (sz >= d)
                best = std::max(best, dp[mask] - d * sz + l);
            else
                small_best = std::max(small_best, dp[mask]);
        }
        if (small_best != Deficiency::kNegInf)
            best = std::max(best, small_best - d * d + l);
        return best;
    }

    // Flow fallback. Support exceeds the DP limit, so forced (d-2)-subsets of
    // the support suffice (maximizers never benefit from isolated vertices
    // once enough support vertices exist).
    int best = Deficiency::kNegInf;
    std::vector<int> base{u, v};
    if (d == 2) return forced_flow(n, edges, base, d, false).value;
    for_each_combination(free_verts, d - 2, [&](const std::vector<int>& w) {
        std::vector<int> forced = base;
        forced.insert(forced.end(), w.begin(), w.end());
        best = std::max(best, forced_flow(n, edges, forced, d, false).value);
        return true;
    });
    return best;
}

void check_dimension(int d) {
    if (d < 1) throw input_error("dimension must be >= 1");
}

}  // namespace

int maxwell_count(const Graph& g, int d, bool include_isolated) {
    check_dimension(d);
    int nv = include_isolated ? g.vertex_count() : g.support_size();
    return d * nv - g.edge_count();
}

Deficiency forced_deficiency(int n, const std::vector<Edge>& edges,
                             const std::vector<int>& forced, int d) {
    check_dimension(d);
    for (int v : forced)
        if (v < 0 || v >= n) throw input_error("forced vertex out of range");
    auto run = forced_flow(n, edges, forced, d, true);
    return {run.value, run.witness};
}

Deficiency forced_deficiency(const Graph& g, const std::vector<int>& forced, int d) {
    return forced_deficiency(g.vertex_count(), g.edges(), forced, d);
}

Deficiency deficiency(const Graph& g, int u, int v, int d) {
    check_dimension(d);
    if (u == v) throw input_error("deficiency requires a pair of distinct vertices");
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("vertex out of range");
    if (n < d) return {};
    if (d == 2) return forced_deficiency(g, {u, v}, 2);
    std::vector<int> pool;
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) pool.push_back(w);
    Deficiency best;
    for_each_combination(pool, d - 2, [&](const std::vector<int>& w) {
        std::vector<int> forced{u, v};
        forced.insert(forced.end(), w.begin(), w.end());
        auto run = forced_flow(n, g.edges(), forced, d, true);
        if (!best.defined() || run.value > best.value)
            best = Deficiency{run.value, run.witness};
        return true;
    });
    return best;
}

MaxwellIndependence is_maxwell_independent(const Graph& g, int d) {
    check_dimension(d);
    for (const auto& [u, v] : g.edges()) {
        int val = pair_deficiency_value(g.vertex_count(), g.edges(), u, v, d);
        if (val > 0) {
            auto def = deficiency(g, u, v, d);
            if (def.value != val)
                throw internal_error("deficiency paths disagree");
            return {false, def.witness, {u, v}, def.value};
        }
    }
    return {};
}

bool edge_admissible(const EdgeSubset& m, Edge e, int d) {
    check_dimension(d);
    e = make_edge(e.first, e.second);
    if (!m.parent().has_edge(e.first, e.second))
        throw input_error("candidate edge is not an edge of the parent graph");
    if (m.contains(e)) throw input_error("candidate edge already in the subset");
    std::vector<Edge> edges = m.members();
    edges.push_back(e);
    return pair_deficiency_value(m.parent().vertex_count(), edges, e.first, e.second,
                                 d) <= 0;
}

std::vector<int> seeded_edge_order(int edge_count, std::uint64_t seed) {
    std::vector<int> order(edge_count);
    for (int i = 0; i < edge_count; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    for (int i = edge_count - 1; i > 0; --i)
        std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
    return order;
}

EdgeSubset maximal_maxwell_independent(const Graph& g, int d,
                                       const std::vector<int>& order) {
    check_dimension(d);
    const int m = g.edge_count();
    std::vector<int> ord = order;
    if (ord.empty())
        for (int i = 0; i < m; ++i) ord.push_back(i);
    std::vector<char> seen(m, 0);
    if (static_cast<int>(ord.size()) != m)
        throw input_error("order must permute all edges");
    for (int i : ord) {
        if (i < 0 || i >= m || seen[i]) throw input_error("order is not a permutation");
        seen[i] = 1;
    }
    const int n = g.vertex_count();
    std::vector<Edge> chosen;
    std::vector<Edge> rejected;
    for (int i : ord) {
        Edge e = g.edges()[i];
        chosen.push_back(e);
        if (pair_deficiency_value(n, chosen, e.first, e.second, d) > 0) {
            chosen.pop_back();
            rejected.push_back(e);
        }
    }
    for (const Edge& e : rejected) {
        chosen.push_back(e);
        int val = pair_deficiency_value(n, chosen, e.first, e.second, d);
        chosen.pop_back();
        if (val <= 0) throw internal_error("greedy result is not maximal");
    }
    return EdgeSubset(g, chosen);
}

MaximalSetEnumeration enumerate_maximal_maxwell_independent(const Graph& g, int d,
                                                            int cap) {
    check_dimension(d);
    MaximalSetEnumeration result;
    const auto& edges = g.edges();
    const int m = g.edge_count();
    const int n = g.vertex_count();
    std::vector<Edge> chosen;
    std::vector<Edge> excluded;

    std::function<void(int)> go = [&](int i) {
        if (result.truncated) return;
        if (i == m) {
            for (const Edge& x : excluded) {
                chosen.push_back(x);
                int val = pair_deficiency_value(n, chosen, x.first, x.second, d);
                chosen.pop_back();
                if (val <= 0) return;  // x would still fit: not maximal
            }
            if (static_cast<int>(result.sets.size()) == cap) {
                result.truncated = true;
                return;
            }
            result.sets.emplace_back(g, chosen);
            return;
        }
        Edge e = edges[i];
        chosen.push_back(e);
        bool admissible =
            pair_deficiency_value(n, chosen, e.first, e.second, d) <= 0;
        if (admissible) go(i + 1);
        chosen.pop_back();

        // Excluding e is only viable if some completion blocks it; the most
        // permissive completion is everything still undecided.
        std::vector<Edge> widest = chosen;
        widest.insert(widest.end(), edges.begin() + i, edges.end());
        if (pair_deficiency_value(n, widest, e.first, e.second, d) > 0) {
            excluded.push_back(e);
            go(i + 1);
            excluded.pop_back();
        }
    };
    go(0);
    return result;
}

std::optional<std::vector<Edge>> tight_spanning_set(const Graph& g, int d) {
    check_dimension(d);
    const int n = g.vertex_count();
    const int l = d * (d + 1) / 2;
    const auto& edges = g.edges();
    const int m = g.edge_count();
    if (n <= d - 1) {
        if (m == n * (n - 1) / 2) return g.edges();  // clique exemption
        return std::nullopt;
    }
    const int target = d * n - l;
    if (m < target || g.support_size() < n) return std::nullopt;

    std::vector<Edge> chosen;
    std::function<bool(int)> go = [&](int i) -> bool {
        if (static_cast<int>(chosen.size()) == target) return true;
        if (i == m) return false;
        if (static_cast<int>(chosen.size()) + (m - i) < target) return false;
        Edge e = edges[i];
        chosen.push_back(e);
        if (pair_deficiency_value(n, chosen, e.first, e.second, d) <= 0 && go(i + 1))
            return true;
        chosen.pop_back();
        return go(i + 1);
    };
    if (go(0)) return chosen;
    return std::nullopt;
}

bool is_maxwell_rigid(const Graph& g, int d) {
    return tight_spanning_set(g, d).has_value();
}

StrongRigidity is_strong_maxwell_rigid(const Graph& g, int d, int cap) {
    check_dimension(d);
    const int l = d * (d + 1) / 2;
    auto enumeration = enumerate_maximal_maxwell_independent(g, d, cap);
    StrongRigidity out;
    if (enumeration.truncated) {
        out.verdict = StrongRigidity::Verdict::indeterminate;
        return out;
    }
    for (const auto& s : enumeration.sets) {
        auto support = s.support();
        int sz = static_cast<int>(support.size());
        bool tight = sz >= d && s.size() == d * sz - l;
        bool exempt_clique = sz < d && s.size() == sz * (sz - 1) / 2;
        if (!tight && !exempt_clique) {
            out.verdict = StrongRigidity::Verdict::no;
            out.counterexample = s.members();
            return out;
        }
    }
    return out;
}

}  // namespace rigi
