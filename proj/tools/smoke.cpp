#include <cstdio>
#include "rigi/generators.hpp"
#include "rigi/sparsity.hpp"
#include "rigi/rigidity.hpp"
using namespace rigi;
int main() {
    Graph db = double_banana(true);
    std::printf("db: n=%d m=%d\n", db.vertex_count(), db.edge_count());
    auto mi = is_maxwell_independent(db, 3);
    std::printf("db maxwell-independent: %d (value %d)\n", mi.independent ? 1 : 0, mi.deficiency_value);
    RankOracle o(3, 0xC0FFEE);
    std::printf("rank(db)=%d rank(db no hinge)=%d rank(dbb)=%d\n",
        generic_rank(db, o), generic_rank(double_banana(false), o), generic_rank(double_banana_bar(), o));
    auto sc = smr_counter();
    std::printf("smr: n=%d m=%d parts=%zu\n", sc.graph.vertex_count(), sc.graph.edge_count(), sc.cover.size());
    auto mm = smr_counter_small_maximal_set(sc);
    std::printf("smr small maximal set size=%zu\n", mm.size());
    auto en = enumerate_maximal_maxwell_independent(db, 3, 1000);
    int mn = 1000, mx = 0;
    for (auto& s : en.sets) { mn = std::min(mn, s.size()); mx = std::max(mx, s.size()); }
    std::printf("db maximal sets: %zu sizes [%d..%d] truncated=%d\n", en.sets.size(), mn, mx, en.truncated ? 1 : 0);
    std::printf("nbanana3: rank=%d m=%d\n", generic_rank(n_banana(3), o), n_banana(3).edge_count());
    auto d1 = deficiency(complete_graph(5), 0, 1, 3);
    std::printf("K5 deficiency=%d witness=%zu\n", d1.value, d1.witness.size());
    std::printf("db rigid=%d dbnohinge rigid=%d k4path rigid=%d\n",
        is_maxwell_rigid(db, 3) ? 1 : 0, is_maxwell_rigid(double_banana(false), 3) ? 1 : 0,
        is_maxwell_rigid(Graph(4, {{0,1},{1,2},{2,3}}), 3) ? 1 : 0);
    return 0;
}
