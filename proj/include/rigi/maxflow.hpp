#pragma once

#include <cstdint>
#include <vector>

namespace rigi {

// Dinic max-flow on a small integer-capacity network.
class MaxFlow {
public:
    explicit MaxFlow(int nodes);

    static constexpr long long kInf = (1LL << 60);

    void add_arc(int from, int to, long long capacity);
    long long solve(int source, int sink);

    // After solve(): the inclusion-maximal minimum cut's source side, i.e.
    // the nodes that cannot reach the sink in the residual network.
    std::vector<char> max_source_side(int sink) const;

private:
    struct Arc {
        int to;
        long long cap;
        int rev;  // index of the reverse arc in arcs_[to]
    };
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long pushed);

    std::vector<std::vector<Arc>> arcs_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
};

}  // namespace rigi
