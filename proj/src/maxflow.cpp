#include "rigi/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace rigi {

MaxFlow::MaxFlow(int nodes) : arcs_(nodes) {}

void MaxFlow::add_arc(int from, int to, long long capacity) {
    arcs_[from].push_back({to, capacity, static_cast<int>(arcs_[to].size())});
    arcs_[to].push_back({from, 0, static_cast<int>(arcs_[from].size()) - 1});
}

bool MaxFlow::bfs(int s, int t) {
    level_.assign(arcs_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Arc& a : arcs_[v])
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
    }
    return level_[t] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long pushed) {
    if (v == t) return pushed;
    for (size_t& i = iter_[v]; i < arcs_[v].size(); ++i) {
        Arc& a = arcs_[v][i];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
        long long got = dfs(a.to, t, std::min(pushed, a.cap));
        if (got > 0) {
            a.cap -= got;
            arcs_[a.to][a.rev].cap += got;
            return got;
        }
    }
    return 0;
}

long long MaxFlow::solve(int source, int sink) {
    long long flow = 0;
    while (bfs(source, sink)) {
        iter_.assign(arcs_.size(), 0);
        while (long long got = dfs(source, sink, kInf)) flow += got;
    }
    return flow;
}

std::vector<char> MaxFlow::max_source_side(int sink) const {
    // Reverse BFS from the sink along residual arcs; a node u reaches the
    // sink iff some residual arc u->v leads to a reaching v. The twin arc
    // stored at v tells whether u->v has residual capacity.
    std::vector<char> reaches(arcs_.size(), 0);
    std::queue<int> q;
    reaches[sink] = 1;
    q.push(sink);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Arc& a : arcs_[v]) {
            const Arc& twin = arcs_[a.to][a.rev];  // arc a.to -> v
            if (twin.cap > 0 && !reaches[a.to]) {
                reaches[a.to] = 1;
                q.push(a.to);
            }
        }
    }
    std::vector<char> side(arcs_.size());
    for (size_t i = 0; i < side.size(); ++i) side[i] = !reaches[i];
    return side;
}

}  // namespace rigi
