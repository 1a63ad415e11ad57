#include "goodfam/flow.hpp"

#include <algorithm>
#include <queue>

namespace goodfam {

namespace {

struct MaxFlow {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> g;
    explicit MaxFlow(int n) : g(n) {}
    void add(int a, int b, int cap) {
        g[a].push_back({b, static_cast<int>(g[b].size()), cap});
        g[b].push_back({a, static_cast<int>(g[a].size()) - 1, 0});
    }
    // shortest augmenting paths; every augmentation moves >= 1 unit
    int run(int s, int t, int limit) {
        int flow = 0;
        std::vector<int> prev_node(g.size()), prev_arc(g.size());
        while (flow < limit) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            std::queue<int> bfs;
            bfs.push(s);
            prev_node[s] = s;
            while (!bfs.empty() && prev_node[t] < 0) {
                int a = bfs.front();
                bfs.pop();
                for (int e = 0; e < static_cast<int>(g[a].size()); ++e) {
                    const Arc &arc = g[a][e];
                    if (arc.cap > 0 && prev_node[arc.to] < 0) {
                        prev_node[arc.to] = a;
                        prev_arc[arc.to] = e;
                        bfs.push(arc.to);
                    }
                }
            }
            if (prev_node[t] < 0) break;
            int push = limit - flow;
            for (int a = t; a != s; a = prev_node[a])
                push = std::min(push, g[prev_node[a]][prev_arc[a]].cap);
            for (int a = t; a != s; a = prev_node[a]) {
                Arc &arc = g[prev_node[a]][prev_arc[a]];
                arc.cap -= push;
                g[arc.to][arc.rev].cap += push;
            }
            flow += push;
        }
        return flow;
    }
};

enum class SplitRule { all_but_endpoints, non_terminals, none };

int connectivity(const SndpInstance &inst, const EdgeSet &edge_subset, int u,
                 int v, int limit, SplitRule rule,
                 const std::vector<int> *terminal_set) {
    int n = inst.vertex_count;
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("connectivity query needs two distinct vertices");
    std::vector<char> is_terminal(n, 0);
    if (terminal_set)
        for (int t : *terminal_set) {
            if (t < 0 || t >= n)
                throw std::invalid_argument("terminal outside vertex range");
            is_terminal[t] = 1;
        }
    if (rule == SplitRule::non_terminals && (!is_terminal[u] || !is_terminal[v]))
        throw std::invalid_argument("element connectivity endpoints must be terminals");
    // node 2w = in(w), 2w+1 = out(w); unsplit vertices route in -> out free
    MaxFlow mf(2 * n);
    for (int w = 0; w < n; ++w) {
        bool split = w != u && w != v &&
                     (rule == SplitRule::all_but_endpoints ||
                      (rule == SplitRule::non_terminals && !is_terminal[w]));
        mf.add(2 * w, 2 * w + 1, split ? 1 : INT_MAX);
    }
    for (int e : edge_subset) {
        if (e < 0 || e >= static_cast<int>(inst.edges.size()))
            throw std::invalid_argument("edge index outside instance");
        const SndpEdge &ed = inst.edges[e];
        mf.add(2 * ed.u + 1, 2 * ed.v, 1);
        mf.add(2 * ed.v + 1, 2 * ed.u, 1);
    }
    return mf.run(2 * u + 1, 2 * v, limit);
}

} // namespace

int vertex_connectivity(const SndpInstance &inst, const EdgeSet &edge_subset,
                        int u, int v, int limit) {
    return connectivity(inst, edge_subset, u, v, limit,
                        SplitRule::all_but_endpoints, nullptr);
}

int element_connectivity(const SndpInstance &inst, const EdgeSet &edge_subset,
                         const std::vector<int> &terminal_set, int u, int v,
                         int limit) {
    return connectivity(inst, edge_subset, u, v, limit, SplitRule::non_terminals,
                        &terminal_set);
}

int edge_connectivity(const SndpInstance &inst, const EdgeSet &edge_subset,
                      int u, int v, int limit) {
    return connectivity(inst, edge_subset, u, v, limit, SplitRule::none, nullptr);
}

} // namespace goodfam
