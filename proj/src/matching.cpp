#include "sumfree/matching.hpp"

#include <algorithm>
#include <queue>

namespace sumfree {

namespace {

// classic O(V^3) blossom algorithm: BFS for augmenting paths, contracting
// odd cycles through their base vertex
struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, flower;

    explicit Blossom(int n_) : n(n_), adj(n_), match(n_, -1) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            flower[base[v]] = 1;
            flower[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_path(int root) {
        used.assign(n, 0);
        parent.assign(n, -1);
        base.resize(n);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    flower.assign(n, 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (flower[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    int solve() {
        int res = 0;
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            if (u == -1) continue;
            ++res;
            while (u != -1) {
                int pv = parent[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
        return res;
    }
};

}  // namespace

int max_matching(int n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<int>* mate) {
    Blossom b(n);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        b.adj[u].push_back(v);
        b.adj[v].push_back(u);
    }
    int res = b.solve();
    if (mate) *mate = b.match;
    return res;
}

}  // namespace sumfree
