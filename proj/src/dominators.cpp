#include "scdecomp/dominators.hpp"

#include <algorithm>

#include "scdecomp/errors.hpp"

namespace scdecomp {

namespace {

// Link-eval forest for the simple Lengauer-Tarjan variant. Path compression
// is iterative; DFS-tree chains can be as long as n.
struct LinkEval {
    std::vector<Vertex> ancestor; // -1 when v is a forest root
    std::vector<Vertex> label;    // vertex with minimum semi on the path to the root
    const std::vector<int>& semi;
    std::vector<Vertex> path;

    explicit LinkEval(int n, const std::vector<int>& semi_numbers)
        : ancestor(n, -1), label(n), semi(semi_numbers) {
        for (int v = 0; v < n; ++v) label[v] = v;
    }

    void compress(Vertex v) {
        path.clear();
        while (ancestor[ancestor[v]] != -1) {
            path.push_back(v);
            v = ancestor[v];
        }
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            Vertex w = *it;
            if (semi[label[ancestor[w]]] < semi[label[w]]) label[w] = label[ancestor[w]];
            ancestor[w] = ancestor[ancestor[w]];
        }
    }

    Vertex eval(Vertex v) {
        if (ancestor[v] == -1) return v;
        compress(v);
        return label[v];
    }

    void link(Vertex parent, Vertex child) { ancestor[child] = parent; }
};

} // namespace

DominatorTree build_dominator_tree(const Digraph& g, Vertex s) {
    const int n = g.vertex_count();
    if (s < 0 || s >= n) throw PreconditionError("root out of range");

    // Iterative DFS from s, recording preorder numbers and tree parents.
    std::vector<int> dfn(n, -1);
    std::vector<Vertex> order;            // order[i] = vertex with dfs number i
    std::vector<Vertex> dfs_parent(n, -1);
    order.reserve(n);
    {
        std::vector<std::pair<Vertex, std::size_t>> stack;
        dfn[s] = 0;
        order.push_back(s);
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& succ = g.out(v);
            if (next < succ.size()) {
                Vertex w = succ[next++];
                if (dfn[w] == -1) {
                    dfn[w] = static_cast<int>(order.size());
                    order.push_back(w);
                    dfs_parent[w] = v;
                    stack.emplace_back(w, 0);
                }
            } else {
                stack.pop_back();
            }
        }
    }
    if (static_cast<int>(order.size()) != n) {
        for (Vertex v = 0; v < n; ++v)
            if (dfn[v] == -1)
                throw PreconditionError("vertex " + g.name_of(v) + " unreachable from root " +
                                        g.name_of(s));
    }

    std::vector<int> semi(n);
    for (Vertex v = 0; v < n; ++v) semi[v] = dfn[v];
    std::vector<Vertex> idom(n, -1);
    std::vector<std::vector<Vertex>> bucket(n);
    LinkEval forest(n, semi);

    for (int i = n - 1; i >= 1; --i) {
        Vertex w = order[i];
        for (Vertex v : g.in(w)) {
            Vertex u = forest.eval(v);
            semi[w] = std::min(semi[w], semi[u]);
        }
        bucket[order[semi[w]]].push_back(w);
        Vertex p = dfs_parent[w];
        forest.link(p, w);
        for (Vertex v : bucket[p]) {
            Vertex u = forest.eval(v);
            idom[v] = semi[u] < semi[v] ? u : p;
        }
        bucket[p].clear();
    }
    for (int i = 1; i < n; ++i) {
        Vertex w = order[i];
        if (idom[w] != order[semi[w]]) idom[w] = idom[idom[w]];
    }

    DominatorTree t;
    t.root_ = s;
    t.parent_.assign(n, s);
    t.children_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        if (v == s) continue;
        t.parent_[v] = idom[v];
        t.children_[idom[v]].push_back(v);
    }
    for (auto& ch : t.children_) std::sort(ch.begin(), ch.end());

    // preorder intervals for O(1) ancestor queries
    t.tin_.assign(n, 0);
    t.tout_.assign(n, 0);
    int clock = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack;
    t.tin_[s] = clock++;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < t.children_[v].size()) {
            Vertex w = t.children_[v][next++];
            t.tin_[w] = clock++;
            stack.emplace_back(w, 0);
        } else {
            t.tout_[v] = clock++;
            stack.pop_back();
        }
    }
    return t;
}

DominatorTreePair build_pair(const Digraph& g, Vertex s) {
    if (!is_strongly_connected(g))
        throw PreconditionError("build_pair requires a strongly-connected graph");
    return DominatorTreePair{build_dominator_tree(g, s),
                             build_dominator_tree(transpose(g), s)};
}

} // namespace scdecomp
