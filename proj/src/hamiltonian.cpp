#include "scdecomp/hamiltonian.hpp"

#include <algorithm>

#include "scdecomp/errors.hpp"

namespace scdecomp {

ClassGraph build_class_graph(const Digraph& g, const std::vector<VertexSet>& classes) {
    const int n = g.vertex_count();
    const int q = static_cast<int>(classes.size());
    std::vector<int> class_of(n, -1);
    int covered = 0;
    for (int i = 0; i < q; ++i) {
        for (Vertex v : classes[i]) {
            if (v < 0 || v >= n || class_of[v] != -1)
                throw PreconditionError("build_class_graph: classes are not a partition of V");
            class_of[v] = i;
            ++covered;
        }
    }
    if (covered != n)
        throw PreconditionError("build_class_graph: classes are not a partition of V");

    ClassGraph h;
    h.classes = classes;
    h.arcs.resize(q);
    std::vector<int> seen(q, -1);
    for (int i = 0; i < q; ++i) {
        for (Vertex u : classes[i]) {
            for (Vertex w : g.out(u)) {
                int j = class_of[w];
                if (j == i || seen[j] == i) continue;
                seen[j] = i;
                h.arcs[i].push_back({j, u, w});
            }
        }
        std::sort(h.arcs[i].begin(), h.arcs[i].end(),
                  [](const ClassGraph::Arc& a, const ClassGraph::Arc& b) { return a.to < b.to; });
    }
    return h;
}

bool is_valid_hamiltonian_cycle(const Digraph& g, const HamCycle& cycle) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle.order.size()) != n || n == 0) return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : cycle.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_arc(cycle.order[i], cycle.order[(i + 1) % n])) return false;
    return true;
}

namespace {

// Any simple entry-to-exit path; in a class of this decomposition such a
// path is forced to cover the whole class, which the caller asserts.
std::vector<Vertex> simple_path_dfs(const Digraph& g, Vertex from, Vertex to) {
    std::vector<char> visited(g.vertex_count(), 0);
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({from, 0});
    visited[from] = 1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.v == to) {
            std::vector<Vertex> path;
            path.reserve(stack.size());
            for (const Frame& fr : stack) path.push_back(fr.v);
            return path;
        }
        const auto& succ = g.out(f.v);
        if (f.next < succ.size()) {
            Vertex w = succ[f.next++];
            if (!visited[w]) {
                visited[w] = 1;
                stack.push_back({w, 0});
            }
        } else {
            visited[f.v] = 0;
            stack.pop_back();
        }
    }
    throw InternalError("no path between the chosen entry and exit of a class");
}

} // namespace

HamCycle hamiltonian_cycle(const Digraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("hamiltonian_cycle requires at least two vertices");
    auto [classification, classes] = maxpss_all(g);
    if (classification.kind == DisjointnessKind::MinRsDisjoint)
        throw PreconditionError(
            "hamiltonian_cycle: maximal proper subsets of the graph are not pairwise disjoint");

    ClassGraph h = build_class_graph(g, classes);
    const int q = h.size();

    // Follow first out-arcs until a node repeats; the walk closes into a
    // simple cycle, and every simple cycle here spans all q classes.
    std::vector<int> pos_in_walk(q, -1);
    std::vector<int> walk;
    int c = 0;
    while (pos_in_walk[c] == -1) {
        pos_in_walk[c] = static_cast<int>(walk.size());
        walk.push_back(c);
        if (h.arcs[c].empty()) throw InternalError("class graph has a sink; graph cannot be strongly connected");
        c = h.arcs[c].front().to;
    }
    std::vector<int> cycle_classes(walk.begin() + pos_in_walk[c], walk.end());
    if (static_cast<int>(cycle_classes.size()) != q)
        throw InternalError("class-graph cycle does not span all classes");

    // witness arcs along the cycle; entry of each class is the head of the
    // arc arriving from the previous class, exit is the tail toward the next
    std::vector<Vertex> entry(q), exit_v(q);
    for (int i = 0; i < q; ++i) {
        int from = cycle_classes[i];
        int to = cycle_classes[(i + 1) % q];
        const auto& arcs = h.arcs[from];
        auto it = std::find_if(arcs.begin(), arcs.end(),
                               [to](const ClassGraph::Arc& a) { return a.to == to; });
        if (it == arcs.end()) throw InternalError("missing witness arc along class cycle");
        exit_v[from] = it->tail;
        entry[to] = it->head;
    }

    HamCycle result;
    result.order.reserve(n);
    for (int ci : cycle_classes) {
        const VertexSet& members = h.classes[ci];
        if (members.size() == 1) {
            result.order.push_back(members.members().front());
            continue;
        }
        InducedSubgraph sub = induced_subgraph(g, members);
        std::vector<Vertex> path = simple_path_dfs(
            sub.graph, sub.from_parent[entry[ci]], sub.from_parent[exit_v[ci]]);
        for (Vertex v : path) result.order.push_back(sub.to_parent[v]);
    }
    if (static_cast<int>(result.order.size()) != n || !is_valid_hamiltonian_cycle(g, result))
        throw InternalError("stitched cycle does not have length n; this is a library bug");
    return result;
}

namespace {

struct SpanningSearch {
    const Digraph& g;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<char> excluded;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::pair<Vertex, Vertex>> found;

    Digraph candidate() const {
        std::vector<std::pair<Vertex, Vertex>> kept;
        kept.reserve(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (!excluded[i]) kept.push_back(arcs[i]);
        return Digraph::from_edges(g.vertex_count(), kept);
    }

    // Tests the largest candidate of this subtree, then branches by choosing
    // the next arc index to exclude. Exclusion indices increase along any
    // path, so every arc subset is visited at most once.
    bool run(std::size_t next) {
        if (out_of_budget) return false;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        Digraph cand = candidate();
        if (!is_strongly_connected(cand)) return false;
        if (cand.vertex_count() >= 2 &&
            classify(cand).kind != DisjointnessKind::MinRsDisjoint) {
            found = cand.arcs();
            return true;
        }
        for (std::size_t j = next; j < arcs.size(); ++j) {
            excluded[j] = 1;
            if (run(j + 1)) return true;
            excluded[j] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace

SpanningSearchResult hamiltonian_via_spanning_subgraph(const Digraph& g, std::uint64_t budget) {
    SpanningSearchResult result{SpanningSearchStatus::NoneExists, std::nullopt, std::nullopt, 0};
    if (g.vertex_count() < 2) return result;
    if (!is_strongly_connected(g)) return result; // every spanning subgraph fails too

    SpanningSearch search{g, g.arcs(), std::vector<char>(g.arc_count(), 0), budget, 0, false, {}};
    bool ok = search.run(0);
    result.nodes_explored = search.nodes;
    if (ok) {
        Digraph spanning = Digraph::from_edges(g.vertex_count(), search.found);
        result.status = SpanningSearchStatus::Found;
        result.cycle = hamiltonian_cycle(spanning);
        result.arcs = std::move(search.found);
    } else if (search.out_of_budget) {
        result.status = SpanningSearchStatus::BudgetExhausted;
    }
    return result;
}

std::pair<Vertex, Vertex> minrs_disjoint_making_edge(const Digraph& g) {
    if (g.vertex_count() < 3)
        throw PreconditionError("minrs_disjoint_making_edge requires at least three vertices");
    HamCycle cycle = hamiltonian_cycle(g); // also enforces the disjointness precondition
    Vertex from = cycle.order[0];
    Vertex to = cycle.order[2];
    if (g.has_arc(from, to))
        throw InternalError("forward chord unexpectedly present; this is a library bug");
    return {from, to};
}

} // namespace scdecomp
