#include "scdecomp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "scdecomp/errors.hpp"

namespace scdecomp::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Vertex> mask_members(Mask m) {
    std::vector<Vertex> out;
    for (int v = 0; m != 0; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

Mask to_mask(const VertexSet& s) {
    if (!s.empty() && s.members().back() >= 32)
        throw PreconditionError("oracle sets are limited to 32 elements");
    return static_cast<Mask>(s.bits());
}

struct MaskAdjacency {
    std::vector<Mask> out;
    std::vector<Mask> in;

    explicit MaskAdjacency(const Digraph& g)
        : out(g.vertex_count(), 0), in(g.vertex_count(), 0) {
        for (auto [u, v] : g.arcs()) {
            out[u] |= Mask{1} << v;
            in[v] |= Mask{1} << u;
        }
    }
};

Mask closure(const std::vector<Mask>& adj, Mask inside, Vertex start) {
    Mask reached = Mask{1} << start;
    Mask frontier = reached;
    while (frontier != 0) {
        Mask next = 0;
        Mask f = frontier;
        for (int v = std::countr_zero(f); f != 0; f &= f - 1, v = std::countr_zero(f))
            next |= adj[v];
        next &= inside & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

bool mask_strongly_connected(const MaskAdjacency& adj, Mask subset) {
    if (subset == 0) return false;
    Vertex v = std::countr_zero(subset);
    return closure(adj.out, subset, v) == subset && closure(adj.in, subset, v) == subset;
}

// Maximal proper-subset solutions of C, as masks. Scanning larger solutions
// first keeps the maximal list short while filtering.
std::vector<Mask> maximal_proper_subsets(const std::vector<Mask>& solutions, Mask c) {
    std::vector<Mask> candidates;
    for (Mask s : solutions)
        if (s != c && (s & ~c) == 0) candidates.push_back(s);
    std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::vector<Mask> maximal;
    for (Mask s : candidates) {
        bool dominated = false;
        for (Mask t : maximal)
            if ((s & ~t) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }
    return maximal;
}

std::vector<Mask> minimal_removable_sets(const std::vector<Mask>& solutions, Mask c) {
    std::vector<Mask> out;
    for (Mask x : maximal_proper_subsets(solutions, c)) out.push_back(c & ~x);
    return out;
}

std::vector<VertexSet> masks_to_sets(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (Mask m : masks) out.emplace_back(mask_members(m));
    return out;
}

std::vector<Mask> system_masks(const SetSystem& system) {
    if (system.universe > 32) throw PreconditionError("set-system universe limited to 32 elements");
    std::vector<Mask> masks;
    masks.reserve(system.solutions.size());
    for (const VertexSet& s : system.solutions) masks.push_back(to_mask(s));
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
        throw PreconditionError("set system contains duplicate solutions");
    return masks;
}

} // namespace

SetSystem brute_solutions(const Digraph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw PreconditionError("brute_solutions limited to 20 vertices");
    MaskAdjacency adj(g);
    SetSystem system{n, {}};
    for (Mask subset = 1; subset < (Mask{1} << n); ++subset)
        if (mask_strongly_connected(adj, subset))
            system.solutions.emplace_back(mask_members(subset));
    return system;
}

std::vector<VertexSet> brute_maxpss(const SetSystem& system, const VertexSet& C) {
    return masks_to_sets(maximal_proper_subsets(system_masks(system), to_mask(C)));
}

std::vector<VertexSet> brute_minrs(const SetSystem& system, const VertexSet& C) {
    std::vector<Mask> solutions = system_masks(system);
    Mask c = to_mask(C);

    // independent route: minimal nonempty Y with C minus Y a solution
    std::vector<Mask> removable;
    for (Mask s : solutions)
        if (s != c && (s & ~c) == 0) removable.push_back(c & ~s);
    std::sort(removable.begin(), removable.end(), [](Mask a, Mask b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<Mask> minimal;
    for (Mask y : removable) {
        bool dominates = false;
        for (Mask z : minimal)
            if ((z & ~y) == 0) {
                dominates = true;
                break;
            }
        if (!dominates) minimal.push_back(y);
    }

    std::vector<Mask> dual = minimal_removable_sets(solutions, c);
    std::sort(minimal.begin(), minimal.end());
    std::sort(dual.begin(), dual.end());
    if (minimal != dual)
        throw InternalError("minimal removable sets disagree with complement duality");
    return masks_to_sets(std::move(minimal));
}

bool check_ssd(const SetSystem& system) {
    std::vector<Mask> solutions = system_masks(system);
    for (Mask s : solutions) {
        std::vector<Mask> minrs = minimal_removable_sets(solutions, s);
        if (minrs.empty()) continue;
        for (Mask sp : solutions) {
            if (sp == s || (sp & ~s) != 0) continue; // need sp proper subset of s
            for (Mask y : minrs) {
                bool superset = (sp & ~y) == 0;
                bool subset = (y & ~sp) == 0;
                bool disjoint = (y & sp) == 0;
                if (!superset && !subset && !disjoint) return false;
            }
        }
    }
    return true;
}

bool check_sd(const SetSystem& system) {
    std::vector<Mask> solutions = system_masks(system);
    for (Mask s : solutions) {
        std::vector<Mask> minrs = minimal_removable_sets(solutions, s);
        if (minrs.empty()) continue;
        for (Mask sp : solutions) {
            if (sp == s || (sp & ~s) != 0) continue;
            for (Mask y : minrs) {
                bool subset = (y & ~sp) == 0;
                bool disjoint = (y & sp) == 0;
                if (!subset && !disjoint) return false;
            }
        }
    }
    return true;
}

bool check_confluent(const SetSystem& system) {
    std::vector<Mask> solutions = system_masks(system);
    const int n = system.universe;
    if (n > 24) throw PreconditionError("check_confluent limited to 24 elements");
    // upward closure: has_sub[m] = some solution is a subset of m
    std::vector<char> has_sub(std::size_t{1} << n, 0);
    for (Mask s : solutions) has_sub[s] = 1;
    for (int v = 0; v < n; ++v)
        for (Mask m = 0; m < (Mask{1} << n); ++m)
            if ((m >> v) & 1) has_sub[m] = has_sub[m] | has_sub[m & ~(Mask{1} << v)];

    std::vector<char> is_solution(std::size_t{1} << n, 0);
    for (Mask s : solutions) is_solution[s] = 1;
    for (Mask s : solutions)
        for (Mask sp : solutions) {
            if (sp <= s) continue; // unordered pairs once; same-set pair is trivial
            if (has_sub[s & sp] && !is_solution[s | sp]) return false;
        }
    return true;
}

namespace {

bool all_pairs_reachable(const MaskAdjacency& adj, Mask subset) {
    return mask_strongly_connected(adj, subset);
}

bool k_edge_connected_impl(const Digraph& g, const VertexSet& S, int k, bool undirected) {
    if (S.empty()) return false;
    if (S.size() == 1) return true; // single-vertex convention: infinite connectivity
    if (k <= 0) return true;

    InducedSubgraph sub = induced_subgraph(g, S);
    std::vector<std::pair<Vertex, Vertex>> units; // removal units: arcs, or edge pairs
    if (undirected) {
        for (auto [u, v] : sub.graph.arcs()) {
            if (u < v) units.emplace_back(u, v);
            if (!sub.graph.has_arc(v, u))
                throw PreconditionError("undirected oracle requires a symmetric digraph");
        }
    } else {
        units = sub.graph.arcs();
    }
    if (static_cast<int>(units.size()) < k) return false; // some cut smaller than k exists
    if (units.size() > 62) throw PreconditionError("k-edge oracle limited to 62 removal units");

    // every removal of fewer than k units must keep the subgraph strongly
    // connected
    auto test_removal = [&](const std::vector<int>& chosen, int count) {
        std::vector<std::pair<Vertex, Vertex>> kept;
        std::vector<char> removed(units.size(), 0);
        for (int i = 0; i < count; ++i) removed[chosen[i]] = 1;
        for (std::size_t i = 0; i < units.size(); ++i) {
            if (removed[i]) continue;
            kept.push_back(units[i]);
            if (undirected) kept.emplace_back(units[i].second, units[i].first);
        }
        Digraph rest = Digraph::from_edges(sub.graph.vertex_count(), kept);
        MaskAdjacency adj(rest);
        Mask all = (Mask{1} << rest.vertex_count()) - 1;
        return all_pairs_reachable(adj, all);
    };

    // choose all subsets of units of size 0..k-1
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start, int remaining) -> bool {
        if (!test_removal(chosen, static_cast<int>(chosen.size()))) return false;
        if (remaining == 0) return true;
        for (int i = start; i < static_cast<int>(units.size()); ++i) {
            chosen.push_back(i);
            if (!self(self, i + 1, remaining - 1)) return false;
            chosen.pop_back();
        }
        return true;
    };
    return rec(rec, 0, k - 1);
}

} // namespace

bool brute_k_edge_connected(const Digraph& g, const VertexSet& S, int k) {
    return k_edge_connected_impl(g, S, k, false);
}

bool brute_k_edge_connected_undirected(const Digraph& symmetric, const VertexSet& S, int k) {
    return k_edge_connected_impl(symmetric, S, k, true);
}

SetSystem brute_k_edge_system(const Digraph& g, int k, bool undirected) {
    const int n = g.vertex_count();
    if (n > 16) throw PreconditionError("brute_k_edge_system limited to 16 vertices");
    SetSystem system{n, {}};
    for (Mask subset = 1; subset < (Mask{1} << n); ++subset) {
        VertexSet s(mask_members(subset));
        bool ok = undirected ? brute_k_edge_connected_undirected(g, s, k)
                             : brute_k_edge_connected(g, s, k);
        if (ok) system.solutions.push_back(std::move(s));
    }
    return system;
}

std::optional<HamCycle> brute_hamiltonian(const Digraph& g) {
    const int n = g.vertex_count();
    if (n > 12) throw PreconditionError("brute_hamiltonian limited to 12 vertices");
    if (n == 0) return std::nullopt;
    if (n == 1) return std::nullopt; // a simple n-cycle needs a self-loop here

    std::vector<Vertex> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == n) return g.has_arc(path.back(), 0);
        for (Vertex w : g.out(path.back())) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (self(self)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return HamCycle{std::move(path)};
}

VertexSet brute_strong_articulation_points(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> points;
    if (n <= 1) return VertexSet(std::move(points));
    const std::size_t base = strongly_connected_components(g).size();
    for (Vertex v = 0; v < n; ++v) {
        InducedSubgraph rest = induced_subgraph(g, VertexSet::full(n).without(v));
        if (strongly_connected_components(rest.graph).size() > base) points.push_back(v);
    }
    return VertexSet(std::move(points));
}

} // namespace scdecomp::oracle
