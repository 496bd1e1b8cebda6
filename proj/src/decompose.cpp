#include "scdecomp/decompose.hpp"

#include <algorithm>

#include "scdecomp/errors.hpp"

namespace scdecomp {

namespace {

void require_strong(const Digraph& g, const char* who) {
    if (g.vertex_count() < 2)
        throw PreconditionError(std::string(who) + " requires at least two vertices");
    if (!is_strongly_connected(g))
        throw PreconditionError(std::string(who) + " requires a strongly-connected graph");
}

} // namespace

MinRsGeneration gen_minrs_without_root(const Digraph& g, Vertex s) {
    require_strong(g, "gen_minrs_without_root");
    const int n = g.vertex_count();
    if (s < 0 || s >= n) throw PreconditionError("root out of range");

    MinRsGeneration run{build_pair(g, s), {}, std::vector<int>(n, -1)};
    const DominatorTree& fwd = run.trees.forward;
    const DominatorTree& bwd = run.trees.backward;

    // Walk up from each forward-tree leaf while the chain stays a single-file
    // path in both trees; keep the result only if the walk ends on a
    // backward-tree leaf. Leaves are scanned in ascending id order.
    for (Vertex leaf = 0; leaf < n; ++leaf) {
        if (!fwd.is_leaf(leaf) || leaf == s) continue;
        if (static_cast<int>(bwd.children(leaf).size()) > 1) continue;
        Vertex u = leaf;
        std::vector<Vertex> chain{u};
        while (!bwd.is_leaf(u)) {
            Vertex p = fwd.parent(u);
            if (fwd.children(p).size() != 1) break;
            if (bwd.children(p).size() > 1) break;
            if (bwd.parent(p) != u || bwd.is_root(p)) break;
            u = p;
            chain.push_back(u);
        }
        if (!bwd.is_leaf(u)) continue;
        std::reverse(chain.begin(), chain.end()); // entry first, leaf last
        int index = static_cast<int>(run.minrs.size());
        for (Vertex v : chain) run.mark[v] = index;
        run.minrs.push_back(MinRsPath{std::move(chain)});
    }
    return run;
}

VertexSet complement_of(const Digraph& g, const MinRsGeneration& run, int index) {
    if (index < 0 || index >= static_cast<int>(run.minrs.size()))
        throw PreconditionError("complement_of: no such set");
    if (static_cast<int>(run.mark.size()) != g.vertex_count())
        throw PreconditionError("complement_of: generation run does not match graph");
    for (Vertex v : run.minrs[index].order)
        if (run.mark[v] != index)
            throw PreconditionError("complement_of: stale markings");

    const DominatorTree& fwd = run.trees.forward;
    std::vector<Vertex> kept;
    std::vector<Vertex> stack{fwd.root()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (run.mark[v] == index) continue; // skips exactly the removed path
        kept.push_back(v);
        for (Vertex w : fwd.children(v)) stack.push_back(w);
    }
    return VertexSet(std::move(kept));
}

MinRsDisjointness is_minrs_disjoint(const Digraph& g) {
    require_strong(g, "is_minrs_disjoint");
    const Vertex s = 0;
    MinRsGeneration from_s = gen_minrs_without_root(g, s);
    if (from_s.minrs.size() >= 2) return {true, std::move(from_s.minrs)};

    // A set avoiding s always exists, so the single-output case is total.
    const Vertex t = from_s.minrs.front().entry();
    MinRsGeneration from_t = gen_minrs_without_root(g, t);
    std::vector<MinRsPath> seen = std::move(from_s.minrs);
    if (from_t.minrs.size() >= 2) {
        // every set avoiding t differs from the first witness, which contains t
        for (auto& y : from_t.minrs) seen.push_back(std::move(y));
        return {true, std::move(seen)};
    }

    bool disjoint = !seen.front().set().intersects(from_t.minrs.front().set());
    seen.push_back(std::move(from_t.minrs.front()));
    return {disjoint, std::move(seen)};
}

Classification classify(const Digraph& g) {
    require_strong(g, "classify");
    MinRsDisjointness r = is_minrs_disjoint(g);
    if (!r.disjoint) return {DisjointnessKind::MaxPssDisjoint, std::move(r.witnesses)};
    // Both holds exactly when the two runs produced one set each and the two
    // sets partition V; the witnesses are then those two sets.
    if (r.witnesses.size() == 2) {
        int total = r.witnesses[0].size() + r.witnesses[1].size();
        if (total == g.vertex_count())
            return {DisjointnessKind::Both, std::move(r.witnesses)};
    }
    return {DisjointnessKind::MinRsDisjoint, std::move(r.witnesses)};
}

namespace detail {

std::vector<VertexSet> maxpss_minrs_disjoint_unchecked(const Digraph& g) {
    const Vertex s = 0;
    MinRsGeneration from_s = gen_minrs_without_root(g, s);
    std::vector<VertexSet> out;
    out.reserve(from_s.minrs.size() + 1);
    for (int i = 0; i < static_cast<int>(from_s.minrs.size()); ++i)
        out.push_back(complement_of(g, from_s, i));

    const Vertex t = from_s.minrs.front().entry();
    MinRsGeneration from_t = gen_minrs_without_root(g, t);
    for (int i = 0; i < static_cast<int>(from_t.minrs.size()); ++i) {
        if (from_t.minrs[i].set().contains(s)) out.push_back(complement_of(g, from_t, i));
    }
    return out;
}

std::vector<MinRsPath> all_minrs_of_minrs_disjoint(const Digraph& g) {
    const Vertex s = 0;
    MinRsGeneration from_s = gen_minrs_without_root(g, s);
    std::vector<MinRsPath> all = std::move(from_s.minrs);
    const Vertex t = all.front().entry();
    MinRsGeneration from_t = gen_minrs_without_root(g, t);
    for (auto& y : from_t.minrs)
        if (y.set().contains(s)) all.push_back(std::move(y));
    return all;
}

std::vector<VertexSet> maxpss_maxpss_disjoint_unchecked(const Digraph& g) {
    const Vertex s = 0;
    MinRsGeneration from_s = gen_minrs_without_root(g, s);
    if (from_s.minrs.size() != 1)
        throw InternalError("expected a unique minimal removable set avoiding the root; found " +
                            std::to_string(from_s.minrs.size()));
    std::vector<VertexSet> out;
    out.push_back(complement_of(g, from_s, 0));
    InducedSubgraph removed = induced_subgraph(g, from_s.minrs.front().set());
    for (const VertexSet& comp : strongly_connected_components(removed.graph))
        out.push_back(removed.lift(comp));
    return out;
}

} // namespace detail

std::vector<VertexSet> maxpss_all_minrs_disjoint(const Digraph& g) {
    Classification c = classify(g);
    if (c.kind == DisjointnessKind::MaxPssDisjoint)
        throw PreconditionError("maxpss_all_minrs_disjoint: graph is not MinRS-disjoint");
    return detail::maxpss_minrs_disjoint_unchecked(g);
}

std::vector<VertexSet> maxpss_all_maxpss_disjoint(const Digraph& g) {
    Classification c = classify(g);
    if (c.kind == DisjointnessKind::MinRsDisjoint)
        throw PreconditionError("maxpss_all_maxpss_disjoint: graph is not MaxPSS-disjoint");
    return detail::maxpss_maxpss_disjoint_unchecked(g);
}

std::pair<Classification, std::vector<VertexSet>> maxpss_all(const Digraph& g) {
    if (g.vertex_count() == 1)
        return {Classification{DisjointnessKind::Both, {}}, {}};
    Classification c = classify(g);
    std::vector<VertexSet> out = c.kind == DisjointnessKind::MaxPssDisjoint
                                     ? detail::maxpss_maxpss_disjoint_unchecked(g)
                                     : detail::maxpss_minrs_disjoint_unchecked(g);
    return {std::move(c), std::move(out)};
}

std::vector<VertexSet> maxpss_of_any_digraph(const Digraph& g) {
    if (g.vertex_count() < 1) throw PreconditionError("maxpss_of_any_digraph: empty graph");
    if (!is_strongly_connected(g)) return strongly_connected_components(g);
    return maxpss_all(g).second;
}

} // namespace scdecomp
