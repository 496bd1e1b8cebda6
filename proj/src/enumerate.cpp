#include "scdecomp/enumerate.hpp"

#include <algorithm>
#include <queue>

#include "scdecomp/decompose.hpp"
#include "scdecomp/errors.hpp"

namespace scdecomp {

namespace {

struct EnumContext {
    const SsdOracles& oracles;
    const SolutionSink& sink;
    EnumCounters* counters;
    bool stopped = false;

    void emit(const VertexSet& s) {
        if (stopped) return;
        if (counters) counters->on_output();
        if (!sink(s)) stopped = true;
    }
};

void enum_ssd_rec(EnumContext& ctx, const VertexSet& S, const VertexSet& I, int depth) {
    if (ctx.stopped) return;
    if (ctx.counters) {
        ctx.counters->depth = depth;
        ctx.counters->peak_depth = std::max(ctx.counters->peak_depth, depth);
    }
    const bool even = depth % 2 == 0;
    if (even) ctx.emit(S);

    if (ctx.oracles.id(S)) {
        std::vector<VertexSet> classes = ctx.oracles.maxpss(S, I);
        VertexSet covered;
        for (const VertexSet& X : classes) {
            if (X.empty() || !S.contains_set(X) || X == S)
                throw InternalError("maxpss oracle returned a non-proper subset");
            if (covered.intersects(X))
                throw InternalError("maxpss oracle returned overlapping sets");
            covered = covered.unite(X);
            if (!X.contains_set(I))
                throw InternalError("maxpss oracle returned a set not containing the seed");
            enum_ssd_rec(ctx, X, I, depth + 1);
            if (ctx.stopped) return;
        }
    } else {
        VertexSet J = I;
        std::vector<VertexSet> removable = ctx.oracles.minrs(S, I);
        for (const VertexSet& Y : removable) {
            if (Y.empty() || !S.contains_set(Y))
                throw InternalError("minrs oracle returned a set outside the solution");
            if (J.intersects(Y))
                throw InternalError("minrs oracle returned sets overlapping each other or the seed");
            enum_ssd_rec(ctx, S.minus(Y), J, depth + 1);
            if (ctx.stopped) return;
            J = J.unite(Y);
        }
    }

    if (!even) ctx.emit(S);
}

} // namespace

void enum_ssd(const SsdOracles& oracles, const VertexSet& S, const VertexSet& I,
              const SolutionSink& sink, EnumCounters* counters, int depth) {
    if (I.empty()) throw PreconditionError("enum_ssd: seed set must be nonempty");
    if (!S.contains_set(I)) throw PreconditionError("enum_ssd: seed must be inside the solution");
    EnumContext ctx{oracles, sink, counters};
    enum_ssd_rec(ctx, S, I, depth);
}

SsdOracles strong_oracles(const Digraph& g, EnumCounters* counters) {
    auto charge = [counters](const Digraph& sub) {
        if (counters) {
            ++counters->oracle_calls;
            counters->add_work(sub.vertex_count() + sub.arc_count());
        }
    };

    SsdOracles oracles;
    oracles.id = [&g, counters, charge](const VertexSet& S) {
        if (S.size() == 1) {
            if (counters) ++counters->oracle_calls;
            return true;
        }
        InducedSubgraph sub = induced_subgraph(g, S);
        charge(sub.graph);
        return classify(sub.graph).kind == DisjointnessKind::MaxPssDisjoint;
    };
    oracles.maxpss = [&g, charge](const VertexSet& S, const VertexSet& I) {
        std::vector<VertexSet> out;
        if (S.size() == 1) return out;
        InducedSubgraph sub = induced_subgraph(g, S);
        charge(sub.graph);
        for (const VertexSet& X : detail::maxpss_maxpss_disjoint_unchecked(sub.graph)) {
            VertexSet lifted = sub.lift(X);
            if (lifted.contains_set(I)) out.push_back(std::move(lifted));
        }
        return out;
    };
    oracles.minrs = [&g, charge](const VertexSet& S, const VertexSet& I) {
        std::vector<VertexSet> out;
        if (S.size() == 1) return out;
        InducedSubgraph sub = induced_subgraph(g, S);
        charge(sub.graph);
        for (const MinRsPath& y : detail::all_minrs_of_minrs_disjoint(sub.graph)) {
            VertexSet lifted = sub.lift(y.set());
            if (!lifted.intersects(I)) out.push_back(std::move(lifted));
        }
        return out;
    };
    return oracles;
}

void enumerate_strong_subgraphs(const Digraph& g, const SolutionSink& sink,
                                EnumCounters* counters) {
    SsdOracles oracles = strong_oracles(g, counters);
    EnumContext ctx{oracles, sink, counters};

    // Processing components by smallest member and deleting that vertex is
    // the binary partition over vertices in ascending id order: when v is
    // popped, every smaller vertex has been deleted, so the popped component
    // is exactly v's strongly-connected component in the remaining graph.
    auto by_min = [](const VertexSet& a, const VertexSet& b) {
        return a.members().front() > b.members().front();
    };
    std::priority_queue<VertexSet, std::vector<VertexSet>, decltype(by_min)> pending(by_min);

    if (counters) counters->add_work(g.vertex_count() + g.arc_count());
    for (VertexSet& comp : strongly_connected_components(g)) pending.push(std::move(comp));

    while (!pending.empty() && !ctx.stopped) {
        VertexSet component = pending.top();
        pending.pop();
        Vertex v = component.members().front();
        enum_ssd_rec(ctx, component, VertexSet::single(v), 0);
        if (component.size() > 1) {
            VertexSet rest = component.without(v);
            InducedSubgraph sub = induced_subgraph(g, rest);
            if (counters) counters->add_work(sub.graph.vertex_count() + sub.graph.arc_count());
            for (const VertexSet& comp : strongly_connected_components(sub.graph))
                pending.push(sub.lift(comp));
        }
    }
    if (counters) counters->on_finish();
}

std::vector<VertexSet> collect_strong_subgraphs(const Digraph& g) {
    std::vector<VertexSet> out;
    enumerate_strong_subgraphs(g, [&out](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

} // namespace scdecomp
