#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "scdecomp/digraph.hpp"

namespace scdecomp {

/// Receives each enumerated solution exactly once, in emission order.
/// Return false to stop the enumeration early.
using SolutionSink = std::function<bool(const VertexSet&)>;

/// Work accounting for the delay guarantee. "touched" advances by one per
/// vertex or arc a driver or oracle examines; gaps are measured in touched
/// units between consecutive sink calls (including before the first output
/// and after the last).
struct EnumCounters {
    std::uint64_t touched = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t outputs = 0;
    std::uint64_t max_gap = 0;
    int depth = 0;
    int peak_depth = 0;

    void add_work(std::uint64_t units) { touched += units; }
    void on_output() {
        max_gap = std::max(max_gap, touched - last_mark_);
        last_mark_ = touched;
        ++outputs;
    }
    void on_finish() { max_gap = std::max(max_gap, touched - last_mark_); }

private:
    std::uint64_t last_mark_ = 0;
};

/// The three oracles that present a Superset-Subset-Disjoint set system
/// implicitly. id(S) answers whether the maximal proper subset solutions of
/// S are pairwise disjoint; maxpss(S, I) lists those containing I (consulted
/// only when id is true); minrs(S, I) lists the minimal removable sets
/// disjoint from I (consulted only when id is false). Each call must return
/// pairwise-disjoint sets.
struct SsdOracles {
    std::function<bool(const VertexSet& S)> id;
    std::function<std::vector<VertexSet>(const VertexSet& S, const VertexSet& I)> maxpss;
    std::function<std::vector<VertexSet>(const VertexSet& S, const VertexSet& I)> minrs;
};

/// Enumerates every solution S' with I <= S' <= S, each exactly once.
/// S must itself be a solution and I a nonempty subset of it.
///
/// S is emitted before the recursion at even depth and after it at odd
/// depth, which is what bounds the delay by the cost of a single frame.
/// Oracle outputs that violate their contract raise InternalError.
void enum_ssd(const SsdOracles& oracles, const VertexSet& S, const VertexSet& I,
              const SolutionSink& sink, EnumCounters* counters = nullptr, int depth = 0);

/// Oracles for the strongly-connected system of g, answering in terms of
/// g's vertex ids. Singletons short-circuit; larger queries run the
/// decomposition machinery on the induced subgraph. The returned closures
/// reference g, which must outlive them.
SsdOracles strong_oracles(const Digraph& g, EnumCounters* counters = nullptr);

/// Streams every vertex subset of g that induces a strongly-connected
/// subgraph, duplicate-free, in linear delay. Binary partition over vertices
/// in ascending id order: the branch for v enumerates the solutions that
/// contain v but no smaller vertex.
void enumerate_strong_subgraphs(const Digraph& g, const SolutionSink& sink,
                                EnumCounters* counters = nullptr);

/// Convenience sink that materializes the stream.
std::vector<VertexSet> collect_strong_subgraphs(const Digraph& g);

} // namespace scdecomp
