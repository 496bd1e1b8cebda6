#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scdecomp/decompose.hpp"
#include "scdecomp/digraph.hpp"

namespace scdecomp {

/// Condensation-style digraph over the maximal-proper-subset partition:
/// one node per class, an arc (i, j) when some graph arc leaves class i for
/// class j, with one witness arc kept per class pair.
struct ClassGraph {
    struct Arc {
        int to;
        Vertex tail; // witness arc in the underlying graph
        Vertex head;
    };
    std::vector<VertexSet> classes;
    std::vector<std::vector<Arc>> arcs; // per class, ordered by target class

    int size() const { return static_cast<int>(classes.size()); }
};

/// Builds the class graph for a strongly-connected graph whose maximal
/// proper strongly-connected subsets are the given partition of V.
ClassGraph build_class_graph(const Digraph& g, const std::vector<VertexSet>& classes);

/// Cyclic vertex order visiting every vertex exactly once along arcs of g.
struct HamCycle {
    std::vector<Vertex> order;
};

/// Checks both cycle invariants directly against g.
bool is_valid_hamiltonian_cycle(const Digraph& g, const HamCycle& cycle);

/// Constructs a Hamiltonian cycle of a strongly-connected graph whose
/// maximal proper subsets are pairwise disjoint (classification
/// MaxPssDisjoint or Both). Any cycle of the class graph spans all classes,
/// so stitching witness arcs with one entry-to-exit path per class is forced
/// to have length n; that length is still asserted and a failure raises
/// InternalError rather than returning a short cycle.
HamCycle hamiltonian_cycle(const Digraph& g);

enum class SpanningSearchStatus { Found, NoneExists, BudgetExhausted };

struct SpanningSearchResult {
    SpanningSearchStatus status;
    std::optional<HamCycle> cycle;                          // set when Found
    std::optional<std::vector<std::pair<Vertex, Vertex>>> arcs; // the spanning arc set used
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive search for an arc subset F such that (V, F) is strongly
/// connected with pairwise-disjoint maximal proper subsets; on success the
/// cycle is constructed inside (V, F). Larger candidates are tested first
/// and subtrees whose largest candidate is not strongly connected are
/// pruned. The search stops after visiting `budget` candidates and reports
/// BudgetExhausted; deciding the question is NP-hard, so only a bounded
/// search is offered.
SpanningSearchResult hamiltonian_via_spanning_subgraph(const Digraph& g,
                                                       std::uint64_t budget = 1'000'000);

/// For a strongly-connected graph with pairwise-disjoint maximal proper
/// subsets and n >= 3: returns the arc from the first to the third vertex of
/// a Hamiltonian cycle. That arc is absent from g, and adding it makes the
/// minimal removable sets of the graph pairwise disjoint.
std::pair<Vertex, Vertex> minrs_disjoint_making_edge(const Digraph& g);

} // namespace scdecomp
