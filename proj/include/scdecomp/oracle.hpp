#pragma once

#include <optional>
#include <vector>

#include "scdecomp/digraph.hpp"
#include "scdecomp/hamiltonian.hpp"

namespace scdecomp::oracle {

/// Explicit set system over a small universe; solutions are duplicate-free.
/// Everything in this namespace is exponential-time reference machinery for
/// tests; size guards throw instead of silently truncating.
struct SetSystem {
    int universe = 0;
    std::vector<VertexSet> solutions;
};

/// All nonempty vertex subsets of g inducing strongly-connected subgraphs,
/// by exhaustive subset scan. Guarded to n <= 20.
SetSystem brute_solutions(const Digraph& g);

/// Inclusion-wise maximal solutions that are proper subsets of C.
std::vector<VertexSet> brute_maxpss(const SetSystem& system, const VertexSet& C);

/// Inclusion-wise minimal removable sets of C (Y nonempty, C minus Y a
/// solution). Also verifies they are exactly the complements of
/// brute_maxpss(system, C) and throws InternalError otherwise.
std::vector<VertexSet> brute_minrs(const SetSystem& system, const VertexSet& C);

/// Superset-Subset-Disjoint test: for every solution pair S > S' and every
/// minimal removable set Y of S, one of Y >= S', Y <= S', Y disjoint S'.
bool check_ssd(const SetSystem& system);

/// Stricter variant without the superset case.
bool check_sd(const SetSystem& system);

/// For any solutions S, S'': a solution inside S intersect S' forces
/// S union S' to be a solution.
bool check_confluent(const SetSystem& system);

/// True iff removing any fewer than k arcs of g[S] keeps all-pairs
/// reachability. A single vertex is k-edge-connected for every k.
bool brute_k_edge_connected(const Digraph& g, const VertexSet& S, int k);

/// Same over an undirected graph presented as a symmetric digraph; arc
/// subsets range over undirected edge pairs.
bool brute_k_edge_connected_undirected(const Digraph& symmetric, const VertexSet& S, int k);

/// The k-edge-connected set system of g (directed or, when undirected is
/// true, of the symmetric graph).
SetSystem brute_k_edge_system(const Digraph& g, int k, bool undirected);

/// Backtracking Hamiltonicity. Definitive: nullopt means no cycle exists.
/// Guarded to n <= 12.
std::optional<HamCycle> brute_hamiltonian(const Digraph& g);

/// All vertices whose removal increases the number of strongly-connected
/// components.
VertexSet brute_strong_articulation_points(const Digraph& g);

} // namespace scdecomp::oracle
