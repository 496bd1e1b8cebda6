#pragma once

#include <vector>

#include "scdecomp/digraph.hpp"
#include "scdecomp/dominators.hpp"

namespace scdecomp {

/// A minimal removable set, stored in its canonical path order.
///
/// The order is the Hamiltonian path of the induced subgraph: order.front()
/// is the only vertex receiving arcs from outside the set, order.back() the
/// only one sending arcs outside. The same sequence read forward is a
/// root-to-leaf path in the forward dominator tree and read backward in the
/// backward one.
struct MinRsPath {
    std::vector<Vertex> order;

    VertexSet set() const { return VertexSet(order); }
    Vertex entry() const { return order.front(); }
    Vertex exit() const { return order.back(); }
    int size() const { return static_cast<int>(order.size()); }
};

/// Result of one generation run rooted at root(): the minimal removable sets
/// avoiding the root, plus the per-vertex marks and the dominator trees that
/// complement_of needs. The marks live here, never in the shared Digraph.
struct MinRsGeneration {
    DominatorTreePair trees;
    std::vector<MinRsPath> minrs;  // pairwise disjoint, ordered by leaf id
    std::vector<int> mark;         // vertex -> index into minrs, or -1

    Vertex root() const { return trees.root(); }
};

/// Generates every minimal removable set of V that avoids s.
/// Requires g strongly connected with at least two vertices.
MinRsGeneration gen_minrs_without_root(const Digraph& g, Vertex s);

/// The complement V minus minrs[index], produced by walking the forward
/// dominator tree and skipping the subtree marked with that index.
VertexSet complement_of(const Digraph& g, const MinRsGeneration& run, int index);

/// Which disjointness holds for the whole graph. Both means exactly two
/// minimal removable sets that partition V (then the maximal-proper-subset
/// family is their two complements and is also disjoint).
enum class DisjointnessKind { MaxPssDisjoint, MinRsDisjoint, Both };

struct MinRsDisjointness {
    bool disjoint;
    std::vector<MinRsPath> witnesses;
};

/// Decides whether the minimal removable sets of g are pairwise disjoint.
/// Two generation runs at most: from vertex 0, then from the path head of
/// the single set found, comparing the two results.
MinRsDisjointness is_minrs_disjoint(const Digraph& g);

struct Classification {
    DisjointnessKind kind;
    std::vector<MinRsPath> witnesses; // the minimal removable sets seen while deciding
};

/// Full trichotomy for a strongly-connected g with n >= 2.
Classification classify(const Digraph& g);

/// All maximal proper strongly-connected subsets when classify(g) is
/// MinRsDisjoint or Both: complements of every set avoiding vertex 0, then
/// the complement of the set containing 0 (found via a second run).
std::vector<VertexSet> maxpss_all_minrs_disjoint(const Digraph& g);

/// All maximal proper strongly-connected subsets when classify(g) is
/// MaxPssDisjoint or Both: the complement of the unique set avoiding vertex
/// 0, then the strongly-connected components of the removed part. The result
/// is a partition of V.
std::vector<VertexSet> maxpss_all_maxpss_disjoint(const Digraph& g);

/// Classifies and dispatches to the matching generator. For n == 1 the
/// family is empty.
std::pair<Classification, std::vector<VertexSet>> maxpss_all(const Digraph& g);

/// Works on any digraph: the components themselves when g is not strongly
/// connected, otherwise maxpss_all.
std::vector<VertexSet> maxpss_of_any_digraph(const Digraph& g);

namespace detail {
/// The complete minimal-removable-set family of a MinRS-disjoint graph
/// (generation run from vertex 0 plus the set containing 0, if any).
/// Precondition is trusted, not re-verified.
std::vector<MinRsPath> all_minrs_of_minrs_disjoint(const Digraph& g);
/// Generator bodies without the classification re-check.
std::vector<VertexSet> maxpss_minrs_disjoint_unchecked(const Digraph& g);
std::vector<VertexSet> maxpss_maxpss_disjoint_unchecked(const Digraph& g);
} // namespace detail

} // namespace scdecomp
