#pragma once

#include <vector>

#include "scdecomp/digraph.hpp"

namespace scdecomp {

/// Dominator tree of a flow graph rooted at s.
///
/// u dominates v when every path from the root to v passes through u. The
/// root has no parent; is_root() distinguishes it instead of a sentinel id.
/// Trees are immutable once built and safe to share.
class DominatorTree {
public:
    Vertex root() const { return root_; }
    int vertex_count() const { return static_cast<int>(parent_.size()); }
    bool is_root(Vertex v) const { return v == root_; }

    /// Parent in the tree; calling this on the root returns the root itself.
    Vertex parent(Vertex v) const { return parent_[v]; }
    const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
    bool is_leaf(Vertex v) const { return children_[v].empty(); }

    /// Ancestor-or-self test in O(1) via preorder intervals.
    bool dominates(Vertex u, Vertex v) const {
        return tin_[u] <= tin_[v] && tout_[v] <= tout_[u];
    }

private:
    friend DominatorTree build_dominator_tree(const Digraph&, Vertex);
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_; // ordered by vertex id
    std::vector<int> tin_, tout_;
};

/// Builds the dominator tree of g viewed as a flow graph with start s.
/// Every vertex must be reachable from s; otherwise PreconditionError names
/// an unreachable vertex. Semi-dominator (Lengauer-Tarjan) construction.
DominatorTree build_dominator_tree(const Digraph& g, Vertex s);

/// Dominator trees of g and of its transpose, sharing the root.
struct DominatorTreePair {
    DominatorTree forward;
    DominatorTree backward;
    Vertex root() const { return forward.root(); }
};

/// Requires g strongly connected (so both directions are flow graphs).
DominatorTreePair build_pair(const Digraph& g, Vertex s);

/// True iff u is an ancestor-or-self of v in the tree.
inline bool dominates(const DominatorTree& t, Vertex u, Vertex v) {
    return t.dominates(u, v);
}

} // namespace scdecomp
