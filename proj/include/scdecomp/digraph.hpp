#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "scdecomp/vertex_set.hpp"

namespace scdecomp {

/// Immutable simple digraph with adjacency kept in both directions.
///
/// No self-loops, no duplicate arcs; adjacency lists are sorted by neighbor
/// id so every algorithm downstream is deterministic. Instances are safe to
/// share across threads; all operations on them are pure functions.
class Digraph {
public:
    Digraph() = default; // empty graph

    /// Builds a graph on vertices [0, n). Duplicate arcs are silently
    /// dropped; a self-loop throws PreconditionError.
    static Digraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs,
                              std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int arc_count() const { return m_; }

    const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
    bool has_arc(Vertex u, Vertex v) const;

    /// All arcs as (tail, head), sorted.
    std::vector<std::pair<Vertex, Vertex>> arcs() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of v if the graph carries labels, otherwise the decimal id.
    std::string name_of(Vertex v) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::string> labels_;
};

/// Parses line-oriented edge-list text.
///
/// Grammar, one record per line:
///   "# ..."          comment
///   "p <n> <m>"      optional header; must precede arcs, n and m are validated
///   "l <id> <name>"  optional vertex label
///   "<u> <v>"        arc from u to v
/// Malformed lines raise ParseError naming the line number; self-loops are
/// rejected; duplicate arcs are dropped.
Digraph parse_edge_list(std::istream& input);
Digraph parse_edge_list(const std::string& text);

/// Arc-reversed copy. transpose(transpose(g)) == g.
Digraph transpose(const Digraph& g);

/// Induced subgraph plus the id bijection between the two graphs.
struct InducedSubgraph {
    Digraph graph;                  // vertices relabeled to [0, |s|)
    std::vector<Vertex> to_parent;  // new id -> old id (ascending)
    std::vector<Vertex> from_parent; // old id -> new id, -1 when absent

    VertexSet lift(const VertexSet& sub) const; // map a set of new ids back
};

/// Subgraph induced by a nonempty s; keeps exactly the arcs with both ends in s.
InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& s);

/// Strongly-connected components as a partition of V, ordered by smallest
/// member; members sorted ascending.
std::vector<VertexSet> strongly_connected_components(const Digraph& g);

/// True iff one component covers V. A single vertex counts as strongly
/// connected; so does the empty graph.
bool is_strongly_connected(const Digraph& g);

} // namespace scdecomp
