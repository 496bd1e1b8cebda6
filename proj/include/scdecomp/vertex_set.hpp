#pragma once

#include <cstdint>
#include <vector>

namespace scdecomp {

/// Dense 0-based vertex id, stable across all structures derived from one graph.
using Vertex = int;

/// Immutable sorted duplicate-free set of vertex ids.
///
/// All set operations return fresh sets and preserve the sorted/unique
/// invariant. Instances are safe to share across threads.
class VertexSet {
public:
    VertexSet() = default;

    /// Normalizes: sorts and removes duplicates.
    explicit VertexSet(std::vector<Vertex> members);

    /// {0, 1, ..., n-1}
    static VertexSet full(int n);
    static VertexSet single(Vertex v);

    const std::vector<Vertex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    bool contains(Vertex v) const;
    bool contains_set(const VertexSet& other) const; // other subset of *this
    bool intersects(const VertexSet& other) const;

    VertexSet unite(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;
    VertexSet with(Vertex v) const;
    VertexSet without(Vertex v) const;

    /// Bitmask view; requires every member < 64.
    std::uint64_t bits() const;

    bool operator==(const VertexSet&) const = default;
    bool operator<(const VertexSet& other) const { return members_ < other.members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::vector<Vertex> members_;
};

} // namespace scdecomp
