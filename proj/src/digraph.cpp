#include "scdecomp/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "scdecomp/errors.hpp"

namespace scdecomp {

// --- VertexSet ---

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
    VertexSet s;
    s.members_.resize(n);
    for (int v = 0; v < n; ++v) s.members_[v] = v;
    return s;
}

VertexSet VertexSet::single(Vertex v) {
    VertexSet s;
    s.members_.push_back(v);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::contains_set(const VertexSet& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    VertexSet r;
    r.members_.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(r.members_));
    return r;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet r;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(r.members_));
    return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet r;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(r.members_));
    return r;
}

VertexSet VertexSet::with(Vertex v) const {
    if (contains(v)) return *this;
    VertexSet r = *this;
    r.members_.insert(std::lower_bound(r.members_.begin(), r.members_.end(), v), v);
    return r;
}

VertexSet VertexSet::without(Vertex v) const {
    VertexSet r = *this;
    auto it = std::lower_bound(r.members_.begin(), r.members_.end(), v);
    if (it != r.members_.end() && *it == v) r.members_.erase(it);
    return r;
}

std::uint64_t VertexSet::bits() const {
    std::uint64_t b = 0;
    for (Vertex v : members_) {
        if (v < 0 || v >= 64) throw PreconditionError("VertexSet::bits: member out of 64-bit range");
        b |= std::uint64_t{1} << v;
    }
    return b;
}

// --- Digraph ---

Digraph Digraph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs,
                            std::vector<std::string> labels) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw PreconditionError("label table size must match vertex count");
    Digraph g;
    g.n_ = n;
    g.out_.resize(n);
    g.in_.resize(n);
    g.labels_ = std::move(labels);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("arc endpoint out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
        if (u == v)
            throw PreconditionError("self-loop rejected: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
        g.out_[u].push_back(v);
    }
    int m = 0;
    for (int v = 0; v < n; ++v) {
        auto& adj = g.out_[v];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        m += static_cast<int>(adj.size());
    }
    g.m_ = m;
    for (int u = 0; u < n; ++u)
        for (Vertex v : g.out_[u]) g.in_[v].push_back(u);
    // in-lists come out sorted because tails are visited in ascending order
    return g;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
    std::vector<std::pair<Vertex, Vertex>> r;
    r.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (Vertex v : out_[u]) r.emplace_back(u, v);
    return r;
}

std::string Digraph::name_of(Vertex v) const {
    if (has_labels() && v >= 0 && v < n_ && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

// --- parsing ---

Digraph parse_edge_list(std::istream& input) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int header_n = 0, header_m = 0;
    int arc_lines = 0;
    int max_id = -1;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<std::pair<Vertex, std::string>> labels;

    auto fail = [&](const std::string& why) {
        throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };

    while (std::getline(input, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue; // blank line
        if (first[0] == '#') continue;
        if (first == "p") {
            if (have_header) fail("duplicate header");
            if (arc_lines > 0 || !labels.empty()) fail("header must come first");
            if (!(ss >> header_n >> header_m) || header_n < 0 || header_m < 0)
                fail("malformed header, expected \"p <n> <m>\"");
            std::string extra;
            if (ss >> extra) fail("trailing text after header");
            have_header = true;
            continue;
        }
        if (first == "l") {
            Vertex v;
            std::string name;
            if (!(ss >> v >> name)) fail("malformed label, expected \"l <id> <name>\"");
            if (v < 0) fail("negative vertex id");
            labels.emplace_back(v, name);
            max_id = std::max(max_id, v);
            continue;
        }
        Vertex u, v;
        std::istringstream arc_ss(line);
        if (!(arc_ss >> u >> v)) fail("malformed arc, expected \"<u> <v>\"");
        std::string extra;
        if (arc_ss >> extra) fail("trailing text after arc");
        if (u < 0 || v < 0) fail("negative vertex id");
        if (u == v) fail("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        arcs.emplace_back(u, v);
        max_id = std::max(max_id, std::max(u, v));
        ++arc_lines;
    }

    int n = max_id + 1;
    if (have_header) {
        if (header_n < n)
            throw ParseError("header declares " + std::to_string(header_n) +
                             " vertices but id " + std::to_string(max_id) + " appears");
        if (header_m != arc_lines)
            throw ParseError("header declares " + std::to_string(header_m) + " arcs but " +
                             std::to_string(arc_lines) + " arc lines were read");
        n = header_n;
    }

    std::vector<std::string> label_table;
    if (!labels.empty()) {
        label_table.resize(n);
        for (auto& [v, name] : labels) label_table[v] = name;
    }
    return Digraph::from_edges(n, arcs, std::move(label_table));
}

Digraph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

// --- derived graphs ---

Digraph transpose(const Digraph& g) {
    std::vector<std::pair<Vertex, Vertex>> rev;
    rev.reserve(g.arc_count());
    for (auto [u, v] : g.arcs()) rev.emplace_back(v, u);
    return Digraph::from_edges(g.vertex_count(), rev, g.labels());
}

InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& s) {
    if (s.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
    const int n = g.vertex_count();
    InducedSubgraph result;
    result.to_parent = s.members();
    result.from_parent.assign(n, -1);
    for (int i = 0; i < s.size(); ++i) {
        Vertex v = result.to_parent[i];
        if (v < 0 || v >= n) throw PreconditionError("induced_subgraph: vertex out of range");
        result.from_parent[v] = i;
    }
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(s.size());
        for (Vertex v : result.to_parent) labels.push_back(g.labels()[v]);
    }
    for (int i = 0; i < s.size(); ++i) {
        Vertex v = result.to_parent[i];
        for (Vertex w : g.out(v))
            if (result.from_parent[w] != -1) arcs.emplace_back(i, result.from_parent[w]);
    }
    result.graph = Digraph::from_edges(s.size(), arcs, std::move(labels));
    return result;
}

VertexSet InducedSubgraph::lift(const VertexSet& sub) const {
    std::vector<Vertex> lifted;
    lifted.reserve(sub.size());
    for (Vertex v : sub) lifted.push_back(to_parent[v]);
    return VertexSet(std::move(lifted)); // to_parent ascending keeps order
}

// Tarjan with an explicit stack; recursion depth would be O(n).
std::vector<VertexSet> strongly_connected_components(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> components;
    int next_index = 0;

    struct Frame {
        Vertex v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (Vertex start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        call.push_back({start, 0});
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = g.out(f.v);
            if (f.child < succ.size()) {
                Vertex w = succ[f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<Vertex> comp;
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != f.v);
                    components.push_back(std::move(comp));
                }
                Vertex done = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[done]);
            }
        }
    }

    std::vector<VertexSet> result;
    result.reserve(components.size());
    for (auto& comp : components) result.emplace_back(std::move(comp));
    std::sort(result.begin(), result.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.members().front() < b.members().front();
    });
    return result;
}

bool is_strongly_connected(const Digraph& g) {
    if (g.vertex_count() <= 1) return true;
    return strongly_connected_components(g).size() == 1;
}

} // namespace scdecomp
