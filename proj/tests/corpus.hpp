#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "scdecomp/digraph.hpp"

namespace scdecomp::testsupport {

// Named instances used across suites. Ids are fixed so expected values can
// be frozen in the tests.
Digraph two_cycle();
Digraph cycle(int n);
Digraph complete(int n);
Digraph path(int n);

// 9 vertices: a hub 1 on a two-cycle with 0, feeding a 3-cycle {2,3,4} and a
// chain 5,6 that rejoins through 7,8. Strongly connected; its minimal
// removable sets are {0}, {2,3,4} and {5,6}, and vertex 8 sits in none of
// them. The labeled variant names vertex 0 "s" and k "v<k>".
Digraph showcase9(bool labeled = false);

// 4 vertices, 8 arcs: two vertices 1, 2 that each lie on two 4-cycles
// through 0 and 3. Every non-root vertex hangs directly under the root of
// the dominator tree at 0.
Digraph double_diamond4();

// 8 vertices: a 5-cycle 0..4 plus a tail {5,6,7} hanging off it, with a
// two-cycle inside the tail. The tail is a minimal removable set and the
// two-cycle {5,6} is a solution it properly intersects, so the
// strongly-connected set system of this graph separates the two set-system
// definitions exercised in the oracle tests.
Digraph pentagon_tail8();

// Every labeled digraph on n vertices (no self-loops): 2^(n(n-1)) graphs.
void for_each_digraph(int n, const std::function<void(const Digraph&)>& fn);

std::uint64_t corpus_seed(); // SSD_SEED env var or a fixed default

Digraph random_digraph(int n, double arc_probability, std::mt19937_64& rng);
Digraph random_symmetric_digraph(int n, double edge_probability, std::mt19937_64& rng);

// The standard test corpus: the exhaustive catalog for n <= 4 followed by
// `random_total` seeded random digraphs with n in [5, 9] and arc probability
// swept over {0.15, 0.3, 0.5, 0.8}.
void for_each_corpus_graph(int random_total, const std::function<void(const Digraph&)>& fn);

bool same_families(std::vector<VertexSet> a, std::vector<VertexSet> b);

// Cut vertices of the underlying undirected graph. This is the articulation
// notion under which "Hamiltonian implies none exist" actually holds; the
// SCC-counting notion in the oracle is strictly weaker (every vertex of a
// directed cycle qualifies there).
VertexSet underlying_cut_vertices(const Digraph& g);

} // namespace scdecomp::testsupport
