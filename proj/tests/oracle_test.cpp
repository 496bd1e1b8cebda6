#include <random>

#include "doctest.h"

#include "corpus.hpp"
#include "scdecomp/errors.hpp"
#include "scdecomp/oracle.hpp"

using namespace scdecomp;
using namespace scdecomp::oracle;
namespace ts = scdecomp::testsupport;

namespace {

SetSystem explicit_system(int universe, std::vector<std::vector<Vertex>> sets) {
    SetSystem s{universe, {}};
    for (auto& members : sets) s.solutions.emplace_back(std::move(members));
    return s;
}

bool pairwise_disjoint(const std::vector<VertexSet>& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (family[i].intersects(family[j])) return false;
    return true;
}

} // namespace

TEST_CASE("brute solutions of small graphs") {
    CHECK(ts::same_families(
        brute_solutions(ts::cycle(3)).solutions,
        {VertexSet({0}), VertexSet({1}), VertexSet({2}), VertexSet({0, 1, 2})}));
    CHECK(brute_solutions(ts::complete(3)).solutions.size() == 7);

    // the showcase graph's maximal proper solutions are the three complements
    Digraph g = ts::showcase9();
    auto maximal = brute_maxpss(brute_solutions(g), VertexSet::full(9));
    CHECK(ts::same_families(maximal, {VertexSet({1, 2, 3, 4, 5, 6, 7, 8}),
                                      VertexSet({0, 1, 5, 6, 7, 8}),
                                      VertexSet({0, 1, 2, 3, 4, 7, 8})}));
}

TEST_CASE("brute families on canonical graphs") {
    auto system3 = brute_solutions(ts::cycle(3));
    CHECK(ts::same_families(brute_maxpss(system3, VertexSet::full(3)),
                            {VertexSet({0}), VertexSet({1}), VertexSet({2})}));

    auto k3 = brute_solutions(ts::complete(3));
    CHECK(ts::same_families(brute_maxpss(k3, VertexSet::full(3)),
                            {VertexSet({0, 1}), VertexSet({0, 2}), VertexSet({1, 2})}));
    CHECK(ts::same_families(brute_minrs(k3, VertexSet::full(3)),
                            {VertexSet({0}), VertexSet({1}), VertexSet({2})}));
}

TEST_CASE("maxpss/minrs duality holds on random graphs and subsets") {
    std::mt19937_64 rng(ts::corpus_seed() + 18);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Digraph g = ts::random_digraph(n, 0.4, rng);
        SetSystem system = brute_solutions(g);
        std::vector<Vertex> pick;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 3) pick.push_back(v);
        if (pick.empty()) continue;
        VertexSet c(pick);
        auto maximal = brute_maxpss(system, c);
        auto minimal = brute_minrs(system, c); // asserts duality internally
        REQUIRE(maximal.size() == minimal.size());
        std::vector<VertexSet> complements;
        for (const VertexSet& x : maximal) complements.push_back(c.minus(x));
        CHECK(ts::same_families(complements, minimal));
    }
}

TEST_CASE("set-system class checks on the worked families") {
    // confluent but neither subset-disjoint nor superset-subset-disjoint:
    // {4,5,6} is a minimal removable set of the full set and it properly
    // intersects the solution {3,4,5}
    SetSystem confluent_only =
        explicit_system(6, {{0, 1, 2, 3, 4, 5}, {0, 1, 2}, {2, 3, 4}});
    CHECK(check_confluent(confluent_only));
    CHECK_FALSE(check_sd(confluent_only));
    CHECK_FALSE(check_ssd(confluent_only));

    // superset-subset-disjoint (even subset-disjoint) but not confluent
    SetSystem not_confluent = explicit_system(5, {{0, 1, 2}, {2, 3, 4}, {2}});
    CHECK_FALSE(check_confluent(not_confluent));
    CHECK(check_sd(not_confluent));
    CHECK(check_ssd(not_confluent));

    SetSystem laminar = explicit_system(4, {{0, 1}, {2, 3}, {0, 1, 2, 3}});
    CHECK(check_sd(laminar));
    CHECK(check_ssd(laminar));

    SetSystem empty_intersections = explicit_system(4, {{0, 1}, {2, 3}});
    CHECK(check_confluent(empty_intersections));
}

TEST_CASE("the pentagon-tail system separates the two disjointness definitions") {
    Digraph g = ts::pentagon_tail8();
    REQUIRE(is_strongly_connected(g));
    SetSystem system = brute_solutions(g);
    CHECK_FALSE(check_sd(system));
    CHECK(check_ssd(system));
}

TEST_CASE("strongly-connected systems are always confluent and superset-subset-disjoint") {
    std::mt19937_64 rng(ts::corpus_seed() + 19);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        Digraph g = ts::random_digraph(n, 0.4, rng);
        SetSystem system = brute_solutions(g);
        CHECK(check_ssd(system));
        CHECK(check_confluent(system));
    }
}

TEST_CASE("k-edge-connected systems are confluent for directed and undirected graphs") {
    std::mt19937_64 rng(ts::corpus_seed() + 20);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        Digraph g = ts::random_digraph(n, 0.5, rng);
        Digraph u = ts::random_symmetric_digraph(n, 0.5, rng);
        for (int k = 0; k <= 2; ++k) {
            CHECK(check_confluent(brute_k_edge_system(g, k, false)));
            CHECK(check_confluent(brute_k_edge_system(u, k, true)));
        }
    }
}

TEST_CASE("k-edge connectivity oracle") {
    CHECK(brute_k_edge_connected(Digraph::from_edges(1, {}), VertexSet({0}), 99));
    CHECK(brute_k_edge_connected(ts::cycle(3), VertexSet::full(3), 1));
    CHECK_FALSE(brute_k_edge_connected(ts::cycle(3), VertexSet::full(3), 2));

    // undirected 4-cycle: removing any single edge keeps it connected
    Digraph square = Digraph::from_edges(
        4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}});
    CHECK(brute_k_edge_connected_undirected(square, VertexSet::full(4), 2));
    CHECK_FALSE(brute_k_edge_connected_undirected(square, VertexSet::full(4), 3));

    CHECK_THROWS_AS(brute_k_edge_connected_undirected(ts::cycle(3), VertexSet::full(3), 1),
                    PreconditionError);
}

TEST_CASE("hamiltonicity oracle") {
    for (int n = 2; n <= 8; ++n) {
        auto cyc = brute_hamiltonian(ts::cycle(n));
        REQUIRE(cyc.has_value());
        CHECK(is_valid_hamiltonian_cycle(ts::cycle(n), *cyc));
    }
    CHECK_FALSE(brute_hamiltonian(ts::path(4)).has_value());
    CHECK_FALSE(brute_hamiltonian(ts::showcase9()).has_value());
    CHECK_THROWS_AS(brute_hamiltonian(ts::cycle(13)), PreconditionError);
}

TEST_CASE("strong articulation points") {
    CHECK(brute_strong_articulation_points(ts::cycle(4)) == VertexSet({0, 1, 2, 3}));
    CHECK(brute_strong_articulation_points(ts::complete(4)).empty());
    VertexSet pts = brute_strong_articulation_points(ts::showcase9());
    CHECK(pts.contains(1));
    CHECK(pts.contains(7));
}

TEST_CASE("size guards raise instead of truncating") {
    CHECK_THROWS_AS(brute_solutions(ts::cycle(21)), PreconditionError);
}

TEST_CASE("intersecting maxpss pairs union to the whole solution; disjoint minrs pairs spread") {
    std::mt19937_64 rng(ts::corpus_seed() + 21);
    int done = 0;
    while (done < 80) {
        int n = 2 + static_cast<int>(rng() % 6);
        Digraph g = ts::random_digraph(n, 0.45, rng);
        if (!is_strongly_connected(g)) continue;
        SetSystem system = brute_solutions(g);
        VertexSet full = VertexSet::full(n);
        auto maximal = brute_maxpss(system, full);
        if (maximal.size() >= 2) {
            bool some_intersect = !pairwise_disjoint(maximal);
            if (some_intersect) {
                for (std::size_t i = 0; i < maximal.size(); ++i)
                    for (std::size_t j = i + 1; j < maximal.size(); ++j)
                        CHECK(maximal[i].unite(maximal[j]) == full);
            }
        }
        auto minimal = brute_minrs(system, full);
        if (minimal.size() >= 2) {
            bool some_disjoint = false;
            for (std::size_t i = 0; i < minimal.size(); ++i)
                for (std::size_t j = i + 1; j < minimal.size(); ++j)
                    some_disjoint |= !minimal[i].intersects(minimal[j]);
            if (some_disjoint) CHECK(pairwise_disjoint(minimal));
        }
        ++done;
    }
}

TEST_CASE("maximal solutions inside a removable set extend to the whole family") {
    // for MaxPSS-disjoint solutions S: the maximal proper solutions are the
    // maximal solutions inside any minimal removable set plus its complement
    std::mt19937_64 rng(ts::corpus_seed() + 22);
    int done = 0;
    while (done < 60) {
        int n = 2 + static_cast<int>(rng() % 6);
        Digraph g = ts::random_digraph(n, 0.35, rng);
        if (!is_strongly_connected(g)) continue;
        SetSystem system = brute_solutions(g);
        VertexSet full = VertexSet::full(n);
        auto maximal = brute_maxpss(system, full);
        if (!pairwise_disjoint(maximal)) continue;
        for (const VertexSet& y : brute_minrs(system, full)) {
            // maximal solutions among subsets of y
            std::vector<VertexSet> inside;
            for (const VertexSet& sol : system.solutions) {
                if (!y.contains_set(sol)) continue;
                bool dominated = false;
                for (const VertexSet& other : system.solutions)
                    if (other != sol && y.contains_set(other) && other.contains_set(sol))
                        dominated = true;
                if (!dominated) inside.push_back(sol);
            }
            inside.push_back(full.minus(y));
            CHECK(ts::same_families(inside, maximal));
        }
        ++done;
    }
}

TEST_CASE("disjointness law over the exhaustive catalog and undirected systems") {
    auto verify_system = [](const SetSystem& system, int n) {
        VertexSet full = VertexSet::full(n);
        bool full_is_solution = false;
        for (const VertexSet& s : system.solutions) full_is_solution |= s == full;
        auto maximal = brute_maxpss(system, full);
        auto minimal = brute_minrs(system, full);
        bool max_disjoint = pairwise_disjoint(maximal);
        CHECK((max_disjoint || pairwise_disjoint(minimal)));
        if (max_disjoint && n >= 2 && full_is_solution) {
            // partition of V whenever every vertex lies in some solution
            VertexSet cover;
            for (const VertexSet& x : maximal) cover = cover.unite(x);
            if (!maximal.empty() && cover == full) {
                int total = 0;
                for (const VertexSet& x : maximal) total += x.size();
                CHECK(total == n);
            }
        }
    };

    for (int n = 2; n <= 4; ++n)
        ts::for_each_digraph(n, [&](const Digraph& g) { verify_system(brute_solutions(g), n); });

    std::mt19937_64 rng(ts::corpus_seed() + 23);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Digraph u = ts::random_symmetric_digraph(n, 0.5, rng);
        for (int k = 1; k <= 3; ++k) verify_system(brute_k_edge_system(u, k, true), n);
    }
}
