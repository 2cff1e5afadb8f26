#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zdchroma/constructions.hpp"
#include "zdchroma/solvers.hpp"

using namespace zdchroma;

namespace {

Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v});
    return graph_from_edges(n, edges);
}

Graph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return graph_from_edges(n, edges);
}

// random graph with edge probability 1/2, raw engine bits only
Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng() & 1) edges.push_back({u, v});
    return graph_from_edges(n, edges);
}

} // namespace

TEST_CASE("dsatur on canonical graphs") {
    CHECK(greedy_dsatur(complete(5)).color_count == 5);
    CHECK(greedy_dsatur(graph_from_edges(10, {})).color_count == 1);
    CHECK(greedy_dsatur(cycle(5)).color_count == 3);
    CHECK(greedy_dsatur(graph_from_edges(0, {})).color_count == 0);
    auto c = greedy_dsatur(cycle(7));
    CHECK(verify_coloring(cycle(7), c));
}

TEST_CASE("max clique on zero-divisor graphs") {
    auto z8 = build_gamma0(decompose_zn(8));
    auto r = max_clique(z8);
    CHECK(r.omega == 3);
    CHECK(check(z8, r.witness, SetMode::clique));
    CHECK(r.witness.count() == 3);
}

TEST_CASE("max clique of gamma0(Z8 x Z16) is 9") {
    RingSpec spec({FactorSpec::local(2, 3), FactorSpec::local(2, 4)});
    auto g = build_gamma0(spec);
    auto r = max_clique(g);
    CHECK(r.omega == 9);
    CHECK(check(g, r.witness, SetMode::clique));
}

TEST_CASE("max clique of the complement of gamma(Z8 x Z16) is 76") {
    RingSpec spec({FactorSpec::local(2, 3), FactorSpec::local(2, 4)});
    auto comp = complement(build_gamma(spec));
    REQUIRE(comp.size() == 95);
    auto r = max_clique(comp);
    CHECK(r.omega == 76);
    CHECK(check(comp, r.witness, SetMode::clique));
}

TEST_CASE("chromatic number on ring graphs") {
    auto z9 = build_gamma0(decompose_zn(9));
    auto r = chromatic_number(z9);
    CHECK(r.chi == 3);
    CHECK(verify_coloring(z9, r.coloring));
    CHECK(r.lower_bound_used <= 3);

    auto z30 = build_gamma0(decompose_zn(30));
    CHECK(chromatic_number(z30).chi == 4);
}

TEST_CASE("chromatic number on bipartite and gap instances") {
    // complete bipartite 3x4
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 3; v < 7; ++v) edges.push_back({u, v});
    CHECK(chromatic_number(graph_from_edges(7, edges)).chi == 2);
    CHECK(chromatic_number(cycle(6)).chi == 2);
    CHECK(chromatic_number(cycle(5)).chi == 3);

    // Petersen graph: omega 2, chi 3, forces the gap-closing search
    Graph petersen = graph_from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    auto r = chromatic_number(petersen);
    CHECK(r.chi == 3);
    CHECK(r.lower_bound_used == 2);
    CHECK(verify_coloring(petersen, r.coloring));
}

TEST_CASE("empty and edgeless conventions") {
    Graph empty = graph_from_edges(0, {});
    CHECK(max_clique(empty).omega == 0);
    CHECK(chromatic_number(empty).chi == 0);
    Graph lone = graph_from_edges(4, {});
    CHECK(max_clique(lone).omega == 1);
    CHECK(chromatic_number(lone).chi == 1);
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_chi(complete(4)) == 4);
    CHECK(brute_force_chi(cycle(5)) == 3);
    CHECK(brute_force_chi(graph_from_edges(1, {})) == 1);
    CHECK_THROWS_AS(brute_force_chi(complete(13)), RingError);
}

TEST_CASE("solver agrees with the brute force oracle") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 1 + rng() % 12;
        Graph g = random_graph(n, rng);
        auto r = chromatic_number(g);
        CHECK(r.chi == brute_force_chi(g));
        CHECK(verify_coloring(g, r.coloring));
    }
}

TEST_CASE("clique lower bound, chi, dsatur upper bound sandwich") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        std::size_t n = 2 + rng() % 39;
        Graph g = random_graph(n, rng);
        auto cl = max_clique(g);
        auto ch = chromatic_number(g);
        auto ds = greedy_dsatur(g);
        CHECK(cl.omega <= static_cast<std::size_t>(ch.chi));
        CHECK(ch.chi <= ds.color_count);
        CHECK(check(g, cl.witness, SetMode::clique));
    }
}

TEST_CASE("vertex deletion never increases omega or chi") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        std::size_t n = 4 + rng() % 9;
        Graph g = random_graph(n, rng);
        VertexSet drop(n);
        for (std::size_t v = 0; v < n; ++v)
            if (rng() % 3 == 0) drop.set(v);
        Graph h = delete_vertices(g, drop);
        CHECK(max_clique(h).omega <= max_clique(g).omega);
        CHECK(chromatic_number(h).chi <= chromatic_number(g).chi);
    }
}

TEST_CASE("solvers are deterministic") {
    std::mt19937_64 rng(5);
    Graph g = random_graph(30, rng);
    auto a = max_clique(g);
    auto b = max_clique(g);
    CHECK(a.omega == b.omega);
    CHECK(a.witness == b.witness);
    auto c1 = chromatic_number(g);
    auto c2 = chromatic_number(g);
    CHECK(c1.chi == c2.chi);
    CHECK(c1.coloring.assignment == c2.coloring.assignment);
}

TEST_CASE("exhausted budget raises a timeout with bounds") {
    std::mt19937_64 rng(3);
    Graph g = random_graph(40, rng);
    CHECK_THROWS_AS(max_clique(g, 0), SolverTimeout);
    try {
        chromatic_number(g, 0);
        FAIL("expected timeout");
    } catch (const SolverTimeout& t) {
        CHECK(t.lower_bound <= t.upper_bound);
        CHECK(t.upper_bound <= g.size());
    }
}
