#include <doctest.h>

#include "oracles.hpp"
#include "orient/constructions.hpp"
#include "orient/holes.hpp"

using namespace orient;
using oracle_test::directed_cycle;
using oracle_test::from_edges;

namespace {

// Cycle 0..n-1 where bit i of `forward` orients edge {i, i+1} forwards.
Digraph oriented_cycle(std::size_t n, std::uint32_t forward)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        Vertex j = static_cast<Vertex>((i + 1) % n);
        edges.push_back(forward >> i & 1 ? Edge{i, j} : Edge{j, i});
    }
    return Digraph(n, edges);
}

}  // namespace

TEST_CASE("enumerate_holes examples")
{
    auto c5 = enumerate_holes(directed_cycle(5));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].cls == HoleClass::directed);
    CHECK(c5[0].cycle == VertexList{0, 1, 2, 3, 4});

    auto alt = enumerate_holes(from_edges(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}}));
    REQUIRE(alt.size() == 1);
    CHECK(alt[0].cls == HoleClass::alternating);

    CHECK(enumerate_holes(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).empty());
    CHECK_THROWS_AS(enumerate_holes(directed_cycle(5), 6, 5), PreconditionError);
    CHECK(enumerate_holes(directed_cycle(5), 6).empty());
}

TEST_CASE("classify_hole examples")
{
    CHECK(classify_hole(directed_cycle(6), {0, 1, 2, 3, 4, 5}) == HoleClass::directed);
    // out-degrees (2,0,2,0,2,0): even vertices point at both neighbours.
    CHECK(classify_hole(oriented_cycle(6, 0b010101), {0, 1, 2, 3, 4, 5}) == HoleClass::alternating);
    // out-degrees (2,1,0,2,0): 0->1, 0->4, 1->2, 3->2, 3->4.
    Digraph c5 = from_edges(5, {{0, 1}, {0, 4}, {1, 2}, {3, 2}, {3, 4}});
    CHECK(classify_hole(c5, {0, 1, 2, 3, 4}) == HoleClass::disoriented);
    CHECK_THROWS_AS(classify_hole(c5, {0, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(classify_hole(c5, {0, 1, 3, 2, 4}), PreconditionError);
}

TEST_CASE("extract_flh_from_hole examples")
{
    // a..e = 0..4: a->b, b->c, d->c, d->e, a->e
    Digraph c5 = from_edges(5, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {0, 4}});
    auto holes = enumerate_holes(c5, 5);
    REQUIRE(holes.size() == 1);
    auto occ = extract_flh_from_hole(c5, holes[0]);
    CHECK(occ.host == VertexList{3, 2, 1, 0});

    // Directed C6 with edge {5,0} reversed: the only FLH windows end at the reversal.
    Digraph c6 = oriented_cycle(6, 0b011111);
    auto h6 = enumerate_holes(c6, 5);
    REQUIRE(h6.size() == 1);
    auto occ6 = extract_flh_from_hole(c6, h6[0]);
    auto windows = oracle_test::brute_flh(c6);
    CHECK(std::find(windows.begin(), windows.end(), occ6.host) != windows.end());
    CHECK(occ6.host == VertexList{0, 5, 4, 3});

    auto directed = enumerate_holes(directed_cycle(5));
    CHECK_THROWS_AS(extract_flh_from_hole(directed_cycle(5), directed[0]), PreconditionError);
    Digraph c4 = oriented_cycle(4, 0b0011);
    CHECK_THROWS_AS(extract_flh_from_hole(c4, enumerate_holes(c4)[0]), PreconditionError);
}

TEST_CASE("layer profile examples")
{
    auto star = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto p = layer_chromatic_profile(star, 0, 2);
    CHECK(p.chi == std::vector<std::size_t>{1, 1});
    CHECK(p.inequality_holds == std::vector<bool>{true});

    for (Vertex z = 0; z < 5; ++z) {
        auto c = layer_chromatic_profile(directed_cycle(5), z, 2);
        CHECK(c.chi == std::vector<std::size_t>{1, 1, 2});
        CHECK(c.tau_hat == 1);
    }
    CHECK_THROWS_AS(layer_chromatic_profile(directed_cycle(3), 0, 2), PreconditionError);
}

TEST_CASE("property: hole count matches the naive counter for n <= 8")
{
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        Digraph g = oracle_test::mt_digraph(4 + seed % 5, 0.25 + 0.05 * static_cast<double>(seed % 6), seed);
        auto holes = enumerate_holes(g);
        CHECK(holes.size() == oracle_test::naive_hole_count(g));
        for (std::size_t i = 0; i < holes.size(); ++i) {
            CHECK(is_induced_cycle(g, holes[i].cycle));
            CHECK(holes[i].cycle == canonical_cycle(holes[i].cycle));
            if (i > 0)
                CHECK(holes[i - 1].cycle < holes[i].cycle);
            if (holes[i].cls == HoleClass::alternating)
                CHECK(holes[i].cycle.size() % 2 == 0);
        }
    }
}

TEST_CASE("property: reversal preserves hole classes")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Digraph g = random_oriented(8, 0.35, seed);
        Digraph r = reverse(g);
        for (const auto& h : enumerate_holes(g))
            CHECK(classify_hole(r, h.cycle) == h.cls);
    }
}

TEST_CASE("property: every disoriented long hole yields a validated occurrence")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Digraph g = random_oriented(5 + seed % 6, 0.3, seed);
        bool any = false;
        for (const auto& h : enumerate_holes(g, 5)) {
            if (h.cls != HoleClass::disoriented)
                continue;
            any = true;
            auto occ = extract_flh_from_hole(g, h);
            auto brute = oracle_test::brute_flh(g);
            CHECK(std::find(brute.begin(), brute.end(), occ.host) != brute.end());
        }
        if (any)
            CHECK(find_flh(g));
    }
}

TEST_CASE("property: cycles of every orientation classify by definition")
{
    for (std::size_t n = 4; n <= 7; ++n)
        for (std::uint32_t forward = 0; forward < (1u << n); ++forward) {
            Digraph c = oriented_cycle(n, forward);
            VertexList cyc(n);
            std::iota(cyc.begin(), cyc.end(), 0);
            std::size_t ones = 0, others = 0;
            for (Vertex i = 0; i < n; ++i) {
                std::size_t d = c.has_edge(i, (i + 1) % n) + c.has_edge(i, (i + n - 1) % n);
                (d == 1 ? ones : others)++;
            }
            HoleClass expected = ones == n ? HoleClass::directed
                                 : others == n ? HoleClass::alternating
                                               : HoleClass::disoriented;
            CHECK(classify_hole(c, cyc) == expected);
        }
}
