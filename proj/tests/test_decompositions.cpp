#include <doctest.h>

#include "oracles.hpp"
#include "orient/certificate.hpp"
#include "orient/constructions.hpp"
#include "orient/decompositions.hpp"
#include "orient/patterns.hpp"
#include "orient/solvers.hpp"

using namespace orient;
using oracle_test::directed_cycle;
using oracle_test::from_edges;

namespace {

Digraph triangle_tt()
{
    return from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
}

// Some (m+1)-clique inside `part` with a source (or sink) in it.
bool apex_clique(const Digraph& g, const VertexList& part, std::size_t size, bool source)
{
    std::size_t n = part.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != size)
            continue;
        VertexList s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s.push_back(part[i]);
        if (!is_clique(g, s))
            continue;
        for (Vertex v : s) {
            bool apex = true;
            for (Vertex u : s)
                if (u != v)
                    apex = apex && (source ? g.has_edge(v, u) : g.has_edge(u, v));
            if (apex)
                return true;
        }
    }
    return false;
}

bool covers(std::size_t n, const std::vector<CertifiedPart>& parts)
{
    std::vector<int> seen(n, 0);
    for (const auto& p : parts)
        for (Vertex v : p.vertices)
            ++seen[v];
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace

TEST_CASE("part property strings round-trip")
{
    for (const char* s : {"source-free(3)", "sink-free(2)", "acyclic", "chromatic-bound(2)", "out-orderable(2,1)",
                          "in-orderable(1,3)", "robust(2,2)"})
        CHECK(to_string(parse_part_property(s)) == s);
    CHECK_THROWS(parse_part_property("sourcefree(3)"));
}

TEST_CASE("parameter validation")
{
    ParamPack p;
    CHECK_NOTHROW(p.validate());
    p.kappa = 0;
    CHECK_THROWS_AS(p.validate(), PreconditionError);
    ParamPack q;
    q.lambda = 2;
    CHECK(q.big_lambda() == 10);
    CHECK(q.k1_value() == 50);
}

TEST_CASE("robustness examples")
{
    CHECK_FALSE(is_robust(Digraph(3), 1, 1).robust);
    CHECK(is_robust(Digraph(0), 1, 1).robust);
    auto tri = is_robust(directed_cycle(3), 1, 1);
    CHECK(tri.robust);
    CHECK_FALSE(is_robust(directed_cycle(3), 2, 1).robust);

    // chi <= h: the whole graph violates, so everything is peeled.
    auto path = robust_decomposition(from_edges(3, {{0, 1}, {1, 2}}), 2, 1);
    CHECK(path.verified);
    CHECK(path.r.empty());

    auto cyc = robust_decomposition(directed_cycle(3), 1, 1);
    CHECK(cyc.verified);
    CHECK(cyc.r == VertexList{0, 1, 2});
    CHECK(cyc.p.parts.empty());
    CHECK(cyc.q.parts.empty());

    Budget b;
    b.max_robust_vertices = 4;
    CHECK_THROWS_AS(is_robust(directed_cycle(5), 1, 1, b), BudgetExceeded);
}

TEST_CASE("disjoint clique families")
{
    VertexList all5{0, 1, 2, 3, 4};
    auto stable = disjoint_clique_family(Digraph(5), all5, 2, 2);
    CHECK(stable.cliques.empty());
    CHECK_FALSE(stable.reached_target);

    Digraph k4 = random_tournament(4, 1);
    auto two = disjoint_clique_family(k4, {0, 1, 2, 3}, 2, 2);
    CHECK(two.cliques.size() == 2);
    CHECK(two.reached_target);

    Digraph k5 = random_tournament(5, 1);
    auto short_of = disjoint_clique_family(k5, all5, 2, 3);
    CHECK(short_of.cliques.size() == 2);
    CHECK_FALSE(short_of.reached_target);
    CHECK(short_of.exact);
}

TEST_CASE("source/sink partition examples")
{
    auto dc = source_sink_partition(directed_cycle(3), 1, 1, 2);
    REQUIRE(std::holds_alternative<PartitionCertificate>(dc));
    CHECK(std::get<PartitionCertificate>(dc).parts.size() == 3);
    auto dcf = source_sink_partition(directed_cycle(3), 1, 1, 1);
    REQUIRE(std::holds_alternative<SourceSinkFailure>(dcf));
    CHECK(std::get<SourceSinkFailure>(dcf).failing == VertexList{0, 1, 2});

    auto tt = source_sink_partition(triangle_tt(), 1, 1, 2);
    REQUIRE(std::holds_alternative<PartitionCertificate>(tt));
    const auto& cert = std::get<PartitionCertificate>(tt);
    CHECK(cert.verified);
    CHECK(cert.parts.size() == 3);
    for (const auto& p : cert.parts)
        CHECK(p.vertices.size() == 1);

    // Vertex 1 has an out- and an in-neighbour: one 1-clique each side.
    auto fail = source_sink_partition(triangle_tt(), 1, 1, 1);
    REQUIRE(std::holds_alternative<SourceSinkFailure>(fail));
    const auto& f = std::get<SourceSinkFailure>(fail);
    CHECK(f.v == 1);
    CHECK(f.out_family == std::vector<VertexList>{{2}});
    CHECK(f.in_family == std::vector<VertexList>{{0}});

    auto edgeless = source_sink_partition(Digraph(4), 1, 1, 1);
    REQUIRE(std::holds_alternative<PartitionCertificate>(edgeless));
    const auto& e = std::get<PartitionCertificate>(edgeless);
    REQUIRE(e.parts.size() == 1);
    CHECK(e.parts[0].vertices == VertexList{0, 1, 2, 3});
}

TEST_CASE("acyclic partition examples")
{
    // u=0, v=1, w=2 with u -> v -> w, one part coloured {u,w} / {v}.
    Digraph path = from_edges(3, {{0, 1}, {1, 2}});
    OrderableWitness w;
    w.h = 2;
    w.k = 1;
    w.parts = {{0, 1, 2}};
    w.colorings = {Coloring{{0, 1, 0}, 2}};
    REQUIRE_FALSE(orderable_problem(path, w));
    auto cert = acyclic_partition(path, w);
    CHECK(cert.verified);
    REQUIRE(cert.parts.size() == 2);
    CHECK(cert.parts[0].vertices == VertexList{0, 2});
    CHECK(cert.parts[1].vertices == VertexList{1});
    CHECK(covers(3, cert.parts));
    for (const auto& p : cert.parts)
        CHECK_FALSE(oracle::has_directed_cycle(path, p.vertices));

    OrderableWitness t;
    t.h = 3;
    t.k = 1;
    t.parts = {{0, 1, 2}};
    t.colorings = {Coloring{{0, 1, 2}, 3}};
    REQUIRE_FALSE(orderable_problem(directed_cycle(3), t));
    auto tc = acyclic_partition(directed_cycle(3), t);
    CHECK(tc.parts.size() == 3);

    OrderableWitness bad = w;
    bad.parts = {{0, 2}, {1}};
    bad.colorings = {Coloring{{0, 0}, 1}, Coloring{{0}, 1}};
    // u has a later out-neighbour v, but k - 1 = 0.
    CHECK(orderable_problem(path, bad));
    CHECK_THROWS_AS(acyclic_partition(path, bad), PreconditionError);
}

TEST_CASE("userobust instances")
{
    Digraph t = cyclic_tournament(3);
    auto v = check_userobust_instance(t, {0, 1, 2, 3, 4, 5, 6}, 1, 1);
    CHECK(v.implication);
    CHECK(v.spread == is_lambda_spread(t, 1).spread);
    auto empty = check_userobust_instance(t, {}, 1, 1);
    CHECK_FALSE(empty.hypothesis);
    CHECK(empty.implication);
}

TEST_CASE("colouring acyclic spread digraphs")
{
    ParamPack p;
    p.kappa = 1;
    auto e = color_acyclic_spread(Digraph(4), p);
    CHECK(e.verified);
    CHECK(e.coloring.color_count == 1);

    ParamPack q;
    q.kappa = 4;
    Digraph tt4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto r = color_acyclic_spread(tt4, q);
    CHECK(r.verified);
    CHECK(is_proper(tt4, r.coloring));
    CHECK(r.coloring.color_count == 4);
    CHECK_FALSE(trace_problem(tt4, r));

    CHECK_THROWS_AS(color_acyclic_spread(directed_cycle(3), q), PreconditionError);
    ParamPack low;
    low.kappa = 2;
    CHECK_THROWS_AS(color_acyclic_spread(tt4, low), PreconditionError);
}

TEST_CASE("colouring spread digraphs")
{
    ParamPack p;
    p.kappa = 3;
    p.lambda = 1;
    auto tri = color_spread(directed_cycle(3), p);
    CHECK(tri.verified);
    CHECK(is_proper(directed_cycle(3), tri.coloring));

    ParamPack q;
    q.kappa = 1;
    auto e = color_spread(Digraph(5), q);
    CHECK(e.coloring.color_count == 1);

    Digraph t9 = cyclic_tournament(4);
    ParamPack r;
    r.kappa = 9;
    r.lambda = 1;
    auto big = color_spread(t9, r);
    CHECK(big.verified);
    CHECK(big.coloring.color_count == 9);
    CHECK_FALSE(trace_problem(t9, big));

    ParamPack low;
    low.kappa = 2;
    CHECK_THROWS_AS(color_spread(directed_cycle(3), low), PreconditionError);
    CHECK_THROWS_AS(color_spread(from_edges(3, {{0, 1}, {1, 2}}), q), PreconditionError);
}

TEST_CASE("certificate re-check catches tampering")
{
    Digraph g = random_oriented(9, 0.5, 11);
    auto out = source_sink_partition(g, 1, 2, 3);
    REQUIRE(std::holds_alternative<PartitionCertificate>(out));
    Json j = to_json(std::get<PartitionCertificate>(out));
    CHECK(recheck_certificate(g, j).empty());
    CHECK(certificate_from_json(j).parts.size() == std::get<PartitionCertificate>(out).parts.size());

    Json dup = j;
    dup["parts"][0]["vertices"].push_back(j["parts"].back()["vertices"][0]);
    CHECK_FALSE(recheck_certificate(g, dup).empty());

    Json missing = j;
    missing["parts"].erase(missing["parts"].size() - 1);
    CHECK_FALSE(recheck_certificate(g, missing).empty());

    Json merged = to_json(std::get<PartitionCertificate>(out));
    VertexList all(g.size());
    std::iota(all.begin(), all.end(), 0);
    Json one = Json::array();
    one.push_back(Json{{"vertices", all}, {"property", "acyclic"}, {"verified", true}});
    merged["parts"] = one;
    CHECK(recheck_certificate(g, merged).size() == !is_acyclic(g));
}

TEST_CASE("property: source/sink parts hold their property on acyclic inputs")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Digraph g = random_acyclic(6 + seed % 7, 0.5, seed);
        for (std::size_t m = 1; m <= 2; ++m)
            for (std::size_t n = 1; n <= 3; ++n) {
                auto out = source_sink_partition(g, 1, m, n);
                if (auto* f = std::get_if<SourceSinkFailure>(&out)) {
                    CHECK(f->out_family.size() >= n);
                    CHECK(f->in_family.size() >= n);
                    continue;
                }
                const auto& cert = std::get<PartitionCertificate>(out);
                CHECK(cert.parts.size() <= 4 * n * m);
                CHECK(covers(g.size(), cert.parts));
                for (const auto& p : cert.parts) {
                    bool source = p.property.kind == PartProperty::Kind::source_free;
                    CHECK_FALSE(apex_clique(g, p.vertices, m + 1, source));
                }
                CHECK(recheck_certificate(g, to_json(cert)).empty());
            }
    }
}

TEST_CASE("property: robust decomposition parts and bounds")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Digraph g = random_oriented(5 + seed % 6, 0.55, seed);
        for (std::size_t h = 1; h <= 2; ++h)
            for (std::size_t k = 1; k <= 2; ++k) {
                auto t = robust_decomposition(g, h, k);
                CHECK(t.verified);
                CHECK_FALSE(orderable_problem(g, t.p));
                CHECK_FALSE(orderable_problem(g, t.q));
                CHECK(oracle::robust(g, t.r, h, k));
                auto cert = robust_certificate(t);
                CHECK(covers(g.size(), cert.parts));
                CHECK(recheck_certificate(g, to_json(cert)).empty());
                auto ap = acyclic_partition(g, t.p);
                CHECK(ap.parts.size() <= h * k);
                for (const auto& p : ap.parts)
                    CHECK_FALSE(oracle::has_directed_cycle(g, p.vertices));
            }
    }
}

TEST_CASE("property: pipeline colourings are proper and bounded below by chi")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Digraph g = random_tournament(3 + 2 * (seed % 3), seed);
        if (!is_lambda_spread(g, 1).spread)
            continue;
        ParamPack p;
        p.kappa = std::max<std::size_t>(1, clique_number(g).size);
        auto r = color_spread(g, p);
        CHECK(is_proper(g, r.coloring));
        CHECK_FALSE(trace_problem(g, r));
        CHECK(r.coloring.color_count >= oracle_test::brute_chromatic(g));
    }
}

TEST_CASE("property: maximal cliques of acyclic digraphs have a source and a sink")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Digraph g = random_acyclic(4 + seed % 7, 0.6, seed);
        const std::size_t n = g.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (!oracle_test::subset_is_clique(g, mask))
                continue;
            bool maximal = true;
            for (Vertex v = 0; v < n && maximal; ++v)
                if (!(mask >> v & 1) && oracle_test::subset_is_clique(g, mask | 1u << v))
                    maximal = false;
            if (!maximal)
                continue;
            VertexList s = from_mask(mask);
            CHECK(apex_clique(g, s, s.size(), true));
            CHECK(apex_clique(g, s, s.size(), false));
        }
    }
}

TEST_CASE("statistics: robustness of spread digraphs without transitive triangles")
{
    // Recorded, not asserted: how often (3 Lambda tau, k)-robustness fails.
    const std::size_t lambda = 1, tau = 1, h = 3 * (2 * lambda * lambda + lambda) * tau;
    std::size_t instances = 0, tried = 0;
    std::vector<std::size_t> not_robust(4, 0);
    for (std::uint64_t seed = 0; instances < 40 && tried < 20000; ++seed, ++tried) {
        Digraph g = random_oriented(6 + seed % 7, 0.35, seed);
        if (find_transitive_triangle(g) || !is_lambda_spread(g, lambda).spread)
            continue;
        ++instances;
        for (std::size_t k = 1; k <= 4; ++k)
            not_robust[k - 1] += !is_robust(g, h, k).robust;
    }
    CHECK(instances > 0);
    for (std::size_t k = 1; k <= 4; ++k)
        MESSAGE("k = " << k << ": not robust on " << not_robust[k - 1] << " of " << instances);
}
