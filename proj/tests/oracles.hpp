#pragma once

// Brute-force reference implementations for tests. They enumerate
// everything and share no code with the library beyond Digraph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "orient/digraph.hpp"

namespace oracle_test {

using orient::Digraph;
using orient::Edge;
using orient::Vertex;
using orient::VertexList;

inline std::size_t brute_chromatic(const Digraph& g)
{
    const std::size_t n = g.size();
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> c(n, 0);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= k;
        if (n == 0)
            return 0;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t x = code;
            for (std::size_t i = 0; i < n; ++i) {
                c[i] = x % k;
                x /= k;
            }
            bool ok = true;
            for (const auto& e : g.edges())
                ok = ok && c[e.tail] != c[e.head];
            if (ok)
                return k;
        }
    }
    return n;
}

inline bool subset_is_clique(const Digraph& g, std::uint32_t mask)
{
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v))
                return false;
    return true;
}

inline std::size_t brute_omega(const Digraph& g)
{
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask)
        if (subset_is_clique(g, mask))
            best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    return best;
}

/// Vertex sets of size >= 4 inducing a connected 2-regular underlying graph.
inline std::size_t naive_hole_count(const Digraph& g)
{
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
        if (__builtin_popcount(mask) < 4)
            continue;
        VertexList s;
        for (Vertex v = 0; v < g.size(); ++v)
            if (mask >> v & 1)
                s.push_back(v);
        bool two_regular = true;
        for (Vertex v : s) {
            std::size_t d = 0;
            for (Vertex u : s)
                d += g.adjacent(u, v);
            two_regular = two_regular && d == 2;
        }
        if (!two_regular)
            continue;
        std::vector<bool> seen(g.size(), false);
        std::function<void(Vertex)> walk = [&](Vertex v) {
            seen[v] = true;
            for (Vertex u : s)
                if (!seen[u] && g.adjacent(u, v))
                    walk(u);
        };
        walk(s.front());
        if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return seen[v]; }))
            ++count;
    }
    return count;
}

/// Every injective map of pattern vertices into g that is an induced
/// embedding, in lexicographic order of host tuples.
inline std::vector<VertexList> brute_induced(const Digraph& g, const Digraph& pattern)
{
    std::vector<VertexList> out;
    const std::size_t k = pattern.size();
    VertexList host(k);
    std::vector<bool> used(g.size(), false);
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == k) {
            for (Vertex p = 0; p < k; ++p)
                for (Vertex q = 0; q < k; ++q)
                    if (p != q && pattern.has_edge(p, q) != g.has_edge(host[p], host[q]))
                        return;
            out.push_back(host);
            return;
        }
        for (Vertex v = 0; v < g.size(); ++v) {
            if (used[v])
                continue;
            used[v] = true;
            host[i] = v;
            place(i + 1);
            used[v] = false;
        }
    };
    place(0);
    return out;
}

/// (a,b,c,d) with a->b, c->b, d->c and a-c, a-d, b-d non-adjacent.
inline std::vector<VertexList> brute_flh(const Digraph& g)
{
    std::vector<VertexList> out;
    const Vertex n = static_cast<Vertex>(g.size());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d)
                        continue;
                    if (g.has_edge(a, b) && g.has_edge(c, b) && g.has_edge(d, c) && !g.adjacent(a, c) &&
                        !g.adjacent(a, d) && !g.adjacent(b, d))
                        out.push_back({a, b, c, d});
                }
    return out;
}

/// Some lambda out-neighbours and lambda in-neighbours of one vertex span no edge.
inline bool brute_spread(const Digraph& g, std::size_t lambda)
{
    for (Vertex v = 0; v < g.size(); ++v) {
        VertexList outs = orient::to_list(g.out(v)), ins = orient::to_list(g.in(v));
        if (outs.size() < lambda || ins.size() < lambda)
            continue;
        for (std::uint32_t am = 0; am < (1u << outs.size()); ++am) {
            if (static_cast<std::size_t>(__builtin_popcount(am)) != lambda)
                continue;
            for (std::uint32_t bm = 0; bm < (1u << ins.size()); ++bm) {
                if (static_cast<std::size_t>(__builtin_popcount(bm)) != lambda)
                    continue;
                bool edge = false;
                for (std::size_t i = 0; i < outs.size(); ++i)
                    for (std::size_t j = 0; j < ins.size(); ++j)
                        if ((am >> i & 1) && (bm >> j & 1) && g.adjacent(outs[i], ins[j]))
                            edge = true;
                if (!edge)
                    return false;
            }
        }
    }
    return true;
}

/// Seeded generator for property tests, independent of the library's.
inline Digraph mt_digraph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution present(p), flip(0.5);
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (present(rng))
                edges.push_back(flip(rng) ? Edge{i, j} : Edge{j, i});
    return Digraph(n, edges);
}

inline Digraph directed_cycle(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
    return Digraph(n, edges);
}

inline Digraph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> list)
{
    std::vector<Edge> edges;
    for (auto [t, h] : list)
        edges.push_back({t, h});
    return Digraph(n, edges);
}

}  // namespace oracle_test
