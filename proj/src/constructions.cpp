#include "orient/constructions.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "orient/budget.hpp"

namespace orient {

Vertex shift_vertex(std::size_t i, std::size_t j)
{
    if (i < 1 || i >= j)
        throw std::invalid_argument("shift_vertex: need 1 <= i < j");
    return static_cast<Vertex>((j - 1) * (j - 2) / 2 + (i - 1));
}

std::pair<std::size_t, std::size_t> shift_pair(Vertex id)
{
    std::size_t j = 2;
    while ((j * (j - 1)) / 2 <= id)
        ++j;
    return {id - (j - 1) * (j - 2) / 2 + 1, j};
}

Digraph shift_digraph(std::size_t n)
{
    if (n < 2)
        throw PreconditionError("shift_digraph: n must be at least 2");
    std::vector<Edge> edges;
    for (std::size_t j = 2; j <= n; ++j)
        for (std::size_t i = 1; i < j; ++i)
            for (std::size_t k = j + 1; k <= n; ++k)
                edges.push_back({shift_vertex(i, j), shift_vertex(j, k)});
    return Digraph(n * (n - 1) / 2, std::move(edges), "shift(" + std::to_string(n) + ")");
}

Digraph cyclic_tournament(std::size_t m)
{
    const std::size_t n = 2 * m + 1;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto a = static_cast<Vertex>(i), b = static_cast<Vertex>(j);
            edges.push_back(j - i <= m ? Edge{a, b} : Edge{b, a});
        }
    return Digraph(n, std::move(edges), "cyclic(" + std::to_string(m) + ")");
}

std::optional<std::size_t> regular_tournament_degree(const Digraph& g)
{
    const std::size_t n = g.size();
    if (n % 2 == 0 || g.edge_count() != n * (n - 1) / 2)
        return std::nullopt;
    const std::size_t m = (n - 1) / 2;
    for (Vertex v = 0; v < n; ++v)
        if (g.out_degree(v) != m)
            return std::nullopt;
    return m;
}

bool is_cyclic_ordering(const Digraph& g, const VertexList& order)
{
    const std::size_t n = g.size();
    if (order.size() != n || n % 2 == 0 || normalized(order).size() != n)
        return false;
    for (Vertex v : order)
        if (v >= n)
            return false;
    const std::size_t m = (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool forward = j - i <= m;
            if (g.has_edge(order[i], order[j]) != forward || g.has_edge(order[j], order[i]) == forward)
                return false;
        }
    return true;
}

bool is_alternating_four_cycle(const Digraph& g, Vertex v, const AlternatingFourCycle& c)
{
    for (Vertex x : {c.p, c.q, c.r, c.s})
        if (x >= g.size())
            return false;
    return g.has_edge(v, c.p) && g.has_edge(v, c.r) && g.has_edge(c.q, v) && g.has_edge(c.s, v) &&
           g.has_edge(c.p, c.q) && g.has_edge(c.q, c.r) && g.has_edge(c.r, c.s) && g.has_edge(c.s, c.p);
}

CyclicRecognition recognize_cyclic(const Digraph& h, Vertex v)
{
    auto degree = regular_tournament_degree(h);
    if (!degree)
        throw PreconditionError("recognize_cyclic: input is not a regular tournament");
    if (v >= h.size())
        throw std::out_of_range("recognize_cyclic: vertex out of range");
    const std::size_t m = *degree;
    const Bits& plus = h.out(v);
    const Bits& minus = h.in(v);

    for (auto p = plus.find_first(); p != Bits::npos; p = plus.find_next(p)) {
        Bits qs = minus & h.out(static_cast<Vertex>(p));
        for (auto q = qs.find_first(); q != Bits::npos; q = qs.find_next(q)) {
            Bits rs = plus & h.out(static_cast<Vertex>(q));
            for (auto r = rs.find_first(); r != Bits::npos; r = rs.find_next(r)) {
                Bits ss = minus & h.out(static_cast<Vertex>(r)) & h.in(static_cast<Vertex>(p));
                auto s = ss.find_first();
                if (s != Bits::npos)
                    return AlternatingFourCycle{static_cast<Vertex>(p), static_cast<Vertex>(q),
                                                static_cast<Vertex>(r), static_cast<Vertex>(s)};
            }
        }
    }

    // No alternating 4-cycle, so the bipartite digraph J of edges between
    // N+(v) and N-(v) is acyclic. Take its least topological order.
    const std::size_t n = h.size();
    auto j_out = [&](Vertex u) { return plus.test(u) ? Bits(h.out(u) & minus) : Bits(h.out(u) & plus); };
    std::vector<std::size_t> indeg(n, 0);
    for (Vertex u = 0; u < n; ++u)
        if (u != v)
            for_each_bit(j_out(u), [&](Vertex w) { ++indeg[w]; });
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex u = 0; u < n; ++u)
        if (u != v && indeg[u] == 0)
            ready.push(u);
    VertexList topo;
    while (!ready.empty()) {
        Vertex u = ready.top();
        ready.pop();
        topo.push_back(u);
        for_each_bit(j_out(u), [&](Vertex w) {
            if (--indeg[w] == 0)
                ready.push(w);
        });
    }
    if (topo.size() != 2 * m)
        throw VerificationError("recognize_cyclic: J has a directed cycle but no alternating 4-cycle was found");

    // Odd positions of the topological order lie in N+(v), even ones in
    // N-(v); v followed by each class in reverse gives the cyclic order.
    VertexList order{v};
    for (std::size_t i = 2 * m; i >= 2; i -= 2)
        order.push_back(topo[i - 2]);
    for (std::size_t i = 2 * m; i >= 2; i -= 2)
        order.push_back(topo[i - 1]);
    if (!is_cyclic_ordering(h, order))
        throw VerificationError("recognize_cyclic: constructed ordering fails the cyclicity check");
    return TournamentOrdering{std::move(order), m};
}

namespace {

std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t pair_index(std::size_t i, std::size_t j)
{
    return static_cast<std::uint64_t>(j) * (j - 1) / 2 + i;
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter)
{
    return mix64(mix64(seed) + counter);
}

double counter_unit(std::uint64_t seed, std::uint64_t counter)
{
    return static_cast<double>(counter_hash(seed, counter) >> 11) * 0x1.0p-53;
}

Digraph random_oriented(std::size_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw PreconditionError("random_oriented: p must lie in [0, 1]");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto idx = pair_index(i, j);
            if (counter_unit(seed, 2 * idx) >= p)
                continue;
            auto a = static_cast<Vertex>(i), b = static_cast<Vertex>(j);
            edges.push_back((counter_hash(seed, 2 * idx + 1) & 1) ? Edge{b, a} : Edge{a, b});
        }
    return Digraph(n, std::move(edges));
}

Digraph random_tournament(std::size_t n, std::uint64_t seed)
{
    return random_oriented(n, 1.0, seed);
}

Digraph random_acyclic(std::size_t n, double p, std::uint64_t seed)
{
    Digraph base = random_oriented(n, p, seed);
    // Fisher-Yates driven by a separate counter stream.
    VertexList perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = static_cast<Vertex>(i);
    const std::uint64_t stream = counter_hash(seed, 0xac1c11cull);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[counter_hash(stream, i) % i]);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[perm[i]] = i;
    std::vector<Edge> edges;
    for (const auto& e : base.edges()) {
        Vertex a = std::min(e.tail, e.head), b = std::max(e.tail, e.head);
        edges.push_back(position[a] < position[b] ? Edge{a, b} : Edge{b, a});
    }
    return Digraph(n, std::move(edges));
}

namespace {

struct TournamentEnumerator {
    std::size_t n;
    std::size_t m;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::size_t> out, in;
    std::vector<Edge> edges;
    const std::function<void(const Digraph&)>& visit;

    void run(std::size_t idx)
    {
        if (idx == pairs.size()) {
            visit(Digraph(n, edges));
            return;
        }
        auto [a, b] = pairs[idx];
        if (out[a] < m && in[b] < m) {
            ++out[a], ++in[b];
            edges.push_back({a, b});
            run(idx + 1);
            edges.pop_back();
            --out[a], --in[b];
        }
        if (out[b] < m && in[a] < m) {
            ++out[b], ++in[a];
            edges.push_back({b, a});
            run(idx + 1);
            edges.pop_back();
            --out[b], --in[a];
        }
    }
};

}  // namespace

void for_each_regular_tournament(std::size_t n, const std::function<void(const Digraph&)>& visit)
{
    if (n % 2 == 0)
        return;
    TournamentEnumerator e{n, (n - 1) / 2, {}, std::vector<std::size_t>(n), std::vector<std::size_t>(n), {}, visit};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.pairs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    e.run(0);
}

}  // namespace orient
