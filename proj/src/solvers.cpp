#include "orient/solvers.hpp"

#include <algorithm>
#include <bit>

namespace orient {

bool is_proper(const Digraph& g, const Coloring& c)
{
    if (c.colors.size() != g.size())
        return false;
    std::vector<bool> used(c.color_count, false);
    for (auto color : c.colors) {
        if (color >= c.color_count)
            return false;
        used[color] = true;
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        return false;
    for (const auto& e : g.edges())
        if (c.colors[e.tail] == c.colors[e.head])
            return false;
    return true;
}

bool is_clique(const Digraph& g, const VertexList& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

namespace {

struct CliqueSearch {
    const Digraph& g;
    NodeMeter meter;
    VertexList current;
    VertexList best;

    void expand(Bits candidates)
    {
        meter.tick();
        // Greedy colour classes give the bound: a clique uses at most one
        // vertex per class.
        VertexList order;
        std::vector<std::size_t> bound;
        Bits uncolored = candidates;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            Bits q = uncolored;
            while (q.any()) {
                auto v = static_cast<Vertex>(q.find_first());
                q.reset(v);
                q -= g.adj(v);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best.size())
                return;
            Vertex v = order[i];
            current.push_back(v);
            Bits next = candidates & g.adj(v);
            if (next.none()) {
                if (current.size() > best.size())
                    best = current;
            } else {
                expand(std::move(next));
            }
            current.pop_back();
            candidates.reset(v);
        }
    }
};

}  // namespace

CliqueWitness max_clique_within(const Digraph& g, const Bits& within, const Budget& budget)
{
    CliqueSearch search{g, NodeMeter(budget, "clique_number"), {}, {}};
    if (within.any())
        search.expand(within);
    std::sort(search.best.begin(), search.best.end());
    return {search.best.size(), search.best};
}

CliqueWitness clique_number(const Digraph& g, const Budget& budget)
{
    return max_clique_within(g, full_bits(g.size()), budget);
}

namespace {

void collect_cliques(const Digraph& g, Bits candidates, std::size_t size, VertexList& current,
                     std::vector<VertexList>& out)
{
    if (current.size() == size) {
        out.push_back(current);
        return;
    }
    while (candidates.any()) {
        auto v = static_cast<Vertex>(candidates.find_first());
        candidates.reset(v);
        if (current.size() + 1 + candidates.count() < size)
            return;
        current.push_back(v);
        collect_cliques(g, candidates & g.adj(v), size, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<VertexList> enumerate_cliques(const Digraph& g, const Bits& within, std::size_t size)
{
    std::vector<VertexList> out;
    VertexList current;
    collect_cliques(g, within, size, current, out);
    return out;
}

namespace {

Coloring normalize(std::vector<std::uint32_t> colors)
{
    std::vector<std::uint32_t> remap;
    Coloring c;
    for (auto& color : colors) {
        if (color >= remap.size())
            remap.resize(color + 1, UINT32_MAX);
        if (remap[color] == UINT32_MAX)
            remap[color] = c.color_count++;
        color = remap[color];
    }
    c.colors = std::move(colors);
    return c;
}

// DSATUR state shared by the greedy bound and the exact search.
struct DsaturState {
    const Digraph& g;
    std::size_t palette;
    std::vector<int> color;
    std::vector<std::uint32_t> counts;  // n x palette neighbour colour counts
    std::vector<std::size_t> saturation;
    std::vector<std::size_t> degree;

    DsaturState(const Digraph& graph, std::size_t k)
        : g(graph), palette(k), color(graph.size(), -1), counts(graph.size() * k, 0), saturation(graph.size(), 0),
          degree(graph.size())
    {
        for (Vertex v = 0; v < g.size(); ++v)
            degree[v] = g.degree(v);
    }

    void assign(Vertex v, std::size_t c)
    {
        color[v] = static_cast<int>(c);
        for_each_bit(g.adj(v), [&](Vertex u) {
            if (counts[u * palette + c]++ == 0)
                ++saturation[u];
        });
    }

    void unassign(Vertex v)
    {
        auto c = static_cast<std::size_t>(color[v]);
        color[v] = -1;
        for_each_bit(g.adj(v), [&](Vertex u) {
            if (--counts[u * palette + c] == 0)
                --saturation[u];
        });
    }

    bool allowed(Vertex v, std::size_t c) const { return counts[v * palette + c] == 0; }

    Vertex pick() const
    {
        Vertex best = kNoVertex;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (color[v] >= 0)
                continue;
            if (best == kNoVertex || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && degree[v] > degree[best]))
                best = v;
        }
        return best;
    }
};

struct ColorSearch {
    DsaturState state;
    std::size_t k;
    NodeMeter meter;

    bool search(std::size_t colored, std::size_t used)
    {
        if (colored == state.g.size())
            return true;
        meter.tick();
        Vertex v = state.pick();
        if (state.saturation[v] >= k)
            return false;
        std::size_t limit = std::min(used + 1, k);
        for (std::size_t c = 0; c < limit; ++c) {
            if (!state.allowed(v, c))
                continue;
            state.assign(v, c);
            if (search(colored + 1, std::max(used, c + 1)))
                return true;
            state.unassign(v);
        }
        return false;
    }
};

std::optional<Coloring> color_seeded(const Digraph& g, std::size_t k, const VertexList& clique, const Budget& budget)
{
    if (clique.size() > k)
        return std::nullopt;
    ColorSearch s{DsaturState(g, std::max<std::size_t>(k, 1)), k, NodeMeter(budget, "chromatic_number")};
    // The clique needs distinct colours anyway; fixing them breaks symmetry.
    for (std::size_t i = 0; i < clique.size(); ++i)
        s.state.assign(clique[i], i);
    if (!s.search(clique.size(), clique.size()))
        return std::nullopt;
    std::vector<std::uint32_t> colors(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        colors[v] = static_cast<std::uint32_t>(s.state.color[v]);
    return normalize(std::move(colors));
}

}  // namespace

Coloring dsatur_greedy(const Digraph& g)
{
    DsaturState state(g, std::max<std::size_t>(g.size(), 1));
    for (std::size_t step = 0; step < g.size(); ++step) {
        Vertex v = state.pick();
        std::size_t c = 0;
        while (!state.allowed(v, c))
            ++c;
        state.assign(v, c);
    }
    std::vector<std::uint32_t> colors(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        colors[v] = static_cast<std::uint32_t>(state.color[v]);
    return normalize(std::move(colors));
}

std::optional<Coloring> color_with(const Digraph& g, std::size_t k, const Budget& budget)
{
    if (g.size() == 0)
        return Coloring{};
    if (k == 0)
        return std::nullopt;
    return color_seeded(g, k, clique_number(g, budget).vertices, budget);
}

ChromaticResult chromatic_number(const Digraph& g, const Budget& budget)
{
    if (g.size() == 0)
        return {0, Coloring{}};
    auto clique = clique_number(g, budget);
    Coloring greedy = dsatur_greedy(g);
    for (std::size_t k = clique.size; k < greedy.color_count; ++k)
        if (auto c = color_seeded(g, k, clique.vertices, budget))
            return {c->color_count, std::move(*c)};
    return {greedy.color_count, std::move(greedy)};
}

std::uint32_t to_mask(const VertexList& vertices)
{
    std::uint32_t m = 0;
    for (Vertex v : vertices)
        m |= 1u << v;
    return m;
}

std::uint32_t to_mask(const Bits& bits)
{
    std::uint32_t m = 0;
    for_each_bit(bits, [&](Vertex v) { m |= 1u << v; });
    return m;
}

VertexList from_mask(std::uint32_t mask)
{
    VertexList out;
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

SubsetTable::SubsetTable(const Digraph& g, const Budget& budget) : n_(g.size())
{
    if (n_ > budget.max_subset_vertices || n_ > 24)
        throw BudgetExceeded("subset table: " + std::to_string(n_) + " vertices exceeds the limit of " +
                             std::to_string(std::min<std::size_t>(budget.max_subset_vertices, 24)));
    const std::uint32_t total = 1u << n_;
    std::vector<std::uint32_t> nbr(n_);
    for (Vertex v = 0; v < n_; ++v)
        nbr[v] = to_mask(g.adj(v));

    omega_.assign(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        unsigned v = 31 - static_cast<unsigned>(std::countl_zero(mask));
        std::uint32_t rest = mask ^ (1u << v);
        omega_[mask] = std::max<std::uint8_t>(omega_[rest], omega_[rest & nbr[v]] + 1);
    }

    // chi(S) = 1 + min chi(S \ I) over independent I containing the lowest
    // vertex of S; I never meets that vertex's neighbourhood.
    chi_.assign(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        unsigned lv = static_cast<unsigned>(std::countr_zero(mask));
        std::uint32_t pool = (mask ^ low) & ~nbr[lv];
        std::uint8_t best = UINT8_MAX;
        std::uint32_t sub = pool;
        while (true) {
            std::uint32_t ind = sub | low;
            if (omega_[ind] <= 1)
                best = std::min<std::uint8_t>(best, chi_[mask ^ ind] + 1);
            if (sub == 0)
                break;
            sub = (sub - 1) & pool;
        }
        chi_[mask] = best;
    }
}

PerfectionVerdict is_perfect_underlying(const Digraph& g, const Budget& budget)
{
    if (g.size() > budget.max_perfect_vertices)
        throw BudgetExceeded("perfection check: " + std::to_string(g.size()) + " vertices exceeds the limit of " +
                             std::to_string(budget.max_perfect_vertices));
    SubsetTable table(g, budget);
    PerfectionVerdict verdict;
    const std::uint32_t total = 1u << g.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (table.chi(mask) == table.omega(mask))
            continue;
        VertexList candidate = from_mask(mask);
        if (verdict.perfect || candidate.size() < verdict.witness.size() ||
            (candidate.size() == verdict.witness.size() && candidate < verdict.witness)) {
            verdict.perfect = false;
            verdict.witness = std::move(candidate);
        }
    }
    return verdict;
}

namespace {

struct BicliqueSearch {
    const Digraph& g;
    const VertexList& a;
    std::size_t lambda;
    NodeMeter meter;
    VertexList chosen;
    std::optional<BicliquePair> found;

    bool search(std::size_t start, const Bits& candidates_b)
    {
        meter.tick();
        if (chosen.size() == lambda) {
            BicliquePair pair{chosen, {}};
            for (auto v = candidates_b.find_first(); pair.b.size() < lambda; v = candidates_b.find_next(v))
                pair.b.push_back(static_cast<Vertex>(v));
            found = std::move(pair);
            return true;
        }
        for (std::size_t i = start; i + (lambda - chosen.size()) <= a.size(); ++i) {
            Bits next = candidates_b - g.adj(a[i]);
            if (next.count() < lambda)
                continue;
            chosen.push_back(a[i]);
            if (search(i + 1, next))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<BicliquePair> nonadjacent_biclique(const Digraph& g, const VertexList& a, const VertexList& b,
                                                 std::size_t lambda, const Budget& budget)
{
    if (lambda == 0)
        throw PreconditionError("nonadjacent_biclique: lambda must be positive");
    VertexList sa = normalized(a);
    Bits bb = make_bits(g.size(), b);
    if ((make_bits(g.size(), sa) & bb).any())
        throw PreconditionError("nonadjacent_biclique: A and B must be disjoint");
    if (sa.size() < lambda || bb.count() < lambda)
        return std::nullopt;
    BicliqueSearch s{g, sa, lambda, NodeMeter(budget, "nonadjacent_biclique"), {}, {}};
    s.search(0, bb);
    return s.found;
}

BigRamseyOutcome bigramsey_search(const Digraph& g, const std::vector<VertexList>& as,
                                  const std::vector<VertexList>& bs, std::size_t k, std::size_t lambda,
                                  const Budget& budget)
{
    Bits seen(g.size());
    VertexList union_a, union_b;
    auto absorb = [&](const VertexList& part, VertexList& into) {
        for (Vertex v : part) {
            if (v >= g.size())
                throw std::out_of_range("bigramsey_search: vertex out of range");
            if (seen.test(v))
                throw PreconditionError("bigramsey_search: the sets must be pairwise disjoint");
            seen.set(v);
            into.push_back(v);
        }
    };
    for (const auto& part : as)
        absorb(part, union_a);
    for (const auto& part : bs)
        absorb(part, union_b);

    BigRamseyOutcome outcome;
    if (auto pair = nonadjacent_biclique(g, union_a, union_b, lambda, budget)) {
        outcome.kind = BigRamseyOutcome::Kind::nonadjacent_pair;
        outcome.pair = std::move(*pair);
        return outcome;
    }
    if (k == 0 || k > as.size() || k > bs.size())
        return outcome;

    NodeMeter meter(budget, "bigramsey_search");
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    // Lexicographic walk over k-subsets of A-indices.
    while (true) {
        meter.tick();
        Bits common = full_bits(g.size());
        for (auto i : pick)
            for (Vertex v : as[i])
                common &= g.adj(v);
        std::vector<std::size_t> good;
        for (std::size_t j = 0; j < bs.size() && good.size() < k; ++j) {
            bool complete = std::all_of(bs[j].begin(), bs[j].end(), [&](Vertex v) { return common.test(v); });
            if (complete)
                good.push_back(j);
        }
        if (good.size() == k) {
            outcome.kind = BigRamseyOutcome::Kind::complete_indices;
            outcome.i = pick;
            outcome.j = std::move(good);
            return outcome;
        }
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == as.size() - k + pos - 1)
            --pos;
        if (pos == 0)
            break;
        ++pick[pos - 1];
        for (std::size_t q = pos; q < k; ++q)
            pick[q] = pick[q - 1] + 1;
    }
    return outcome;
}

}  // namespace orient
