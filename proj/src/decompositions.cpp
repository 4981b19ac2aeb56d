#include "orient/decompositions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>

#include "orient/patterns.hpp"

namespace orient {

void ParamPack::validate() const
{
    if (kappa < 1)
        throw PreconditionError("params: kappa must be at least 1");
    if (lambda < 1)
        throw PreconditionError("params: lambda must be at least 1");
    if (tau < 1)
        throw PreconditionError("params: tau must be at least 1");
    if (n < 1)
        throw PreconditionError("params: n must be at least 1");
    if (k < 1)
        throw PreconditionError("params: k must be at least 1");
}

std::string to_string(const PartProperty& p)
{
    auto one = [](const char* name, std::size_t a) { return std::string(name) + "(" + std::to_string(a) + ")"; };
    auto two = [](const char* name, std::size_t a, std::size_t b) {
        return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    using K = PartProperty::Kind;
    switch (p.kind) {
    case K::source_free:
        return one("source-free", p.a);
    case K::sink_free:
        return one("sink-free", p.a);
    case K::acyclic:
        return "acyclic";
    case K::chromatic_bound:
        return one("chromatic-bound", p.a);
    case K::out_orderable:
        return two("out-orderable", p.a, p.b);
    case K::in_orderable:
        return two("in-orderable", p.a, p.b);
    case K::robust:
        return two("robust", p.a, p.b);
    }
    return "?";
}

PartProperty parse_part_property(std::string_view s)
{
    using K = PartProperty::Kind;
    if (s == "acyclic")
        return {K::acyclic, 0, 0};
    auto open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')')
        throw std::invalid_argument("bad part property '" + std::string(s) + "'");
    auto name = s.substr(0, open);
    auto args = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::size_t> values;
    std::size_t pos = 0;
    while (pos <= args.size()) {
        auto comma = args.find(',', pos);
        if (comma == std::string_view::npos)
            comma = args.size();
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(args.data() + pos, args.data() + comma, v);
        if (ec != std::errc{} || ptr != args.data() + comma)
            throw std::invalid_argument("bad part property '" + std::string(s) + "'");
        values.push_back(v);
        pos = comma + 1;
    }
    static const std::map<std::string_view, std::pair<K, std::size_t>> kinds{
        {"source-free", {K::source_free, 1}},    {"sink-free", {K::sink_free, 1}},
        {"chromatic-bound", {K::chromatic_bound, 1}}, {"out-orderable", {K::out_orderable, 2}},
        {"in-orderable", {K::in_orderable, 2}},   {"robust", {K::robust, 2}},
    };
    auto it = kinds.find(name);
    if (it == kinds.end() || values.size() != it->second.second)
        throw std::invalid_argument("bad part property '" + std::string(s) + "'");
    return {it->second.first, values[0], values.size() > 1 ? values[1] : 0};
}

VertexList OrderableWitness::ground_set() const
{
    VertexList all;
    for (const auto& p : parts)
        all.insert(all.end(), p.begin(), p.end());
    return normalized(std::move(all));
}

std::optional<std::string> orderable_problem(const Digraph& g, const OrderableWitness& w)
{
    if (w.colorings.size() != w.parts.size())
        return "one colouring per part is required";
    Bits seen(g.size());
    std::vector<std::size_t> part_of(g.size(), SIZE_MAX);
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        for (Vertex v : w.parts[i]) {
            if (v >= g.size())
                return "vertex out of range";
            if (seen.test(v))
                return "parts overlap at vertex " + std::to_string(v);
            seen.set(v);
            part_of[v] = i;
        }
        const auto& c = w.colorings[i];
        if (c.colors.size() != w.parts[i].size() || c.color_count > w.h)
            return "part " + std::to_string(i) + " lacks a colouring with at most h colours";
        for (std::size_t x = 0; x < w.parts[i].size(); ++x) {
            if (c.colors[x] >= c.color_count)
                return "part " + std::to_string(i) + " colouring has an out-of-range colour";
            for (std::size_t y = x + 1; y < w.parts[i].size(); ++y)
                if (g.adjacent(w.parts[i][x], w.parts[i][y]) && c.colors[x] == c.colors[y])
                    return "part " + std::to_string(i) + " colouring is not proper";
        }
    }
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        for (Vertex v : w.parts[i]) {
            const Bits& nbrs = w.direction == OrderDirection::out ? g.out(v) : g.in(v);
            std::size_t later = 0;
            for_each_bit(nbrs, [&](Vertex u) {
                if (part_of[u] != SIZE_MAX && part_of[u] > i)
                    ++later;
            });
            if (later + 1 > w.k)
                return "vertex " + std::to_string(v) + " has " + std::to_string(later) +
                       " neighbours in later parts";
        }
    }
    return std::nullopt;
}

namespace {

struct MaskGraph {
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> in;

    explicit MaskGraph(const Digraph& g) : out(g.size()), in(g.size())
    {
        for (Vertex v = 0; v < g.size(); ++v) {
            out[v] = to_mask(g.out(v));
            in[v] = to_mask(g.in(v));
        }
    }
};

// First violating Z inside `ground`, in size-then-lexicographic order.
std::optional<std::uint32_t> find_violating(const MaskGraph& mg, const SubsetTable& table, std::uint32_t ground,
                                            std::size_t h, std::size_t k)
{
    VertexList w = from_mask(ground);
    const std::size_t n = w.size();
    std::vector<std::size_t> idx;
    for (std::size_t s = 1; s <= n; ++s) {
        idx.resize(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        while (true) {
            std::uint32_t z = 0;
            for (auto i : idx)
                z |= 1u << w[i];
            if (table.chi(z) <= h) {
                std::uint32_t outside = ground & ~z;
                bool witnessed = false;
                for (auto i : idx) {
                    Vertex v = w[i];
                    if (static_cast<std::size_t>(std::popcount(mg.out[v] & outside)) >= k &&
                        static_cast<std::size_t>(std::popcount(mg.in[v] & outside)) >= k) {
                        witnessed = true;
                        break;
                    }
                }
                if (!witnessed)
                    return z;
            }
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == n - s + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t q = pos; q < s; ++q)
                idx[q] = idx[q - 1] + 1;
        }
    }
    return std::nullopt;
}

void require_robust_size(const Digraph& g, const Budget& budget)
{
    if (g.size() > budget.max_robust_vertices)
        throw BudgetExceeded("robustness check: " + std::to_string(g.size()) + " vertices exceeds the limit of " +
                             std::to_string(budget.max_robust_vertices));
}

std::uint32_t all_mask(std::size_t n)
{
    return n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
}

}  // namespace

RobustnessVerdict is_robust(const Digraph& g, std::size_t h, std::size_t k, const Budget& budget)
{
    require_robust_size(g, budget);
    SubsetTable table(g, budget);
    MaskGraph mg(g);
    RobustnessVerdict verdict;
    if (auto z = find_violating(mg, table, all_mask(g.size()), h, k)) {
        verdict.robust = false;
        verdict.violating = from_mask(*z);
    }
    return verdict;
}

RobustTriple robust_decomposition(const Digraph& g, std::size_t h, std::size_t k, const Budget& budget)
{
    require_robust_size(g, budget);
    SubsetTable table(g, budget);
    MaskGraph mg(g);
    RobustTriple triple;
    triple.h = triple.k = 0;
    triple.h = h;
    triple.k = k;
    triple.p = {OrderDirection::out, h, k, {}, {}};
    triple.q = {OrderDirection::in, h, k, {}, {}};

    auto add_part = [&](OrderableWitness& w, std::uint32_t mask) {
        if (mask == 0)
            return;
        VertexList part = from_mask(mask);
        auto sub = induced_subdigraph(g, part);
        w.parts.push_back(part);
        w.colorings.push_back(chromatic_number(sub.graph, budget).coloring);
    };

    std::uint32_t remaining = all_mask(g.size());
    while (auto z = find_violating(mg, table, remaining, h, k)) {
        std::uint32_t outside = remaining & ~*z;
        std::uint32_t x1 = 0;
        for (Vertex v : from_mask(*z))
            if (static_cast<std::size_t>(std::popcount(mg.out[v] & outside)) < k)
                x1 |= 1u << v;
        add_part(triple.p, x1);
        add_part(triple.q, *z & ~x1);
        remaining = outside;
    }
    triple.r = from_mask(remaining);

    if (auto problem = orderable_problem(g, triple.p))
        throw VerificationError("robust_decomposition: P is not out-orderable: " + *problem);
    if (auto problem = orderable_problem(g, triple.q))
        throw VerificationError("robust_decomposition: Q is not in-orderable: " + *problem);
    if (find_violating(mg, table, remaining, h, k))
        throw VerificationError("robust_decomposition: R is not robust");
    triple.verified = true;
    return triple;
}

namespace {

struct PackingSearch {
    const std::vector<Bits>& cliques;
    std::size_t m;
    std::size_t target;
    NodeMeter& meter;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    void search(std::size_t start, const Bits& used, std::size_t free_vertices)
    {
        meter.tick();
        if (current.size() > best.size())
            best = current;
        if (best.size() >= target)
            return;
        if (current.size() + free_vertices / m <= best.size())
            return;
        for (std::size_t i = start; i < cliques.size(); ++i) {
            if (cliques[i].intersects(used))
                continue;
            current.push_back(i);
            search(i + 1, used | cliques[i], free_vertices - m);
            current.pop_back();
            if (best.size() >= target)
                return;
        }
    }
};

}  // namespace

CliqueFamily disjoint_clique_family(const Digraph& g, const VertexList& within, std::size_t m, std::size_t target,
                                    const Budget& budget)
{
    if (m == 0)
        throw PreconditionError("disjoint_clique_family: m must be positive");
    Bits s = make_bits(g.size(), within);
    auto lists = enumerate_cliques(g, s, m);
    std::vector<Bits> cliques;
    cliques.reserve(lists.size());
    for (const auto& c : lists)
        cliques.push_back(make_bits(g.size(), c));

    CliqueFamily family;
    family.exact = m == 1 || (m <= 3 && s.count() <= 12);
    std::vector<std::size_t> chosen;
    NodeMeter meter(budget, "disjoint_clique_family");
    if (family.exact) {
        PackingSearch search{cliques, m, target, meter, {}, {}};
        search.search(0, Bits(g.size()), s.count());
        chosen = search.best;
    } else {
        // Greedy passes starting from each clique in turn.
        for (std::size_t startpos = 0; startpos < cliques.size(); ++startpos) {
            meter.tick();
            std::vector<std::size_t> pass;
            Bits used(g.size());
            for (std::size_t off = 0; off < cliques.size(); ++off) {
                std::size_t i = (startpos + off) % cliques.size();
                if (!cliques[i].intersects(used)) {
                    used |= cliques[i];
                    pass.push_back(i);
                }
            }
            if (pass.size() > chosen.size())
                chosen = pass;
            if (chosen.size() >= target)
                break;
        }
    }
    family.reached_target = chosen.size() >= target;
    // Extend to a maximal family.
    Bits used(g.size());
    for (auto i : chosen)
        used |= cliques[i];
    for (std::size_t i = 0; i < cliques.size(); ++i)
        if (!cliques[i].intersects(used)) {
            used |= cliques[i];
            chosen.push_back(i);
        }
    std::sort(chosen.begin(), chosen.end());
    for (auto i : chosen)
        family.cliques.push_back(lists[i]);
    return family;
}

namespace {

// Smallest-last greedy colouring of the graph given by symmetric rows over
// `vertices`; returns colour classes.
std::vector<VertexList> degeneracy_classes(const VertexList& vertices, const std::vector<Bits>& rows)
{
    const std::size_t n = vertices.size();
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i)
        degree[i] = rows[i].count();
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = SIZE_MAX;
        for (std::size_t i = 0; i < n; ++i)
            if (!removed[i] && (pick == SIZE_MAX || degree[i] < degree[pick]))
                pick = i;
        removed[pick] = true;
        order.push_back(pick);
        for_each_bit(rows[pick], [&](Vertex j) {
            if (!removed[j])
                --degree[j];
        });
    }
    std::vector<std::size_t> color(n, SIZE_MAX);
    std::size_t used = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<bool> taken(used + 1, false);
        for_each_bit(rows[*it], [&](Vertex j) {
            if (color[j] != SIZE_MAX)
                taken[color[j]] = true;
        });
        std::size_t c = 0;
        while (taken[c])
            ++c;
        color[*it] = c;
        used = std::max(used, c + 1);
    }
    std::vector<VertexList> classes(used);
    for (std::size_t i = 0; i < n; ++i)
        classes[color[i]].push_back(vertices[i]);
    return classes;
}

// Classes of the auxiliary digraph whose edges run from v into the union of
// v's clique family, restricted to `side`.
std::vector<VertexList> auxiliary_classes(const VertexList& side, const std::vector<CliqueFamily>& families)
{
    const std::size_t n = side.size();
    std::map<Vertex, std::size_t> local;
    for (std::size_t i = 0; i < n; ++i)
        local[side[i]] = i;
    std::vector<Bits> rows(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& clique : families[side[i]].cliques)
            for (Vertex u : clique) {
                auto it = local.find(u);
                if (it != local.end() && it->second != i) {
                    rows[i].set(it->second);
                    rows[it->second].set(i);
                }
            }
    return degeneracy_classes(side, rows);
}

bool has_clique_with_apex(const Digraph& g, const VertexList& part, std::size_t size, bool source)
{
    if (size == 0)
        return false;
    for (const auto& clique : enumerate_cliques(g, make_bits(g.size(), part), size)) {
        for (Vertex v : clique) {
            bool apex = true;
            for (Vertex u : clique)
                if (u != v && !(source ? g.has_edge(v, u) : g.has_edge(u, v)))
                    apex = false;
            if (apex)
                return true;
        }
    }
    return false;
}

}  // namespace

SourceSinkOutcome source_sink_partition(const Digraph& g, std::size_t k, std::size_t m, std::size_t n,
                                        const Budget& budget)
{
    if (m == 0 || n == 0)
        throw PreconditionError("source_sink_partition: m and n must be positive");
    const std::size_t size = g.size();
    std::vector<CliqueFamily> out_families(size), in_families(size);
    VertexList p_side, q_side, failing;
    for (Vertex v = 0; v < size; ++v) {
        out_families[v] = disjoint_clique_family(g, to_list(g.out(v)), m, n, budget);
        in_families[v] = disjoint_clique_family(g, to_list(g.in(v)), m, n, budget);
        bool in_p = !out_families[v].reached_target;
        bool in_q = !in_families[v].reached_target;
        if (in_p)
            p_side.push_back(v);
        else if (in_q)
            q_side.push_back(v);
        else
            failing.push_back(v);
    }
    if (!failing.empty()) {
        Vertex v = failing.front();
        return SourceSinkFailure{v, out_families[v].cliques, in_families[v].cliques, failing};
    }

    PartitionCertificate cert;
    cert.theorem_tag = "outnbrs";
    cert.params = {{"k", static_cast<std::int64_t>(k)},
                   {"m", static_cast<std::int64_t>(m)},
                   {"n", static_cast<std::int64_t>(n)}};
    for (Vertex v = 0; v < size; ++v)
        cert.ground_set.push_back(v);
    auto p_classes = auxiliary_classes(p_side, out_families);
    auto q_classes = auxiliary_classes(q_side, in_families);
    cert.trace.push_back("P: " + std::to_string(p_side.size()) + " vertices in " + std::to_string(p_classes.size()) +
                         " classes");
    cert.trace.push_back("Q\\P: " + std::to_string(q_side.size()) + " vertices in " +
                         std::to_string(q_classes.size()) + " classes");
    using K = PartProperty::Kind;
    for (auto& cls : p_classes)
        cert.parts.push_back({std::move(cls), {K::source_free, m + 1, 0}, false});
    for (auto& cls : q_classes)
        cert.parts.push_back({std::move(cls), {K::sink_free, m + 1, 0}, false});

    if (p_classes.size() > 2 * n * m || q_classes.size() > 2 * n * m)
        throw VerificationError("source_sink_partition: more than 2nm classes on one side");
    for (auto& part : cert.parts) {
        bool source = part.property.kind == K::source_free;
        if (has_clique_with_apex(g, part.vertices, m + 1, source))
            throw VerificationError("source_sink_partition: part " + to_string(part.property) + " check failed");
        part.verified = true;
    }
    cert.verified = true;
    return cert;
}

PartitionCertificate acyclic_partition(const Digraph& g, const OrderableWitness& witness, const Budget& budget)
{
    (void)budget;
    if (auto problem = orderable_problem(g, witness))
        throw PreconditionError("acyclic_partition: invalid witness: " + *problem);
    // In-orderable is out-orderable for the reversed digraph, which has the
    // same acyclic sets.
    const Digraph reversed = witness.direction == OrderDirection::in ? reverse(g) : Digraph();
    const Digraph& d = witness.direction == OrderDirection::in ? reversed : g;
    const std::size_t h = witness.h;
    const std::size_t k = witness.k;

    std::vector<std::size_t> part_of(g.size(), SIZE_MAX), class_of(g.size(), SIZE_MAX);
    for (std::size_t i = 0; i < witness.parts.size(); ++i)
        for (std::size_t x = 0; x < witness.parts[i].size(); ++x) {
            part_of[witness.parts[i][x]] = i;
            class_of[witness.parts[i][x]] = witness.colorings[i].colors[x];
        }
    auto j_adjacent = [&](Vertex u, Vertex w) {
        return (d.has_edge(u, w) && part_of[u] <= part_of[w]) || (d.has_edge(w, u) && part_of[w] <= part_of[u]);
    };

    PartitionCertificate cert;
    cert.theorem_tag = "outorderable";
    cert.ground_set = witness.ground_set();
    cert.params = {{"h", static_cast<std::int64_t>(h)}, {"k", static_cast<std::int64_t>(k)}};
    cert.trace.push_back(std::string(witness.direction == OrderDirection::out ? "out" : "in") + "-orderable witness with " +
                         std::to_string(witness.parts.size()) + " parts");

    for (std::size_t j = 0; j < h; ++j) {
        VertexList y;
        for (Vertex v : cert.ground_set)
            if (class_of[v] == j)
                y.push_back(v);
        // Later parts first: each vertex then sees at most k-1 coloured
        // J-neighbours, namely its out-neighbours in later parts.
        std::stable_sort(y.begin(), y.end(), [&](Vertex a, Vertex b) { return part_of[a] > part_of[b]; });
        std::map<Vertex, std::size_t> color;
        std::vector<VertexList> sets;
        for (Vertex v : y) {
            std::vector<bool> taken(sets.size() + 1, false);
            for (const auto& [u, c] : color)
                if (j_adjacent(u, v))
                    taken[c] = true;
            std::size_t c = 0;
            while (taken[c])
                ++c;
            if (c >= k)
                throw VerificationError("acyclic_partition: degeneracy colouring needed more than k colours");
            color[v] = c;
            if (c == sets.size())
                sets.emplace_back();
            sets[c].push_back(v);
        }
        for (auto& s : sets) {
            std::sort(s.begin(), s.end());
            cert.parts.push_back({std::move(s), {PartProperty::Kind::acyclic, 0, 0}, false});
        }
    }
    if (cert.parts.size() > h * k)
        throw VerificationError("acyclic_partition: more than hk parts");
    for (auto& part : cert.parts) {
        if (!is_acyclic_set(g, make_bits(g.size(), part.vertices)))
            throw VerificationError("acyclic_partition: a part contains a directed cycle");
        part.verified = true;
    }
    cert.verified = true;
    return cert;
}

UserobustVerdict check_userobust_instance(const Digraph& g, const VertexList& x, std::size_t lambda, std::size_t tau,
                                          const Budget& budget)
{
    UserobustVerdict verdict;
    const VertexList xs = normalized(x);
    const std::size_t big_lambda = 2 * lambda * lambda + lambda;
    const Bits xb = make_bits(g.size(), xs);
    verdict.spread = is_lambda_spread(g, lambda, budget).spread;
    verdict.degree_condition = !xs.empty() && std::all_of(xs.begin(), xs.end(), [&](Vertex v) {
        return (g.out(v) & xb).count() >= big_lambda && (g.in(v) & xb).count() >= big_lambda;
    });
    verdict.hypothesis = verdict.spread && verdict.degree_condition;
    auto robust = is_robust(g, xs.size() * tau, xs.size() + big_lambda, budget);
    verdict.conclusion = !robust.robust;
    verdict.violating = robust.violating;
    verdict.implication = !verdict.hypothesis || verdict.conclusion;
    return verdict;
}

std::optional<std::string> trace_problem(const Digraph& g, const ColoringReport& report)
{
    const auto& c = report.coloring;
    if (c.colors.size() != g.size())
        return "colouring does not cover the vertex set";
    Bits covered(g.size());
    std::vector<bool> palette_used(c.color_count, false);
    for (const auto& entry : report.trace) {
        if (!entry.leaf)
            continue;
        if (entry.color_offset + entry.colors > c.color_count)
            return "leaf palette exceeds the colour count";
        for (std::uint32_t i = entry.color_offset; i < entry.color_offset + entry.colors; ++i) {
            if (palette_used[i])
                return "leaf palettes overlap";
            palette_used[i] = true;
        }
        for (Vertex v : entry.vertices) {
            if (v >= g.size() || covered.test(v))
                return "leaves do not partition the vertex set";
            covered.set(v);
            if (c.colors[v] < entry.color_offset || c.colors[v] >= entry.color_offset + entry.colors)
                return "vertex " + std::to_string(v) + " is coloured outside its leaf palette";
        }
    }
    if (covered.count() != g.size())
        return "some vertex belongs to no leaf";
    return std::nullopt;
}

namespace {

class PipelineColorer {
public:
    PipelineColorer(const Digraph& g, const ParamPack& params)
        : g_(g), params_(params), colors_(g.size(), UINT32_MAX)
    {
    }

    void acyclic(const VertexList& s, std::size_t kappa, std::size_t depth)
    {
        if (s.empty())
            return;
        auto sub = induced_subdigraph(g_, s);
        std::size_t omega = clique_number(sub.graph, params_.budget).size;
        if (omega <= 1) {
            base(s, kappa, depth, "acyclicstars");
            return;
        }
        if (omega > kappa)
            throw VerificationError("color_acyclic_spread: clique bound violated in recursion");
        auto outcome = source_sink_partition(sub.graph, 1, kappa - 1, params_.n, params_.budget);
        if (auto* failure = std::get_if<SourceSinkFailure>(&outcome)) {
            exact(s, kappa, depth, "acyclicstars",
                  "source/sink partition failed at vertex " + std::to_string(sub.host(failure->v)));
            return;
        }
        const auto& cert = std::get<PartitionCertificate>(outcome);
        step("acyclicstars", s, kappa, depth, std::to_string(cert.parts.size()) + " parts with clique number below " +
                                                   std::to_string(kappa));
        for (const auto& part : cert.parts) {
            VertexList host = sub.lift(part.vertices);
            check_clique_drop(host, kappa, "color_acyclic_spread");
            acyclic(host, kappa - 1, depth + 1);
        }
    }

    void spread(const VertexList& s, std::size_t kappa, std::size_t depth)
    {
        if (s.empty())
            return;
        auto sub = induced_subdigraph(g_, s);
        std::size_t omega = clique_number(sub.graph, params_.budget).size;
        if (omega <= 1 && depth > 0) {
            base(s, kappa, depth, "stars");
            return;
        }
        if (omega > kappa)
            throw VerificationError("color_spread: clique bound violated in recursion");
        if (sub.graph.size() > params_.budget.max_robust_vertices) {
            exact(s, kappa, depth, "stars", "robust partition skipped: set exceeds the robustness budget");
            return;
        }
        const std::size_t h = 4 * params_.big_lambda() * params_.tau;
        const std::size_t k1 = params_.k1_value();
        auto triple = robust_decomposition(sub.graph, h, k1, params_.budget);
        step("robustpartition", s, kappa, depth,
             "P=" + std::to_string(triple.p.ground_set().size()) + " Q=" +
                 std::to_string(triple.q.ground_set().size()) + " R=" + std::to_string(triple.r.size()));

        for (const auto* side : {&triple.p, &triple.q}) {
            if (side->parts.empty())
                continue;
            auto sets = acyclic_partition(sub.graph, *side, params_.budget);
            step("outorderable", sub.lift(side->ground_set()), kappa, depth,
                 std::to_string(sets.parts.size()) + " acyclic sets");
            for (const auto& part : sets.parts)
                acyclic(sub.lift(part.vertices), kappa, depth + 1);
        }
        if (triple.r.empty())
            return;

        VertexList r_host = sub.lift(triple.r);
        auto r_sub = induced_subdigraph(g_, r_host);
        const std::size_t upper = (kappa + 1) / 2;
        auto outcome = source_sink_partition(r_sub.graph, 1, upper, params_.n, params_.budget);
        if (auto* failure = std::get_if<SourceSinkFailure>(&outcome)) {
            exact(r_host, kappa, depth, "stars",
                  "source/sink partition of R failed at vertex " + std::to_string(r_sub.host(failure->v)));
            return;
        }
        const auto& cert = std::get<PartitionCertificate>(outcome);
        step("outnbrs", r_host, kappa, depth, std::to_string(cert.parts.size()) + " parts");
        for (const auto& part : cert.parts) {
            VertexList y = r_sub.lift(part.vertices);
            if (kappa % 2 == 0) {
                check_clique_drop(y, kappa, "color_spread");
                spread(y, kappa - 1, depth + 1);
                continue;
            }
            // Odd clique bound: split again on half-size cliques.
            auto y_sub = induced_subdigraph(g_, y);
            auto inner = source_sink_partition(y_sub.graph, params_.k, kappa / 2, params_.n, params_.budget);
            if (auto* failure = std::get_if<SourceSinkFailure>(&inner)) {
                exact(y, kappa, depth + 1, "sinks",
                      "source/sink partition failed at vertex " + std::to_string(y_sub.host(failure->v)));
                continue;
            }
            const auto& inner_cert = std::get<PartitionCertificate>(inner);
            step("sinks", y, kappa, depth + 1, std::to_string(inner_cert.parts.size()) + " parts");
            for (const auto& inner_part : inner_cert.parts) {
                VertexList z = y_sub.lift(inner_part.vertices);
                check_clique_drop(z, kappa, "color_spread");
                spread(z, kappa - 1, depth + 2);
            }
        }
    }

    ColoringReport finish()
    {
        ColoringReport report;
        report.coloring.colors = colors_;
        report.coloring.color_count = next_;
        report.trace = std::move(trace_);
        report.proof_colors = proof_colors_;
        report.fallback_colors = fallback_colors_;
        if (!is_proper(g_, report.coloring))
            throw VerificationError("colouring pipeline produced an improper colouring");
        if (auto problem = trace_problem(g_, report))
            throw VerificationError("colouring pipeline produced a malformed trace: " + *problem);
        report.verified = true;
        return report;
    }

private:
    void check_clique_drop(const VertexList& s, std::size_t kappa, const char* who)
    {
        if (s.empty())
            return;
        auto sub = induced_subdigraph(g_, s);
        if (clique_number(sub.graph, params_.budget).size >= kappa)
            throw VerificationError(std::string(who) + ": a part kept a clique of size " + std::to_string(kappa));
    }

    void step(const std::string& handler, const VertexList& s, std::size_t kappa, std::size_t depth, std::string note)
    {
        trace_.push_back({handler, s, kappa, depth, false, 0, 0, false, std::move(note)});
    }

    void leaf(const std::string& handler, const VertexList& s, const Coloring& local, std::size_t kappa,
              std::size_t depth, bool fallback, std::string note)
    {
        for (std::size_t i = 0; i < s.size(); ++i)
            colors_[s[i]] = next_ + local.colors[i];
        trace_.push_back({handler, s, kappa, depth, true, next_, local.color_count, fallback, std::move(note)});
        next_ += local.color_count;
        (fallback ? fallback_colors_ : proof_colors_) += local.color_count;
    }

    void base(const VertexList& s, std::size_t kappa, std::size_t depth, const std::string& handler)
    {
        Coloring one;
        one.colors.assign(s.size(), 0);
        one.color_count = 1;
        leaf(handler, s, one, kappa, depth, false, "stable set");
    }

    void exact(const VertexList& s, std::size_t kappa, std::size_t depth, const std::string& handler,
               std::string note)
    {
        auto sub = induced_subdigraph(g_, s);
        auto result = chromatic_number(sub.graph, params_.budget);
        leaf(handler, s, result.coloring, kappa, depth, true, std::move(note));
    }

    const Digraph& g_;
    const ParamPack& params_;
    std::vector<std::uint32_t> colors_;
    std::uint32_t next_ = 0;
    std::uint32_t proof_colors_ = 0;
    std::uint32_t fallback_colors_ = 0;
    std::vector<TraceEntry> trace_;
};

VertexList all_vertices(const Digraph& g)
{
    VertexList v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        v[i] = static_cast<Vertex>(i);
    return v;
}

void require_clique_bound(const Digraph& g, const ParamPack& params, const char* who)
{
    auto omega = clique_number(g, params.budget).size;
    if (omega > params.kappa)
        throw PreconditionError(std::string(who) + ": clique number " + std::to_string(omega) + " exceeds kappa = " +
                                std::to_string(params.kappa));
}

}  // namespace

ColoringReport color_acyclic_spread(const Digraph& g, const ParamPack& params)
{
    params.validate();
    if (!is_acyclic(g))
        throw PreconditionError("color_acyclic_spread: digraph has a directed cycle");
    require_clique_bound(g, params, "color_acyclic_spread");
    PipelineColorer colorer(g, params);
    colorer.acyclic(all_vertices(g), params.kappa, 0);
    return colorer.finish();
}

ColoringReport color_spread(const Digraph& g, const ParamPack& params)
{
    params.validate();
    if (!is_lambda_spread(g, params.lambda, params.budget).spread)
        throw PreconditionError("color_spread: digraph is not " + std::to_string(params.lambda) + "-spread");
    require_clique_bound(g, params, "color_spread");
    PipelineColorer colorer(g, params);
    colorer.spread(all_vertices(g), params.kappa, 0);
    return colorer.finish();
}

}  // namespace orient
