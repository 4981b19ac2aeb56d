#include "orient/patterns.hpp"

#include <algorithm>
#include <charconv>

#include "orient/solvers.hpp"

namespace orient {

bool is_induced_embedding(const Digraph& g, const Digraph& pattern, const VertexList& host)
{
    if (host.size() != pattern.size())
        return false;
    for (Vertex v : host)
        if (v >= g.size())
            return false;
    if (normalized(host).size() != host.size())
        return false;
    for (Vertex p = 0; p < pattern.size(); ++p)
        for (Vertex q = 0; q < pattern.size(); ++q)
            if (p != q && pattern.has_edge(p, q) != g.has_edge(host[p], host[q]))
                return false;
    return true;
}

namespace {

struct Matcher {
    const Digraph& g;
    const Digraph& h;
    std::size_t limit;
    NodeMeter meter;
    VertexList order;  // pattern vertices in search order
    VertexList image;  // image[pattern vertex]
    Bits used;
    std::vector<VertexList> found;

    Matcher(const Digraph& host, const Digraph& pattern, std::size_t lim, const Budget& budget)
        : g(host), h(pattern), limit(lim), meter(budget, "find_induced"), image(pattern.size(), kNoVertex),
          used(host.size())
    {
        // Densest vertex first, then whichever has most already-ordered
        // neighbours, so constraints bite early.
        Bits placed(h.size());
        while (order.size() < h.size()) {
            Vertex best = kNoVertex;
            std::size_t best_links = 0;
            for (Vertex p = 0; p < h.size(); ++p) {
                if (placed.test(p))
                    continue;
                std::size_t links = (h.adj(p) & placed).count();
                if (best == kNoVertex || links > best_links ||
                    (links == best_links && h.degree(p) > h.degree(best))) {
                    best = p;
                    best_links = links;
                }
            }
            placed.set(best);
            order.push_back(best);
        }
    }

    bool search(std::size_t depth)
    {
        if (depth == order.size()) {
            found.push_back(image);
            return found.size() >= limit;
        }
        meter.tick();
        Vertex p = order[depth];
        Bits candidates = ~used;
        for (std::size_t i = 0; i < depth; ++i) {
            Vertex q = order[i];
            Vertex hq = image[q];
            if (h.has_edge(p, q))
                candidates &= g.in(hq);
            else if (h.has_edge(q, p))
                candidates &= g.out(hq);
            else
                candidates -= g.adj(hq);
        }
        const std::size_t need_out = h.out_degree(p);
        const std::size_t need_in = h.in_degree(p);
        for (auto c = candidates.find_first(); c != Bits::npos; c = candidates.find_next(c)) {
            auto v = static_cast<Vertex>(c);
            if (g.out_degree(v) < need_out || g.in_degree(v) < need_in)
                continue;
            image[p] = v;
            used.set(v);
            bool stop = search(depth + 1);
            used.reset(v);
            image[p] = kNoVertex;
            if (stop)
                return true;
        }
        return false;
    }
};

}  // namespace

std::vector<Occurrence> find_induced(const Digraph& g, const Digraph& pattern, std::size_t limit,
                                     const Budget& budget)
{
    std::vector<Occurrence> out;
    if (limit == 0 || pattern.size() > g.size())
        return out;
    Matcher m(g, pattern, limit, budget);
    m.search(0);
    std::sort(m.found.begin(), m.found.end());
    auto shared = std::make_shared<const Digraph>(pattern);
    out.reserve(m.found.size());
    for (auto& host : m.found)
        out.push_back({shared, std::move(host)});
    return out;
}

bool contains_induced(const Digraph& g, const Digraph& pattern, const Budget& budget)
{
    return !find_induced(g, pattern, 1, budget).empty();
}

Digraph oriented_star_pattern(std::size_t out_leaves, std::size_t in_leaves)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= out_leaves; ++i)
        edges.push_back({0, static_cast<Vertex>(i)});
    for (std::size_t i = out_leaves + 1; i <= out_leaves + in_leaves; ++i)
        edges.push_back({static_cast<Vertex>(i), 0});
    return Digraph(1 + out_leaves + in_leaves, std::move(edges),
                   "star:" + std::to_string(out_leaves) + "," + std::to_string(in_leaves));
}

Digraph oriented_path_pattern(std::string_view orientation)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < orientation.size(); ++i) {
        auto a = static_cast<Vertex>(i);
        if (orientation[i] == 'f')
            edges.push_back({a, a + 1});
        else if (orientation[i] == 'r')
            edges.push_back({a + 1, a});
        else
            throw std::invalid_argument("path orientation must use 'f' and 'r', got '" + std::string(orientation) +
                                        "'");
    }
    return Digraph(orientation.size() + 1, std::move(edges), "p" + std::to_string(orientation.size() + 1) + ":" +
                                                                 std::string(orientation));
}

Digraph parse_pattern(std::string_view spec)
{
    if (spec == "tt")
        return transitive_triangle_pattern();
    if (spec.starts_with("p")) {
        auto colon = spec.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("pattern '" + std::string(spec) + "': expected p<k>:<orientation>");
        std::size_t len = 0;
        auto digits = spec.substr(1, colon - 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), len);
        auto orientation = spec.substr(colon + 1);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || len != orientation.size() + 1)
            throw std::invalid_argument("pattern '" + std::string(spec) + "': vertex count does not match orientation");
        return oriented_path_pattern(orientation);
    }
    if (spec.starts_with("star:")) {
        auto body = spec.substr(5);
        auto comma = body.find(',');
        std::size_t s = 0, t = 0;
        if (comma == std::string_view::npos)
            throw std::invalid_argument("pattern '" + std::string(spec) + "': expected star:<out>,<in>");
        auto r1 = std::from_chars(body.data(), body.data() + comma, s);
        auto r2 = std::from_chars(body.data() + comma + 1, body.data() + body.size(), t);
        if (r1.ec != std::errc{} || r1.ptr != body.data() + comma || r2.ec != std::errc{} ||
            r2.ptr != body.data() + body.size())
            throw std::invalid_argument("pattern '" + std::string(spec) + "': expected star:<out>,<in>");
        return oriented_star_pattern(s, t);
    }
    throw std::invalid_argument("unknown pattern '" + std::string(spec) + "'");
}

const Digraph& flh_pattern()
{
    static const Digraph p = oriented_path_pattern("frr");
    return p;
}

std::optional<Occurrence> find_flh(const Digraph& g)
{
    for (Vertex a = 0; a < g.size(); ++a) {
        for (auto ib = g.out(a).find_first(); ib != Bits::npos; ib = g.out(a).find_next(ib)) {
            auto b = static_cast<Vertex>(ib);
            Bits cs = g.in(b) - g.adj(a);
            cs.reset(a);
            for (auto ic = cs.find_first(); ic != Bits::npos; ic = cs.find_next(ic)) {
                auto c = static_cast<Vertex>(ic);
                Bits ds = g.in(c) - g.adj(a) - g.adj(b);
                ds.reset(a);
                auto id = ds.find_first();
                if (id != Bits::npos) {
                    static const auto shared = std::make_shared<const Digraph>(flh_pattern());
                    return Occurrence{shared, {a, b, c, static_cast<Vertex>(id)}};
                }
            }
        }
    }
    return std::nullopt;
}

SpreadReport is_lambda_spread(const Digraph& g, std::size_t lambda, const Budget& budget)
{
    if (lambda == 0)
        throw PreconditionError("is_lambda_spread: lambda must be positive");
    SpreadReport report;
    report.lambda = lambda;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.out_degree(v) < lambda || g.in_degree(v) < lambda)
            continue;
        if (auto pair = nonadjacent_biclique(g, to_list(g.out(v)), to_list(g.in(v)), lambda, budget)) {
            report.spread = false;
            report.witness = SpreadWitness{v, std::move(pair->a), std::move(pair->b)};
            return report;
        }
    }
    return report;
}

bool is_valid_rich_witness(const Digraph& g, const RichWitness& w, std::size_t k, std::size_t m)
{
    if (w.v >= g.size() || w.out_cliques.size() != k || w.in_cliques.size() != k)
        return false;
    Bits seen(g.size());
    Bits union_out(g.size()), union_in(g.size());
    auto check = [&](const std::vector<VertexList>& cliques, const Bits& side, Bits& uni) {
        for (const auto& c : cliques) {
            if (c.size() != m || !is_clique(g, c))
                return false;
            for (Vertex u : c) {
                if (u >= g.size() || !side.test(u) || seen.test(u))
                    return false;
                seen.set(u);
                uni.set(u);
            }
        }
        return true;
    };
    if (!check(w.out_cliques, g.out(w.v), union_out) || !check(w.in_cliques, g.in(w.v), union_in))
        return false;
    bool complete = true;
    for_each_bit(union_out, [&](Vertex a) {
        if (!union_in.is_subset_of(g.adj(a)))
            complete = false;
    });
    return complete;
}

namespace {

// k pairwise disjoint members of `cliques` (indices ascending), or nothing.
bool pick_disjoint(const std::vector<Bits>& cliques, std::size_t start, std::size_t k, Bits& used,
                   std::vector<std::size_t>& chosen, NodeMeter& meter)
{
    if (chosen.size() == k)
        return true;
    for (std::size_t i = start; i + (k - chosen.size()) <= cliques.size(); ++i) {
        meter.tick();
        if (cliques[i].intersects(used))
            continue;
        used |= cliques[i];
        chosen.push_back(i);
        if (pick_disjoint(cliques, i + 1, k, used, chosen, meter))
            return true;
        chosen.pop_back();
        used -= cliques[i];
    }
    return false;
}

struct RichSearch {
    const Digraph& g;
    std::size_t k;
    std::vector<Bits> outs;
    std::vector<Bits> ins;
    NodeMeter& meter;
    std::vector<std::size_t> chosen_out;
    std::vector<std::size_t> chosen_in;

    // Chooses out-cliques; `common` is the set of in-side vertices complete
    // to everything chosen so far.
    bool search(std::size_t start, Bits& used, const Bits& common)
    {
        meter.tick();
        std::vector<Bits> eligible;
        for (const auto& c : ins)
            if (c.is_subset_of(common))
                eligible.push_back(c);
        if (eligible.size() < k)
            return false;
        if (chosen_out.size() == k) {
            Bits used_in(g.size());
            std::vector<std::size_t> picked;
            if (!pick_disjoint(eligible, 0, k, used_in, picked, meter))
                return false;
            chosen_in.clear();
            for (auto idx : picked) {
                auto it = std::find(ins.begin(), ins.end(), eligible[idx]);
                chosen_in.push_back(static_cast<std::size_t>(it - ins.begin()));
            }
            return true;
        }
        for (std::size_t i = start; i + (k - chosen_out.size()) <= outs.size(); ++i) {
            if (outs[i].intersects(used))
                continue;
            Bits next = common;
            for_each_bit(outs[i], [&](Vertex a) { next &= g.adj(a); });
            used |= outs[i];
            chosen_out.push_back(i);
            if (search(i + 1, used, next))
                return true;
            chosen_out.pop_back();
            used -= outs[i];
        }
        return false;
    }
};

}  // namespace

std::optional<RichWitness> find_rich_vertex(const Digraph& g, std::size_t k, std::size_t m, const Budget& budget)
{
    if (k == 0 || m == 0)
        throw PreconditionError("find_rich_vertex: k and m must be positive");
    NodeMeter meter(budget, "find_rich_vertex");
    for (Vertex v = 0; v < g.size(); ++v) {
        auto out_lists = enumerate_cliques(g, g.out(v), m);
        auto in_lists = enumerate_cliques(g, g.in(v), m);
        if (out_lists.size() < k || in_lists.size() < k)
            continue;
        RichSearch s{g, k, {}, {}, meter, {}, {}};
        for (const auto& c : out_lists)
            s.outs.push_back(make_bits(g.size(), c));
        for (const auto& c : in_lists)
            s.ins.push_back(make_bits(g.size(), c));
        Bits used(g.size());
        if (s.search(0, used, g.in(v))) {
            RichWitness w{v, {}, {}};
            for (auto i : s.chosen_out)
                w.out_cliques.push_back(out_lists[i]);
            for (auto i : s.chosen_in)
                w.in_cliques.push_back(in_lists[i]);
            return w;
        }
    }
    return std::nullopt;
}

const Digraph& transitive_triangle_pattern()
{
    static const Digraph p(3, {{0, 1}, {1, 2}, {0, 2}}, "tt");
    return p;
}

std::optional<Occurrence> find_transitive_triangle(const Digraph& g)
{
    for (Vertex u = 0; u < g.size(); ++u) {
        const Bits& outs = g.out(u);
        for (auto iv = outs.find_first(); iv != Bits::npos; iv = outs.find_next(iv)) {
            Bits sinks = outs & g.out(static_cast<Vertex>(iv));
            auto iw = sinks.find_first();
            if (iw != Bits::npos) {
                static const auto shared = std::make_shared<const Digraph>(transitive_triangle_pattern());
                return Occurrence{shared, {u, static_cast<Vertex>(iv), static_cast<Vertex>(iw)}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace orient
