#include "orient/holes.hpp"

#include <algorithm>

#include "orient/solvers.hpp"

namespace orient {

std::string_view to_string(HoleClass c)
{
    switch (c) {
    case HoleClass::directed:
        return "directed";
    case HoleClass::alternating:
        return "alternating";
    case HoleClass::disoriented:
        return "disoriented";
    }
    return "?";
}

HoleClass hole_class_from_string(std::string_view s)
{
    if (s == "directed")
        return HoleClass::directed;
    if (s == "alternating")
        return HoleClass::alternating;
    if (s == "disoriented")
        return HoleClass::disoriented;
    throw std::invalid_argument("unknown hole class '" + std::string(s) + "'");
}

VertexList canonical_cycle(VertexList cycle)
{
    if (cycle.size() < 3)
        return cycle;
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

bool is_induced_cycle(const Digraph& g, const VertexList& cycle)
{
    const std::size_t len = cycle.size();
    if (len < 3)
        return false;
    for (Vertex v : cycle)
        if (v >= g.size())
            return false;
    if (normalized(cycle).size() != len)
        return false;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    }
    return true;
}

namespace {

struct HoleSearch {
    const Digraph& g;
    std::size_t min_len;
    std::size_t max_len;
    NodeMeter meter;
    VertexList path;
    Bits blocked;  // neighbours of interior path vertices, plus the path itself
    std::vector<HoleRecord> found;

    // path[0] is the smallest vertex of the cycle; each extension keeps the
    // path induced. Closing requires path[1] < path.back() so every cycle is
    // reported in one direction only.
    void extend()
    {
        meter.tick();
        const Vertex start = path.front();
        const Vertex last = path.back();
        Bits next = g.adj(last) - blocked;
        for_each_bit(next, [&](Vertex w) {
            if (w <= start)
                return;
            const std::size_t len = path.size() + 1;
            if (g.adjacent(w, start)) {
                if (len >= 4 && len >= min_len && len <= max_len && path[1] < w) {
                    VertexList cycle = path;
                    cycle.push_back(w);
                    found.push_back({cycle, HoleClass::directed});
                }
                return;
            }
            if (len >= max_len)
                return;
            // w extends the path: last becomes interior.
            Bits saved = blocked;
            if (path.size() >= 2)
                blocked |= g.adj(last);
            blocked.set(w);
            path.push_back(w);
            extend();
            path.pop_back();
            blocked = std::move(saved);
        });
    }
};

}  // namespace

std::vector<HoleRecord> enumerate_holes(const Digraph& g, std::size_t min_len, std::size_t max_len,
                                        const Budget& budget)
{
    if (min_len > max_len)
        throw PreconditionError("enumerate_holes: min_len exceeds max_len");
    min_len = std::max<std::size_t>(min_len, 4);
    HoleSearch s{g, min_len, max_len, NodeMeter(budget, "enumerate_holes"), {}, Bits(g.size()), {}};
    if (max_len >= 4) {
        for (Vertex start = 0; start < g.size(); ++start) {
            s.path = {start};
            s.blocked = Bits(g.size());
            s.blocked.set(start);
            // start's own neighbours stay reachable only as path[1] or as the closing vertex.
            for_each_bit(g.adj(start), [&](Vertex second) {
                if (second <= start)
                    return;
                Bits saved = s.blocked;
                s.blocked.set(second);
                s.path.push_back(second);
                s.extend();
                s.path.pop_back();
                s.blocked = std::move(saved);
            });
        }
    }
    for (auto& h : s.found) {
        h.cycle = canonical_cycle(std::move(h.cycle));
        h.cls = classify_hole(g, h.cycle);
    }
    std::sort(s.found.begin(), s.found.end(), [](const auto& x, const auto& y) { return x.cycle < y.cycle; });
    return s.found;
}

HoleClass classify_hole(const Digraph& g, const VertexList& cycle)
{
    if (cycle.size() < 4 || !is_induced_cycle(g, cycle))
        throw PreconditionError("classify_hole: vertex list is not a hole of the underlying graph");
    const std::size_t len = cycle.size();
    bool all_one = true;
    bool all_zero_or_two = true;
    for (std::size_t i = 0; i < len; ++i) {
        Vertex v = cycle[i];
        std::size_t outdeg = g.has_edge(v, cycle[(i + 1) % len]) + g.has_edge(v, cycle[(i + len - 1) % len]);
        all_one = all_one && outdeg == 1;
        all_zero_or_two = all_zero_or_two && outdeg != 1;
    }
    if (all_one)
        return HoleClass::directed;
    if (all_zero_or_two)
        return HoleClass::alternating;
    return HoleClass::disoriented;
}

Occurrence extract_flh_from_hole(const Digraph& g, const HoleRecord& hole)
{
    const auto& c = hole.cycle;
    const std::size_t len = c.size();
    if (len < 5)
        throw PreconditionError("extract_flh_from_hole: hole must have length at least five");
    if (classify_hole(g, c) != HoleClass::disoriented)
        throw PreconditionError("extract_flh_from_hole: hole is not disoriented");

    auto at = [&](std::ptrdiff_t i) {
        auto l = static_cast<std::ptrdiff_t>(len);
        return c[static_cast<std::size_t>(((i % l) + l) % l)];
    };

    // Directed 2-paths x->y->z along the hole, in either reading direction.
    // A disoriented hole has a vertex of cycle out-degree one, so one exists.
    struct TwoPath {
        VertexList vertices;
        std::ptrdiff_t middle;
        int step;  // +1: follows increasing index, -1: decreasing
    };
    std::optional<TwoPath> best;
    for (std::size_t i = 0; i < len; ++i) {
        auto m = static_cast<std::ptrdiff_t>(i);
        for (int step : {+1, -1}) {
            Vertex x = at(m - step), y = at(m), z = at(m + step);
            if (g.has_edge(x, y) && g.has_edge(y, z)) {
                VertexList t{x, y, z};
                if (!best || t < best->vertices)
                    best = TwoPath{t, m, step};
            }
        }
    }
    if (!best)
        throw VerificationError("extract_flh_from_hole: disoriented hole without a directed 2-path");

    // Grow forward until the next hole edge points back against the path.
    const int step = best->step;
    std::ptrdiff_t end = best->middle + step;
    std::size_t grown = 2;
    while (grown < len && g.has_edge(at(end), at(end + step))) {
        end += step;
        ++grown;
    }
    if (grown >= len)
        throw VerificationError("extract_flh_from_hole: hole is directed");

    // p_{t-2} -> p_{t-1} -> p_t <- p_{t+1}, read as (a, b, c, d) = (p_{t+1}, p_t, p_{t-1}, p_{t-2}).
    VertexList host{at(end + step), at(end), at(end - step), at(end - 2 * step)};
    if (!is_induced_embedding(g, flh_pattern(), host))
        throw VerificationError("extract_flh_from_hole: extracted vertices do not induce the pattern");
    static const auto shared = std::make_shared<const Digraph>(flh_pattern());
    return Occurrence{shared, std::move(host)};
}

LayerProfile layer_chromatic_profile(const Digraph& g, Vertex root, std::size_t kappa, const Budget& budget)
{
    if (kappa == 0)
        throw PreconditionError("layer_chromatic_profile: kappa must be positive");
    SubsetTable table(g, budget);
    const std::uint32_t all = g.size() == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << g.size()) - 1);
    if (table.omega(all) > kappa)
        throw PreconditionError("layer_chromatic_profile: clique number " + std::to_string(table.omega(all)) +
                                " exceeds kappa = " + std::to_string(kappa));

    LayerProfile profile;
    profile.root = root;
    profile.kappa = kappa;
    profile.layers = distance_layers(g, root).layers;
    for (const auto& layer : profile.layers)
        profile.chi.push_back(table.chi(to_mask(layer)));
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        if (table.omega(mask) < kappa)
            profile.tau_hat = std::max<std::size_t>(profile.tau_hat, table.chi(mask));
        if (mask == all)
            break;
    }
    for (std::size_t r = 1; r < profile.chi.size(); ++r)
        profile.inequality_holds.push_back(profile.chi[r] <= 3 * profile.tau_hat * profile.chi[r - 1]);
    return profile;
}

}  // namespace orient
