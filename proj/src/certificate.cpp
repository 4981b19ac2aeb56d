#include "orient/certificate.hpp"

#include <algorithm>
#include <functional>

namespace orient {

Json to_json(const PartitionCertificate& cert)
{
    Json j;
    j["theorem_tag"] = cert.theorem_tag;
    j["ground_set"] = cert.ground_set;
    j["parts"] = Json::array();
    for (const auto& part : cert.parts)
        j["parts"].push_back({{"vertices", part.vertices}, {"property", to_string(part.property)}, {"verified", part.verified}});
    j["params"] = Json::object();
    for (const auto& [name, value] : cert.params)
        j["params"][name] = value;
    j["trace"] = cert.trace;
    j["verified"] = cert.verified;
    return j;
}

PartitionCertificate certificate_from_json(const Json& j)
{
    PartitionCertificate cert;
    cert.theorem_tag = j.at("theorem_tag").get<std::string>();
    cert.ground_set = j.at("ground_set").get<VertexList>();
    for (const auto& part : j.at("parts"))
        cert.parts.push_back({part.at("vertices").get<VertexList>(),
                              parse_part_property(part.at("property").get<std::string>()),
                              part.at("verified").get<bool>()});
    for (const auto& [name, value] : j.at("params").items())
        cert.params.emplace_back(name, value.get<std::int64_t>());
    cert.trace = j.at("trace").get<std::vector<std::string>>();
    cert.verified = j.value("verified", false);
    return cert;
}

PartitionCertificate robust_certificate(const RobustTriple& triple)
{
    using K = PartProperty::Kind;
    PartitionCertificate cert;
    cert.theorem_tag = "robustpartition";
    cert.params = {{"h", static_cast<std::int64_t>(triple.h)}, {"k", static_cast<std::int64_t>(triple.k)}};
    for (const auto& part : triple.p.parts)
        cert.parts.push_back({part, {K::out_orderable, triple.h, triple.k}, triple.verified});
    for (const auto& part : triple.q.parts)
        cert.parts.push_back({part, {K::in_orderable, triple.h, triple.k}, triple.verified});
    if (!triple.r.empty())
        cert.parts.push_back({triple.r, {K::robust, triple.h, triple.k}, triple.verified});
    VertexList ground;
    for (const auto& part : cert.parts)
        ground.insert(ground.end(), part.vertices.begin(), part.vertices.end());
    cert.ground_set = normalized(std::move(ground));
    cert.trace.push_back("P: " + std::to_string(triple.p.parts.size()) + " parts");
    cert.trace.push_back("Q: " + std::to_string(triple.q.parts.size()) + " parts");
    cert.trace.push_back("R: " + std::to_string(triple.r.size()) + " vertices");
    cert.verified = triple.verified;
    return cert;
}

Json to_json(const ColoringReport& report)
{
    Json j;
    j["color_count"] = report.coloring.color_count;
    j["colors"] = report.coloring.colors;
    j["proof_colors"] = report.proof_colors;
    j["fallback_colors"] = report.fallback_colors;
    j["verified"] = report.verified;
    j["trace"] = Json::array();
    for (const auto& e : report.trace)
        j["trace"].push_back({{"handler", e.handler},
                              {"vertices", e.vertices},
                              {"kappa", e.kappa},
                              {"depth", e.depth},
                              {"leaf", e.leaf},
                              {"color_offset", e.color_offset},
                              {"colors", e.colors},
                              {"fallback", e.fallback},
                              {"note", e.note}});
    return j;
}

Json to_json(const std::vector<HoleRecord>& holes)
{
    Json j = Json::array();
    for (const auto& h : holes)
        j.push_back({{"cycle", h.cycle}, {"class", std::string(to_string(h.cls))}});
    return j;
}

Json to_json(const Occurrence& occ)
{
    return {{"pattern", occ.pattern ? occ.pattern->name() : std::string()}, {"host", occ.host}};
}

Json to_json(const SourceSinkFailure& failure)
{
    return {{"failure", true},
            {"vertex", failure.v},
            {"out_family", failure.out_family},
            {"in_family", failure.in_family},
            {"failing", failure.failing}};
}

namespace oracle {

bool has_directed_cycle(const Digraph& g, const VertexList& vertices)
{
    std::vector<int> state(g.size(), -1);  // -1 outside, 0 new, 1 on stack, 2 done
    for (Vertex v : vertices)
        state[v] = 0;
    std::function<bool(Vertex)> dfs = [&](Vertex v) {
        state[v] = 1;
        for (Vertex u : vertices) {
            if (!g.has_edge(v, u))
                continue;
            if (state[u] == 1)
                return true;
            if (state[u] == 0 && dfs(u))
                return true;
        }
        state[v] = 2;
        return false;
    };
    for (Vertex v : vertices)
        if (state[v] == 0 && dfs(v))
            return true;
    return false;
}

bool colorable(const Digraph& g, const VertexList& vertices, std::size_t colors)
{
    std::vector<std::size_t> assigned(vertices.size(), 0);
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t used) {
        if (i == vertices.size())
            return true;
        for (std::size_t c = 0; c < std::min(colors, used + 1); ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = !(assigned[j] == c && g.adjacent(vertices[i], vertices[j]));
            if (!ok)
                continue;
            assigned[i] = c;
            if (place(i + 1, std::max(used, c + 1)))
                return true;
        }
        return false;
    };
    return place(0, 0);
}

bool has_apex_clique(const Digraph& g, const VertexList& vertices, std::size_t size, bool source)
{
    if (size == 0)
        return false;
    VertexList clique;
    std::function<bool(std::size_t)> grow = [&](std::size_t start) {
        if (clique.size() == size) {
            for (Vertex v : clique) {
                bool apex = true;
                for (Vertex u : clique)
                    if (u != v && !(source ? g.has_edge(v, u) : g.has_edge(u, v)))
                        apex = false;
                if (apex)
                    return true;
            }
            return false;
        }
        for (std::size_t i = start; i < vertices.size(); ++i) {
            Vertex w = vertices[i];
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, w); })) {
                clique.push_back(w);
                bool found = grow(i + 1);
                clique.pop_back();
                if (found)
                    return true;
            }
        }
        return false;
    };
    return grow(0);
}

bool robust(const Digraph& g, const VertexList& vertices, std::size_t h, std::size_t k)
{
    const std::size_t n = vertices.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexList z, outside;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1 ? z : outside).push_back(vertices[i]);
        if (!colorable(g, z, h))
            continue;
        bool witnessed = false;
        for (Vertex v : z) {
            std::size_t outs = 0, ins = 0;
            for (Vertex u : outside) {
                outs += g.has_edge(v, u);
                ins += g.has_edge(u, v);
            }
            if (outs >= k && ins >= k) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed)
            return false;
    }
    return true;
}

}  // namespace oracle

std::vector<std::string> recheck_certificate(const Digraph& g, const Json& j)
{
    std::vector<std::string> problems;
    PartitionCertificate cert;
    try {
        cert = certificate_from_json(j);
    } catch (const std::exception& e) {
        return {std::string("malformed certificate: ") + e.what()};
    }
    auto param = [&](const std::string& name) -> std::int64_t {
        for (const auto& [key, value] : cert.params)
            if (key == name)
                return value;
        problems.push_back("missing parameter " + name);
        return 0;
    };

    if (!cert.verified)
        problems.push_back("certificate is not marked verified");
    std::vector<int> owner(g.size(), -1);
    VertexList covered;
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        for (Vertex v : cert.parts[i].vertices) {
            if (v >= g.size()) {
                problems.push_back("part " + std::to_string(i) + " has out-of-range vertex " + std::to_string(v));
                return problems;
            }
            if (owner[v] != -1)
                problems.push_back("vertex " + std::to_string(v) + " lies in two parts");
            owner[v] = static_cast<int>(i);
            covered.push_back(v);
        }
        if (!cert.parts[i].verified)
            problems.push_back("part " + std::to_string(i) + " is not marked verified");
    }
    if (normalized(covered) != normalized(cert.ground_set))
        problems.push_back("parts do not cover the ground set exactly");

    using K = PartProperty::Kind;
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto& part = cert.parts[i];
        const auto& prop = part.property;
        const std::string where = "part " + std::to_string(i) + " (" + to_string(prop) + ")";
        switch (prop.kind) {
        case K::source_free:
        case K::sink_free:
            if (oracle::has_apex_clique(g, part.vertices, prop.a, prop.kind == K::source_free))
                problems.push_back(where + ": clique with " + (prop.kind == K::source_free ? "source" : "sink"));
            break;
        case K::acyclic:
            if (oracle::has_directed_cycle(g, part.vertices))
                problems.push_back(where + ": directed cycle");
            break;
        case K::chromatic_bound:
            if (!oracle::colorable(g, part.vertices, prop.a))
                problems.push_back(where + ": not colourable");
            break;
        case K::out_orderable:
        case K::in_orderable: {
            if (!oracle::colorable(g, part.vertices, prop.a))
                problems.push_back(where + ": chromatic number exceeds h");
            for (Vertex v : part.vertices) {
                std::size_t later = 0;
                for (std::size_t l = i + 1; l < cert.parts.size(); ++l) {
                    if (cert.parts[l].property.kind != prop.kind)
                        continue;
                    for (Vertex u : cert.parts[l].vertices)
                        later += prop.kind == K::out_orderable ? g.has_edge(v, u) : g.has_edge(u, v);
                }
                if (later + 1 > prop.b)
                    problems.push_back(where + ": vertex " + std::to_string(v) + " has " + std::to_string(later) +
                                       " neighbours in later parts");
            }
            break;
        }
        case K::robust:
            if (!oracle::robust(g, part.vertices, prop.a, prop.b))
                problems.push_back(where + ": not robust");
            break;
        }
    }

    const auto count = static_cast<std::int64_t>(cert.parts.size());
    if (cert.theorem_tag == "outnbrs") {
        auto bound = 4 * param("n") * param("m");
        if (count > bound)
            problems.push_back(std::to_string(count) + " parts exceed 4nm = " + std::to_string(bound));
    } else if (cert.theorem_tag == "outorderable") {
        auto bound = param("h") * param("k");
        if (count > bound)
            problems.push_back(std::to_string(count) + " parts exceed hk = " + std::to_string(bound));
    } else if (cert.theorem_tag == "robustpartition") {
        auto robust_parts = std::count_if(cert.parts.begin(), cert.parts.end(),
                                          [](const auto& p) { return p.property.kind == K::robust; });
        if (robust_parts > 1)
            problems.push_back("more than one robust part");
        param("h");
        param("k");
    } else {
        problems.push_back("unknown theorem tag '" + cert.theorem_tag + "'");
    }
    return problems;
}

}  // namespace orient
