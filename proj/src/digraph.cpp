#include "orient/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

namespace orient {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Edge> edges, std::string name)
    : n_(vertex_count), edges_(std::move(edges)), name_(std::move(name)),
      out_(vertex_count, Bits(vertex_count)), in_(vertex_count, Bits(vertex_count)),
      adj_(vertex_count, Bits(vertex_count))
{
    for (const auto& e : edges_) {
        if (e.tail >= n_ || e.head >= n_)
            throw InvalidDigraph("edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                                 ") has a vertex id out of range for " + std::to_string(n_) + " vertices");
        if (e.tail == e.head)
            throw InvalidDigraph("loop at vertex " + std::to_string(e.tail));
        if (out_[e.tail].test(e.head))
            throw InvalidDigraph("duplicate edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")");
        if (out_[e.head].test(e.tail))
            throw InvalidDigraph("digon (" + std::to_string(e.head) + "," + std::to_string(e.tail) + ")/(" +
                                 std::to_string(e.tail) + "," + std::to_string(e.head) + ")");
        out_[e.tail].set(e.head);
        in_[e.head].set(e.tail);
        adj_[e.tail].set(e.head);
        adj_[e.head].set(e.tail);
    }
}

Digraph Digraph::renamed(std::string name) const
{
    Digraph copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool operator==(const Digraph& a, const Digraph& b)
{
    return a.n_ == b.n_ && a.out_ == b.out_;
}

Bits make_bits(std::size_t n, const VertexList& vertices)
{
    Bits bits(n);
    for (Vertex v : vertices) {
        if (v >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        bits.set(v);
    }
    return bits;
}

Bits full_bits(std::size_t n)
{
    Bits bits(n);
    bits.set();
    return bits;
}

VertexList to_list(const Bits& bits)
{
    VertexList out;
    out.reserve(bits.count());
    for_each_bit(bits, [&](Vertex v) { out.push_back(v); });
    return out;
}

VertexList normalized(VertexList vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view s)
{
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            fields.push_back(s.substr(i, j - i));
        i = j;
    }
    return fields;
}

std::uint64_t parse_uint(std::string_view field, std::size_t line)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(field) + "'");
    return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text)
{
    std::optional<std::size_t> count;
    std::vector<Edge> edges;
    std::set<std::pair<std::uint64_t, std::uint64_t>> declared;
    std::string name;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool seen_content = false;

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;

        if (line.empty())
            continue;
        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            if (!seen_content && name.empty() && body.starts_with("name:"))
                name = std::string(trim(body.substr(5)));
            continue;
        }
        seen_content = true;

        auto fields = split_fields(line);
        if (fields[0] == "n") {
            if (count)
                throw ParseError(line_no, "duplicate 'n' header");
            if (fields.size() != 2)
                throw ParseError(line_no, "expected 'n <count>'");
            count = parse_uint(fields[1], line_no);
        } else if (fields[0] == "e") {
            if (!count)
                throw ParseError(line_no, "edge before 'n' header");
            if (fields.size() != 3)
                throw ParseError(line_no, "expected 'e <tail> <head>'");
            auto tail = parse_uint(fields[1], line_no);
            auto head = parse_uint(fields[2], line_no);
            if (tail >= *count || head >= *count)
                throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(*count) + ")");
            if (tail == head)
                throw ParseError(line_no, "loop at vertex " + std::to_string(tail));
            if (declared.count({tail, head}))
                throw ParseError(line_no, "duplicate edge (" + std::to_string(tail) + "," + std::to_string(head) + ")");
            if (declared.count({head, tail}))
                throw ParseError(line_no, "digon (" + std::to_string(head) + "," + std::to_string(tail) + ")/(" +
                                              std::to_string(tail) + "," + std::to_string(head) + ")");
            declared.insert({tail, head});
            edges.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
        } else {
            throw ParseError(line_no, "unknown record '" + std::string(fields[0]) + "'");
        }
    }
    if (!count)
        throw ParseError(line_no, "missing 'n <count>' header");

    return Digraph(*count, std::move(edges), std::move(name));
}

std::string serialize_digraph(const Digraph& g)
{
    std::ostringstream os;
    if (!g.name().empty())
        os << "# name: " << g.name() << '\n';
    os << "n " << g.size() << '\n';
    for (const auto& e : g.edges())
        os << "e " << e.tail << ' ' << e.head << '\n';
    return os.str();
}

std::string to_dot(const Digraph& g)
{
    std::string label = g.name().empty() ? "G" : g.name();
    std::string escaped;
    for (char c : label) {
        if (c == '"' || c == '\\')
            escaped += '\\';
        escaped += c;
    }
    std::ostringstream os;
    os << "digraph \"" << escaped << "\" {\n";
    os << "  label=\"" << escaped << "\";\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        os << "  " << v << ";\n";
    for (const auto& e : g.edges())
        os << "  " << e.tail << " -> " << e.head << ";\n";
    os << "}\n";
    return os.str();
}

VertexList InducedSubdigraph::lift(const VertexList& local_vertices) const
{
    VertexList out;
    out.reserve(local_vertices.size());
    for (Vertex v : local_vertices)
        out.push_back(to_host[v]);
    return out;
}

InducedSubdigraph induced_subdigraph(const Digraph& g, const VertexList& subset)
{
    return induced_subdigraph(g, make_bits(g.size(), subset));
}

InducedSubdigraph induced_subdigraph(const Digraph& g, const Bits& subset)
{
    if (subset.size() != g.size())
        throw std::out_of_range("vertex set sized for a different graph");
    InducedSubdigraph result;
    result.from_host.assign(g.size(), kNoVertex);
    for_each_bit(subset, [&](Vertex v) {
        result.from_host[v] = static_cast<Vertex>(result.to_host.size());
        result.to_host.push_back(v);
    });
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (subset.test(e.tail) && subset.test(e.head))
            edges.push_back({result.from_host[e.tail], result.from_host[e.head]});
    result.graph = Digraph(result.to_host.size(), std::move(edges));
    return result;
}

Digraph reverse(const Digraph& g)
{
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        edges.push_back({e.head, e.tail});
    return Digraph(g.size(), std::move(edges), g.name());
}

std::vector<Edge> underlying_edges(const Digraph& g)
{
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (const auto& e : g.edges())
        out.push_back({std::min(e.tail, e.head), std::max(e.tail, e.head)});
    std::sort(out.begin(), out.end());
    return out;
}

LayerDecomposition distance_layers(const Digraph& g, Vertex root)
{
    if (root >= g.size())
        throw std::out_of_range("root vertex out of range");
    LayerDecomposition result;
    result.root = root;
    Bits seen(g.size());
    seen.set(root);
    Bits frontier(g.size());
    frontier.set(root);
    while (frontier.any()) {
        result.layers.push_back(to_list(frontier));
        Bits next(g.size());
        for_each_bit(frontier, [&](Vertex v) { next |= g.adj(v); });
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!seen.test(v))
            result.unreachable.push_back(static_cast<Vertex>(v));
    return result;
}

Acyclicity acyclicity(const Digraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> indeg(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0)
            ready.push(v);
    }
    Acyclicity result;
    Bits removed(n);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        result.order.push_back(v);
        removed.set(v);
        for_each_bit(g.out(v), [&](Vertex w) {
            if (--indeg[w] == 0)
                ready.push(w);
        });
    }
    if (result.order.size() == n)
        return result;

    // Every remaining vertex keeps an in-neighbour among the remaining ones;
    // walking backwards must revisit a vertex.
    result.acyclic = false;
    Vertex start = 0;
    while (removed.test(start))
        ++start;
    std::vector<std::size_t> seen_at(n, SIZE_MAX);
    VertexList walk;
    Vertex v = start;
    while (seen_at[v] == SIZE_MAX) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        Bits pred = g.in(v) - removed;
        v = static_cast<Vertex>(pred.find_first());
    }
    VertexList cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    result.cycle = std::move(cycle);
    result.order.clear();
    return result;
}

bool is_acyclic(const Digraph& g)
{
    return acyclicity(g).acyclic;
}

bool is_acyclic_set(const Digraph& g, const Bits& subset)
{
    return acyclicity(induced_subdigraph(g, subset).graph).acyclic;
}

}  // namespace orient
