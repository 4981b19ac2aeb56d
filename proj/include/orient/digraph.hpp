#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace orient {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
    Vertex tail = 0;
    Vertex head = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Raised when an edge list would break the oriented-graph invariants.
class InvalidDigraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Simple oriented graph: no loops, no digons, no parallel edges.
///
/// Immutable after construction. Out-, in- and underlying adjacency are
/// kept as bit rows so neighbourhood intersections are word-parallel.
/// The edge list keeps insertion order, which serialization preserves.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t vertex_count, std::vector<Edge> edges = {}, std::string name = {});

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& name() const noexcept { return name_; }

    bool has_edge(Vertex tail, Vertex head) const { return out_[tail].test(head); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }

    const Bits& out(Vertex v) const { return out_[v]; }
    const Bits& in(Vertex v) const { return in_[v]; }
    const Bits& adj(Vertex v) const { return adj_[v]; }

    std::size_t out_degree(Vertex v) const { return out_[v].count(); }
    std::size_t in_degree(Vertex v) const { return in_[v].count(); }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }

    Digraph renamed(std::string name) const;

    /// Same vertex count and edge set; ignores edge order and name.
    friend bool operator==(const Digraph& a, const Digraph& b);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::string name_;
    std::vector<Bits> out_;
    std::vector<Bits> in_;
    std::vector<Bits> adj_;
};

// Vertex-set helpers.
Bits make_bits(std::size_t n, const VertexList& vertices);
Bits full_bits(std::size_t n);
VertexList to_list(const Bits& bits);
VertexList normalized(VertexList vertices);

template <typename F>
void for_each_bit(const Bits& bits, F&& f)
{
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
        f(static_cast<Vertex>(i));
}

/// Parses the line-oriented edge-list format:
///   # comment            (a leading "# name: X" sets the graph name)
///   n <count>
///   e <tail> <head>
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& g);
std::string to_dot(const Digraph& g);

struct InducedSubdigraph {
    Digraph graph;
    VertexList to_host;    // local id -> host id
    VertexList from_host;  // host id -> local id, kNoVertex when absent

    Vertex host(Vertex local) const { return to_host[local]; }
    Vertex local(Vertex host_vertex) const { return from_host[host_vertex]; }
    VertexList lift(const VertexList& local_vertices) const;
};

/// Local ids follow increasing host id.
InducedSubdigraph induced_subdigraph(const Digraph& g, const VertexList& subset);
InducedSubdigraph induced_subdigraph(const Digraph& g, const Bits& subset);

Digraph reverse(const Digraph& g);

/// Edge set of the underlying graph as (min, max) pairs, sorted.
std::vector<Edge> underlying_edges(const Digraph& g);

struct LayerDecomposition {
    Vertex root = 0;
    std::vector<VertexList> layers;  // layers[r] = vertices at distance r
    VertexList unreachable;
};

LayerDecomposition distance_layers(const Digraph& g, Vertex root);

/// Either a topological order (acyclic) or a directed cycle.
struct Acyclicity {
    bool acyclic = true;
    VertexList order;  // lexicographically least topological order
    VertexList cycle;  // directed cycle starting at its smallest vertex
};

Acyclicity acyclicity(const Digraph& g);
bool is_acyclic(const Digraph& g);
bool is_acyclic_set(const Digraph& g, const Bits& subset);

}  // namespace orient
