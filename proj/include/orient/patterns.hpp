#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "orient/budget.hpp"
#include "orient/digraph.hpp"

namespace orient {

/// An induced embedding: host[p] is the image of pattern vertex p.
struct Occurrence {
    std::shared_ptr<const Digraph> pattern;
    VertexList host;
};

bool is_induced_embedding(const Digraph& g, const Digraph& pattern, const VertexList& host);

inline constexpr std::size_t kNoLimit = static_cast<std::size_t>(-1);

/// Induced-subdigraph search by backtracking over pattern vertices (densest
/// first) with bit-row domain filtering. Results are sorted by host tuple;
/// with a finite limit the search stops once `limit` embeddings are found.
std::vector<Occurrence> find_induced(const Digraph& g, const Digraph& pattern, std::size_t limit = kNoLimit,
                                     const Budget& budget = {});
bool contains_induced(const Digraph& g, const Digraph& pattern, const Budget& budget = {});

/// Centre 0, out-leaves 1..s, in-leaves s+1..s+t.
Digraph oriented_star_pattern(std::size_t out_leaves, std::size_t in_leaves);

/// Path on |orientation|+1 vertices; 'f' is i -> i+1, 'r' is i+1 -> i.
Digraph oriented_path_pattern(std::string_view orientation);

/// "p4:fff", "p4:frf", "p4:frr", "p4:rff", "star:s,t", "tt" (transitive triangle).
Digraph parse_pattern(std::string_view spec);

/// The 3-edge path a->b, c->b, d->c. Occurrences list (a, b, c, d).
const Digraph& flh_pattern();

/// Specialized scan for flh_pattern(); returns the lexicographically least
/// (a, b, c, d).
std::optional<Occurrence> find_flh(const Digraph& g);

struct SpreadWitness {
    Vertex v = 0;
    VertexList a;  // out-neighbours of v
    VertexList b;  // in-neighbours of v
};

struct SpreadReport {
    std::size_t lambda = 1;
    bool spread = true;
    std::optional<SpreadWitness> witness;
};

/// True iff at every vertex, any λ out-neighbours and λ in-neighbours span
/// an underlying edge. The witness is at the smallest failing vertex with
/// the lexicographically least (A, B).
SpreadReport is_lambda_spread(const Digraph& g, std::size_t lambda, const Budget& budget = {});

struct RichWitness {
    Vertex v = 0;
    std::vector<VertexList> out_cliques;
    std::vector<VertexList> in_cliques;
};

bool is_valid_rich_witness(const Digraph& g, const RichWitness& w, std::size_t k, std::size_t m);

/// Exhaustive search for a (k,m)-rich vertex.
std::optional<RichWitness> find_rich_vertex(const Digraph& g, std::size_t k, std::size_t m,
                                            const Budget& budget = {});

/// Host tuple is (source, middle, sink).
const Digraph& transitive_triangle_pattern();
std::optional<Occurrence> find_transitive_triangle(const Digraph& g);

}  // namespace orient
