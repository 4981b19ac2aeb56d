#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <variant>

#include "orient/digraph.hpp"

namespace orient {

/// Vertices are the 2-subsets {i,j} of {1..n} in colex order; edges
/// {i,j} -> {j,k} for i < j < k.
Digraph shift_digraph(std::size_t n);

/// 1-based pair {i, j} (i < j) labelling vertex `id` of shift_digraph.
std::pair<std::size_t, std::size_t> shift_pair(Vertex id);
Vertex shift_vertex(std::size_t i, std::size_t j);

/// 2m+1 vertices; for i < j, i -> j iff j - i <= m, otherwise j -> i.
Digraph cyclic_tournament(std::size_t m);

struct TournamentOrdering {
    VertexList order;
    std::size_t m = 0;
};

/// Directed 4-cycle p->q->r->s->p with p, r out-neighbours and q, s
/// in-neighbours of the recognition vertex.
struct AlternatingFourCycle {
    Vertex p = 0, q = 0, r = 0, s = 0;
};

using CyclicRecognition = std::variant<TournamentOrdering, AlternatingFourCycle>;

/// m when g is a regular tournament on 2m+1 vertices.
std::optional<std::size_t> regular_tournament_degree(const Digraph& g);

bool is_cyclic_ordering(const Digraph& g, const VertexList& order);
bool is_alternating_four_cycle(const Digraph& g, Vertex v, const AlternatingFourCycle& c);

/// Either a validated cyclic ordering of the regular tournament h, or the
/// lexicographically least alternating 4-cycle around v.
CyclicRecognition recognize_cyclic(const Digraph& h, Vertex v);

/// Counter-based hash: the same (seed, counter) gives the same bits on
/// every platform and in any evaluation order.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter);
double counter_unit(std::uint64_t seed, std::uint64_t counter);

/// Each pair {i<j} is an underlying edge with probability p, oriented
/// uniformly; decisions depend only on (seed, pair index).
Digraph random_oriented(std::size_t n, double p, std::uint64_t seed);
Digraph random_tournament(std::size_t n, std::uint64_t seed);
/// Random graph oriented along a seeded random vertex permutation.
Digraph random_acyclic(std::size_t n, double p, std::uint64_t seed);

/// Calls `visit` for every labelled regular tournament on n vertices (n odd).
void for_each_regular_tournament(std::size_t n, const std::function<void(const Digraph&)>& visit);

}  // namespace orient
