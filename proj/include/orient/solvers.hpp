#pragma once

// Exact exponential-time solvers on the underlying graph. These are the
// ground-truth oracles behind every verification suite.

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/budget.hpp"
#include "orient/digraph.hpp"

namespace orient {

struct Coloring {
    std::vector<std::uint32_t> colors;  // colors[v] in [0, color_count)
    std::uint32_t color_count = 0;
};

/// Proper on the underlying graph with every index in [0, color_count) used.
bool is_proper(const Digraph& g, const Coloring& c);

struct CliqueWitness {
    std::size_t size = 0;
    VertexList vertices;
};

CliqueWitness clique_number(const Digraph& g, const Budget& budget = {});
CliqueWitness max_clique_within(const Digraph& g, const Bits& within, const Budget& budget = {});
bool is_clique(const Digraph& g, const VertexList& vertices);

/// All cliques of exactly `size` vertices inside `within`, each sorted,
/// listed in lexicographic order.
std::vector<VertexList> enumerate_cliques(const Digraph& g, const Bits& within, std::size_t size);

struct ChromaticResult {
    std::size_t count = 0;
    Coloring coloring;
};

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then
/// k-colourability branch and bound for each k in between.
ChromaticResult chromatic_number(const Digraph& g, const Budget& budget = {});
std::optional<Coloring> color_with(const Digraph& g, std::size_t k, const Budget& budget = {});
Coloring dsatur_greedy(const Digraph& g);

/// Chromatic and clique numbers of every vertex subset, indexed by bitmask.
class SubsetTable {
public:
    SubsetTable(const Digraph& g, const Budget& budget = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::uint8_t chi(std::uint32_t mask) const { return chi_[mask]; }
    std::uint8_t omega(std::uint32_t mask) const { return omega_[mask]; }
    bool independent(std::uint32_t mask) const { return omega_[mask] <= 1; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> chi_;
    std::vector<std::uint8_t> omega_;
};

std::uint32_t to_mask(const VertexList& vertices);
std::uint32_t to_mask(const Bits& bits);
VertexList from_mask(std::uint32_t mask);

struct PerfectionVerdict {
    bool perfect = true;
    VertexList witness;  // smallest induced set with chi > omega, when imperfect
};

PerfectionVerdict is_perfect_underlying(const Digraph& g, const Budget& budget = {});

struct BicliquePair {
    VertexList a;
    VertexList b;
};

/// λ-subsets A' of A and B' of B with no underlying edge between them; the
/// lexicographically least pair (A' first) when one exists.
std::optional<BicliquePair> nonadjacent_biclique(const Digraph& g, const VertexList& a, const VertexList& b,
                                                 std::size_t lambda, const Budget& budget = {});

struct BigRamseyOutcome {
    enum class Kind { nonadjacent_pair, complete_indices, neither };
    Kind kind = Kind::neither;
    BicliquePair pair;                 // nonadjacent_pair
    std::vector<std::size_t> i, j;     // complete_indices, 0-based
};

/// Searches for one of the two outcomes of the bipartite Ramsey dichotomy
/// over the given families. It is a searcher: when the families are below
/// the Ramsey threshold it may find neither.
BigRamseyOutcome bigramsey_search(const Digraph& g, const std::vector<VertexList>& as,
                                  const std::vector<VertexList>& bs, std::size_t k, std::size_t lambda,
                                  const Budget& budget = {});

}  // namespace orient
