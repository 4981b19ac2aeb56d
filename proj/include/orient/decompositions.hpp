#pragma once

// Certified versions of the partition theorems behind the colouring of
// λ-spread digraphs. Every routine checks its own output with exact
// oracles and throws VerificationError instead of returning a bad
// certificate.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orient/budget.hpp"
#include "orient/digraph.hpp"
#include "orient/solvers.hpp"

namespace orient {

/// Numeric knobs. The Ramsey-type constants are user supplied: the real
/// values are only known to exist, so small defaults may make a theorem
/// step fail, which the pipeline reports and works around.
struct ParamPack {
    std::size_t kappa = 2;   // clique bound
    std::size_t lambda = 1;  // spread parameter
    std::size_t tau = 1;     // colour bound for smaller clique number
    std::size_t h = 1;
    std::size_t k = 1;
    std::size_t m = 1;
    std::size_t n = 3;                // disjoint-clique threshold in the source/sink partition
    std::optional<std::size_t> k1;    // robustness degree; defaults to max(8, 5 * Lambda)
    Budget budget;

    std::size_t big_lambda() const noexcept { return 2 * lambda * lambda + lambda; }
    std::size_t k1_value() const noexcept { return k1 ? *k1 : std::max<std::size_t>(8, 5 * big_lambda()); }
    void validate() const;
};

struct PartProperty {
    enum class Kind { source_free, sink_free, acyclic, chromatic_bound, out_orderable, in_orderable, robust };
    Kind kind = Kind::acyclic;
    std::size_t a = 0;  // clique size, or h
    std::size_t b = 0;  // k for orderable and robust parts

    friend bool operator==(const PartProperty&, const PartProperty&) = default;
};

/// "source-free(3)", "acyclic", "chromatic-bound(2)", "out-orderable(2,1)", "robust(2,2)", ...
std::string to_string(const PartProperty& p);
PartProperty parse_part_property(std::string_view s);

struct CertifiedPart {
    VertexList vertices;
    PartProperty property;
    bool verified = false;
};

struct PartitionCertificate {
    std::string theorem_tag;
    VertexList ground_set;
    std::vector<CertifiedPart> parts;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<std::string> trace;
    bool verified = false;
};

enum class OrderDirection { out, in };

/// Ordered parts X_1..X_n, each with a proper colouring using at most h
/// colours (indexed like parts[i]); every vertex of X_i has at most k-1
/// out-neighbours (in-neighbours for `in`) in X_{i+1} u ... u X_n.
struct OrderableWitness {
    OrderDirection direction = OrderDirection::out;
    std::size_t h = 0;
    std::size_t k = 0;
    std::vector<VertexList> parts;
    std::vector<Coloring> colorings;

    VertexList ground_set() const;
};

std::optional<std::string> orderable_problem(const Digraph& g, const OrderableWitness& w);

struct RobustTriple {
    std::size_t h = 0;
    std::size_t k = 0;
    OrderableWitness p;  // out-orderable
    OrderableWitness q;  // in-orderable
    VertexList r;        // G[R] is (h,k)-robust
    bool verified = false;
};

struct RobustnessVerdict {
    bool robust = true;
    VertexList violating;  // first violating Z in size-then-lexicographic order
};

/// (h,k)-robust: every nonempty Z with chi(Z) <= h has a vertex with at
/// least k out-neighbours and k in-neighbours outside Z.
RobustnessVerdict is_robust(const Digraph& g, std::size_t h, std::size_t k, const Budget& budget = {});

/// Peels violating sets: X_1 = vertices of Z short of k out-neighbours
/// outside Z goes to the out-orderable side, Z \ X_1 to the in-orderable
/// side, and the robust remainder is R.
RobustTriple robust_decomposition(const Digraph& g, std::size_t h, std::size_t k, const Budget& budget = {});

struct CliqueFamily {
    std::vector<VertexList> cliques;  // pairwise disjoint m-cliques, maximal
    bool reached_target = false;
    bool exact = false;  // false: greedy with restarts
};

CliqueFamily disjoint_clique_family(const Digraph& g, const VertexList& within, std::size_t m, std::size_t target,
                                    const Budget& budget = {});

/// Some vertex v has `n` disjoint m-cliques among both its out- and its
/// in-neighbours, so the partition cannot be built as stated.
struct SourceSinkFailure {
    Vertex v = 0;
    std::vector<VertexList> out_family;
    std::vector<VertexList> in_family;
    VertexList failing;  // every such vertex
};

using SourceSinkOutcome = std::variant<PartitionCertificate, SourceSinkFailure>;

/// Partition into at most 4nm sets, each with no (m+1)-clique having a
/// source, or none having a sink.
SourceSinkOutcome source_sink_partition(const Digraph& g, std::size_t k, std::size_t m, std::size_t n,
                                        const Budget& budget = {});

/// Splits an (h,k)-orderable witness into at most hk acyclic sets.
PartitionCertificate acyclic_partition(const Digraph& g, const OrderableWitness& witness, const Budget& budget = {});

struct UserobustVerdict {
    bool spread = false;
    bool degree_condition = false;
    bool hypothesis = false;
    bool conclusion = false;
    bool implication = true;
    VertexList violating;  // violating set found by the robustness check
};

UserobustVerdict check_userobust_instance(const Digraph& g, const VertexList& x, std::size_t lambda, std::size_t tau,
                                          const Budget& budget = {});

struct TraceEntry {
    std::string handler;
    VertexList vertices;
    std::size_t kappa = 0;
    std::size_t depth = 0;
    bool leaf = false;
    std::uint32_t color_offset = 0;
    std::uint32_t colors = 0;
    bool fallback = false;
    std::string note;
};

struct ColoringReport {
    Coloring coloring;
    std::vector<TraceEntry> trace;
    std::uint32_t proof_colors = 0;
    std::uint32_t fallback_colors = 0;
    bool verified = false;
};

/// Leaves partition the vertex set and use disjoint palettes that match
/// the colouring.
std::optional<std::string> trace_problem(const Digraph& g, const ColoringReport& report);

/// Colours an acyclic digraph by repeated source/sink partitions that drop
/// the clique bound by one per level.
ColoringReport color_acyclic_spread(const Digraph& g, const ParamPack& params);

/// Robust partition, acyclic colouring of the orderable sides, and
/// source/sink partitions of the robust part with recursion on the clique
/// bound. Falls back to the exact solver wherever a step fails at the
/// supplied parameters.
ColoringReport color_spread(const Digraph& g, const ParamPack& params);

}  // namespace orient
