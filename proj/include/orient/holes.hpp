#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orient/budget.hpp"
#include "orient/digraph.hpp"
#include "orient/patterns.hpp"

namespace orient {

/// directed: every cycle vertex has out-degree 1 in the cycle.
/// alternating: every cycle vertex has out-degree 0 or 2 (even length).
/// disoriented: anything else.
enum class HoleClass { directed, alternating, disoriented };

std::string_view to_string(HoleClass c);
HoleClass hole_class_from_string(std::string_view s);

struct HoleRecord {
    VertexList cycle;  // canonical: starts at its smallest vertex, then its smaller neighbour
    HoleClass cls = HoleClass::directed;
};

/// Rotation starting at the smallest vertex, read in the direction of its
/// smaller cycle neighbour.
VertexList canonical_cycle(VertexList cycle);

bool is_induced_cycle(const Digraph& g, const VertexList& cycle);

/// Every hole (induced underlying cycle, length >= 4) with length in
/// [min_len, max_len], once each, sorted by canonical cycle.
std::vector<HoleRecord> enumerate_holes(const Digraph& g, std::size_t min_len = 4,
                                        std::size_t max_len = static_cast<std::size_t>(-1),
                                        const Budget& budget = {});

HoleClass classify_hole(const Digraph& g, const VertexList& cycle);

/// Four consecutive hole vertices inducing a->b, c->b, d->c: the far end of
/// the maximal directed path grown from the lexicographically least
/// directed 2-path on the hole. Needs a disoriented hole of length >= 5.
Occurrence extract_flh_from_hole(const Digraph& g, const HoleRecord& hole);

struct LayerProfile {
    Vertex root = 0;
    std::size_t kappa = 0;
    std::vector<VertexList> layers;
    std::vector<std::size_t> chi;          // chi[r] = chromatic number of layer r
    std::size_t tau_hat = 0;               // max chi over induced subsets with clique number < kappa
    std::vector<bool> inequality_holds;    // entry r-1: chi[r] <= 3 * tau_hat * chi[r-1]
};

/// Per-layer chromatic profile around `root`; requires clique number <= kappa.
LayerProfile layer_chromatic_profile(const Digraph& g, Vertex root, std::size_t kappa, const Budget& budget = {});

}  // namespace orient
