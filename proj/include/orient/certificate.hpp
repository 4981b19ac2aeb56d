#pragma once

// JSON forms of certificates, colourings and holes, and a re-checker that
// validates a serialized certificate with its own brute-force oracles.

#include <string>
#include <vector>

#include <json.hpp>

#include "orient/decompositions.hpp"
#include "orient/holes.hpp"

namespace orient {

using Json = nlohmann::ordered_json;

Json to_json(const PartitionCertificate& cert);
PartitionCertificate certificate_from_json(const Json& j);

/// Ordered out-orderable parts, then in-orderable parts, then R as one
/// robust part, with params h and k.
PartitionCertificate robust_certificate(const RobustTriple& triple);

Json to_json(const ColoringReport& report);
Json to_json(const std::vector<HoleRecord>& holes);
Json to_json(const Occurrence& occ);
Json to_json(const SourceSinkFailure& failure);

/// Every problem found; empty means the certificate holds for g.
std::vector<std::string> recheck_certificate(const Digraph& g, const Json& cert);

/// Brute-force oracles used by the re-checker.
namespace oracle {
bool has_directed_cycle(const Digraph& g, const VertexList& vertices);
bool colorable(const Digraph& g, const VertexList& vertices, std::size_t colors);
bool has_apex_clique(const Digraph& g, const VertexList& vertices, std::size_t size, bool source);
/// Subset sweep over all nonempty Z of the vertex set.
bool robust(const Digraph& g, const VertexList& vertices, std::size_t h, std::size_t k);
}  // namespace oracle

}  // namespace orient
