#pragma once

// Seeded property suites over generated digraphs. Each suite checks a
// structural claim on every instance and reports reproducible failures.

#include <cstdint>
#include <string>
#include <vector>

#include "orient/budget.hpp"
#include "orient/certificate.hpp"
#include "orient/digraph.hpp"

namespace orient {

struct SuiteConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 0;       // 0: suite default
    std::size_t max_n = 0;         // 0: suite default
    std::size_t exhaustive_n = 0;  // 0: suite default
    unsigned threads = 0;          // 0: hardware concurrency
    Budget budget;
};

struct FailureRecord {
    std::string input;  // edge-list of the offending digraph
    std::uint64_t seed = 0;
    std::string expected;
    std::string got;

    friend auto operator<=>(const FailureRecord&, const FailureRecord&) = default;
};

struct VerificationReport {
    std::string suite;
    std::size_t instances_run = 0;
    std::vector<FailureRecord> failures;  // sorted
    std::vector<std::string> notes;
    bool budget_exceeded = false;
    double runtime_seconds = 0;

    bool passed() const noexcept { return failures.empty() && !budget_exceeded; }
};

const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite name.
VerificationReport run_suite(const std::string& suite, const SuiteConfig& config);

Json to_json(const VerificationReport& report);

/// Simple graphs on n vertices up to isomorphism, each as a digraph with
/// every edge directed from the smaller to the larger id.
std::vector<Digraph> graph_classes(std::size_t n);

/// Brute-force cyclicity test for a tournament on 2m+1 vertices.
bool is_cyclic_by_search(const Digraph& t);

}  // namespace orient
