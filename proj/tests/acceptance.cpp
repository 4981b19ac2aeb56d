// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: acceptance [path-to-orient-cli]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "orient/certificate.hpp"
#include "orient/constructions.hpp"
#include "orient/decompositions.hpp"
#include "orient/holes.hpp"
#include "orient/verify.hpp"

using namespace orient;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome suites(const std::vector<std::string>& names, SuiteConfig config = {})
{
    Outcome out{true, ""};
    for (const auto& name : names) {
        auto r = run_suite(name, config);
        std::ostringstream os;
        os << (out.detail.empty() ? "" : "; ") << name << ": " << r.instances_run << " instances, "
           << r.failures.size() << " failures";
        if (r.budget_exceeded)
            os << ", budget exceeded";
        for (const auto& note : r.notes)
            os << ", " << note;
        out.detail += os.str();
        out.pass = out.pass && r.passed();
    }
    return out;
}

std::string library_outputs(std::uint64_t seed)
{
    std::string s;
    Digraph g = random_oriented(10, 0.5, seed);
    s += serialize_digraph(g);
    s += serialize_digraph(random_tournament(9, seed));
    s += serialize_digraph(random_acyclic(10, 0.5, seed));
    s += serialize_digraph(shift_digraph(3 + seed));
    s += serialize_digraph(cyclic_tournament(seed));
    s += to_json(enumerate_holes(g)).dump();
    for (std::size_t m = 1; m <= 2; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            auto outcome = source_sink_partition(g, 1, m, n);
            s += std::visit([](const auto& x) { return to_json(x).dump(); }, outcome);
        }
    auto triple = robust_decomposition(g, 2, 2);
    s += to_json(robust_certificate(triple)).dump();
    s += to_json(acyclic_partition(g, triple.p)).dump();
    ParamPack p;
    p.kappa = 2 * seed + 1;
    s += to_json(color_spread(cyclic_tournament(seed), p)).dump();
    return s;
}

std::string report_without_runtime(const std::string& suite, unsigned threads)
{
    SuiteConfig c;
    c.seed = 7;
    c.samples = 50;
    c.threads = threads;
    Json j = to_json(run_suite(suite, c));
    j.erase("runtime_seconds");
    return j.dump();
}

std::string capture(const std::string& command)
{
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe)
        return "<popen failed>";
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe.get()))
        out.append(buf, got);
    return out;
}

Outcome determinism(const std::string& cli)
{
    std::size_t checks = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed, ++checks)
        if (library_outputs(seed) != library_outputs(seed))
            return {false, "library output differs for seed " + std::to_string(seed)};
    for (const auto& suite : {"chvatal", "outnbrs", "pipeline"}) {
        ++checks;
        if (report_without_runtime(suite, 1) != report_without_runtime(suite, 4))
            return {false, std::string(suite) + " report depends on the thread count"};
    }
    if (!cli.empty()) {
        const std::string tmp = "orient_acceptance_input.dg";
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const std::string s = std::to_string(seed);
            std::vector<std::string> commands{
                "gen random --n 10 --p 0.5 --seed " + s,
                "gen tournament --n 9 --seed " + s,
                "gen shift --n " + std::to_string(3 + seed),
                "gen random --n 10 --p 0.5 --seed " + s + " -o " + tmp + " && '" + cli + "' decompose " + tmp +
                    " --theorem outnbrs --k 1 --m 2 --n 3",
                "gen random --n 10 --p 0.5 --seed " + s + " -o " + tmp + " && '" + cli + "' decompose " + tmp +
                    " --theorem robustpartition --h 2 --k 2",
                "gen random --n 10 --p 0.5 --seed " + s + " -o " + tmp + " && '" + cli + "' decompose " + tmp +
                    " --theorem outorderable --h 2 --k 2",
                "gen cyclic --m " + s + " -o " + tmp + " && '" + cli + "' color " + tmp + " --kappa " +
                    std::to_string(2 * seed + 1),
            };
            for (const auto& c : commands) {
                ++checks;
                std::string full = "'" + cli + "' " + c;
                std::string a = capture(full), b = capture(full);
                if (a.empty() || a != b)
                    return {false, "CLI output differs: " + c};
            }
        }
        std::remove(tmp.c_str());
    }
    return {true, std::to_string(checks) + " byte-identical repeat checks" +
                      (cli.empty() ? " (library only)" : " (library and CLI)")};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    SuiteConfig chvatal;
    chvatal.seed = 7;

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"FLH extraction from disoriented long holes", [] { return suites({"flh-extraction"}); }},
        {"Chvatal: no induced FLH implies perfect", [&] { return suites({"chvatal"}, chvatal); }},
        {"shift family clique number, frf-freeness and chromatic number", [] { return suites({"shift-family"}); }},
        {"cyclic recognizer dichotomy", [] { return suites({"cyclic-recognizer"}); }},
        {"partition certificates re-verify",
         [] { return suites({"outnbrs", "outorderable", "robustpartition"}); }},
        {"userobust implication", [] { return suites({"userobust"}); }},
        {"layer inequality", [] { return suites({"layer-inequality"}); }},
        {"pipeline soundness", [] { return suites({"pipeline"}); }},
        {"determinism", [&] { return determinism(cli); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("%s %zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
