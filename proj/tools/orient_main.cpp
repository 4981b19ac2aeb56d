// orient: generate, analyze, decompose and colour oriented graphs, and run
// the verification suites.
//
// Exit codes: 0 ok, 1 expected absence violated or suite failed, 2 input
// error, 3 budget exceeded, 4 internal verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orient/certificate.hpp"
#include "orient/constructions.hpp"
#include "orient/decompositions.hpp"
#include "orient/holes.hpp"
#include "orient/patterns.hpp"
#include "orient/solvers.hpp"
#include "orient/verify.hpp"

using namespace orient;

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

struct Options {
    std::string output;
    std::string input;

    std::size_t n = 0, m = 0, s = 0, t = 0;
    double p = 0.5;
    std::uint64_t seed = 1;

    bool chi = false, omega = false, holes = false, rich = false, perfect = false, expect_absent = false;
    std::string pattern;
    std::size_t limit = kNoLimit;
    std::size_t min_len = 4, max_len = static_cast<std::size_t>(-1);
    std::optional<std::size_t> spread;
    std::size_t k = 1;

    std::string theorem;
    std::size_t h = 1, part_n = 3;
    std::string direction = "out";

    std::optional<std::size_t> kappa;
    std::size_t lambda = 1, tau = 1;
    std::optional<std::size_t> k1;
    bool acyclic = false;

    std::string suite;
    std::size_t samples = 0, exhaustive_n = 0;
    unsigned threads = 0;

    bool dot = false;
};

Budget budget_from_env()
{
    Budget b;
    if (const char* v = std::getenv("ORIENT_NODE_BUDGET")) {
        try {
            b.node_limit = std::stoull(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("ORIENT_NODE_BUDGET is not a number: ") + v);
        }
    }
    return b;
}

void emit(const Options& o, const std::string& text)
{
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + o.output);
    out << text;
}

void emit(const Options& o, const Json& j)
{
    emit(o, j.dump(2) + "\n");
}

Digraph load(const std::string& path)
{
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return parse_digraph(buf.str());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read " + path);
    buf << in.rdbuf();
    return parse_digraph(buf.str());
}

int run_gen(const std::string& kind, const Options& o)
{
    Digraph g;
    if (kind == "shift")
        g = shift_digraph(o.n);
    else if (kind == "cyclic")
        g = cyclic_tournament(o.m);
    else if (kind == "random") {
        if (o.p < 0 || o.p > 1)
            throw std::invalid_argument("--p must lie in [0, 1]");
        g = random_oriented(o.n, o.p, o.seed);
    } else if (kind == "tournament")
        g = random_tournament(o.n, o.seed);
    else
        g = oriented_star_pattern(o.s, o.t);
    emit(o, serialize_digraph(g));
    return kOk;
}

int run_analyze(const Options& o, const Budget& budget)
{
    const Digraph g = load(o.input);
    Json j;
    bool found = false;
    int chosen = o.chi + o.omega + !o.pattern.empty() + o.holes + o.spread.has_value() + o.rich + o.perfect;
    if (chosen != 1)
        throw std::invalid_argument("choose exactly one of --chi, --omega, --pattern, --holes, --spread, --rich, --perfect");
    if (o.chi) {
        auto r = chromatic_number(g, budget);
        j = {{"analysis", "chi"}, {"chi", r.count}, {"coloring", r.coloring.colors}};
    } else if (o.omega) {
        auto r = clique_number(g, budget);
        j = {{"analysis", "omega"}, {"omega", r.size}, {"clique", r.vertices}};
    } else if (!o.pattern.empty()) {
        auto occurrences = find_induced(g, parse_pattern(o.pattern), o.limit, budget);
        Json hosts = Json::array();
        for (const auto& occ : occurrences)
            hosts.push_back(occ.host);
        j = {{"analysis", "pattern"}, {"pattern", o.pattern}, {"count", occurrences.size()}, {"occurrences", hosts}};
        found = !occurrences.empty();
    } else if (o.holes) {
        auto holes = enumerate_holes(g, o.min_len, o.max_len, budget);
        j = {{"analysis", "holes"}, {"holes", to_json(holes)}};
        found = !holes.empty();
    } else if (o.spread) {
        auto r = is_lambda_spread(g, *o.spread, budget);
        Json w = nullptr;
        if (r.witness)
            w = {{"v", r.witness->v}, {"a", r.witness->a}, {"b", r.witness->b}};
        j = {{"analysis", "spread"}, {"lambda", r.lambda}, {"spread", r.spread}, {"witness", w}};
        found = !r.spread;
    } else if (o.rich) {
        auto r = find_rich_vertex(g, o.k, o.m ? o.m : 1, budget);
        Json w = nullptr;
        if (r)
            w = {{"v", r->v}, {"out_cliques", r->out_cliques}, {"in_cliques", r->in_cliques}};
        j = {{"analysis", "rich"}, {"k", o.k}, {"m", o.m ? o.m : 1}, {"rich", r.has_value()}, {"witness", w}};
        found = r.has_value();
    } else {
        auto r = is_perfect_underlying(g, budget);
        j = {{"analysis", "perfect"}, {"perfect", r.perfect}, {"witness", r.witness}};
        found = !r.perfect;
    }
    emit(o, j);
    return o.expect_absent && found ? kFound : kOk;
}

int run_decompose(const Options& o, const Budget& budget)
{
    const Digraph g = load(o.input);
    if (o.theorem == "outnbrs") {
        auto outcome = source_sink_partition(g, o.k, o.m ? o.m : 1, o.part_n, budget);
        if (auto* cert = std::get_if<PartitionCertificate>(&outcome)) {
            emit(o, to_json(*cert));
            return kOk;
        }
        emit(o, to_json(std::get<SourceSinkFailure>(outcome)));
        return kFound;
    }
    auto triple = robust_decomposition(g, o.h, o.k, budget);
    if (o.theorem == "robustpartition") {
        emit(o, to_json(robust_certificate(triple)));
        return kOk;
    }
    const auto& witness = o.direction == "in" ? triple.q : triple.p;
    emit(o, to_json(acyclic_partition(g, witness, budget)));
    return kOk;
}

int run_color(const Options& o, const Budget& budget)
{
    const Digraph g = load(o.input);
    ParamPack params;
    params.kappa = o.kappa ? *o.kappa : std::max<std::size_t>(1, clique_number(g, budget).size);
    params.lambda = o.lambda;
    params.tau = o.tau;
    params.k = o.k;
    params.n = o.part_n;
    params.k1 = o.k1;
    params.budget = budget;
    auto report = o.acyclic ? color_acyclic_spread(g, params) : color_spread(g, params);
    emit(o, to_json(report));
    return kOk;
}

int run_verify(const Options& o, const Budget& budget)
{
    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.max_n = o.n;
    cfg.exhaustive_n = o.exhaustive_n;
    cfg.threads = o.threads;
    cfg.budget = budget;
    auto report = run_suite(o.suite, cfg);
    emit(o, to_json(report));
    if (report.budget_exceeded)
        return kBudget;
    return report.passed() ? kOk : kFound;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Oriented graph toolkit: generators, pattern and hole detection, certified partitions, colouring."};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Write a generated digraph as an edge-list");
    gen->require_subcommand(1);
    auto* g_shift = gen->add_subcommand("shift", "Shift digraph on the 2-subsets of {1..n}");
    g_shift->add_option("--n", o.n)->required();
    auto* g_cyclic = gen->add_subcommand("cyclic", "Cyclic tournament on 2m+1 vertices");
    g_cyclic->add_option("--m", o.m)->required();
    auto* g_random = gen->add_subcommand("random", "Random oriented graph");
    g_random->add_option("--n", o.n)->required();
    g_random->add_option("--p", o.p)->required();
    g_random->add_option("--seed", o.seed)->required();
    auto* g_tour = gen->add_subcommand("tournament", "Random tournament");
    g_tour->add_option("--n", o.n)->required();
    g_tour->add_option("--seed", o.seed)->required();
    auto* g_star = gen->add_subcommand("star", "Oriented star with s out-leaves and t in-leaves");
    g_star->add_option("--s", o.s)->required();
    g_star->add_option("--t", o.t)->required();
    for (auto* sub : {g_shift, g_cyclic, g_random, g_tour, g_star})
        sub->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "Analyze an edge-list file; prints JSON");
    analyze->add_option("file", o.input)->required();
    analyze->add_flag("--chi", o.chi, "Exact chromatic number");
    analyze->add_flag("--omega", o.omega, "Clique number");
    analyze->add_option("--pattern", o.pattern, "Induced pattern: p4:frr, star:s,t, tt");
    analyze->add_option("--limit", o.limit, "Stop after this many occurrences");
    analyze->add_flag("--holes", o.holes, "Enumerate holes");
    analyze->add_option("--min-len", o.min_len);
    analyze->add_option("--max-len", o.max_len);
    analyze->add_option("--spread", o.spread, "Check lambda-spread");
    analyze->add_flag("--rich", o.rich, "Search for a (k,m)-rich vertex");
    analyze->add_option("--k", o.k);
    analyze->add_option("--m", o.m);
    analyze->add_flag("--perfect", o.perfect, "Perfection of the underlying graph");
    analyze->add_flag("--expect-absent", o.expect_absent, "Exit 1 when an occurrence or witness is found");
    analyze->add_option("-o,--output", o.output);

    auto* decompose = app.add_subcommand("decompose", "Certified partition; prints a JSON certificate");
    decompose->set_help_flag("--help", "Print this help message and exit");
    decompose->add_option("file", o.input)->required();
    decompose->add_option("--theorem", o.theorem)
        ->required()
        ->check(CLI::IsMember({"outnbrs", "robustpartition", "outorderable"}));
    decompose->add_option("--k", o.k);
    decompose->add_option("--m", o.m);
    decompose->add_option("--n", o.part_n, "Disjoint-clique threshold");
    decompose->add_option("--h", o.h);
    decompose->add_option("--direction", o.direction, "Orderable side for outorderable")->check(CLI::IsMember({"out", "in"}));
    decompose->add_option("-o,--output", o.output);

    auto* color = app.add_subcommand("color", "Colour a spread digraph through the partition pipeline");
    color->add_option("file", o.input)->required();
    color->add_option("--kappa", o.kappa, "Clique bound (default: clique number)");
    color->add_option("--lambda", o.lambda);
    color->add_option("--tau", o.tau);
    color->add_option("--k", o.k);
    color->add_option("--n", o.part_n);
    color->add_option("--k1", o.k1);
    color->add_flag("--acyclic", o.acyclic, "Use the acyclic pipeline");
    color->add_option("-o,--output", o.output);

    auto* verify = app.add_subcommand("verify", "Run a verification suite; prints a JSON report");
    verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", o.seed);
    verify->add_option("--samples", o.samples);
    verify->add_option("--n", o.n, "Largest vertex count");
    verify->add_option("--exhaustive-n", o.exhaustive_n);
    verify->add_option("--threads", o.threads);
    verify->add_option("-o,--output", o.output);

    auto* exp = app.add_subcommand("export", "Export an edge-list file");
    exp->add_option("file", o.input)->required();
    exp->add_flag("--dot", o.dot)->required();
    exp->add_option("-o,--output", o.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const Budget budget = budget_from_env();
        if (gen->parsed()) {
            for (auto* sub : gen->get_subcommands())
                return run_gen(sub->get_name(), o);
        }
        if (analyze->parsed())
            return run_analyze(o, budget);
        if (decompose->parsed())
            return run_decompose(o, budget);
        if (color->parsed())
            return run_color(o, budget);
        if (verify->parsed())
            return run_verify(o, budget);
        emit(o, to_dot(load(o.input)));
        return kOk;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kInternal;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
