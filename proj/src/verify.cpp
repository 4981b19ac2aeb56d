#include "orient/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "orient/constructions.hpp"
#include "orient/decompositions.hpp"
#include "orient/holes.hpp"
#include "orient/patterns.hpp"
#include "orient/solvers.hpp"

namespace orient {

namespace {

struct Instance {
    bool accepted = true;
    std::vector<FailureRecord> failures;
    std::map<std::string, std::size_t> tallies;
    bool budget = false;
    std::string budget_note;
};

class Runner {
public:
    Runner(const SuiteConfig& config, VerificationReport& report) : config_(config), report_(report)
    {
        threads_ = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    }

    std::uint64_t seed_for(std::size_t index) const { return counter_hash(config_.seed, index); }

    // Evaluates f on every index; results are consumed in index order.
    void run_all(std::size_t count, const std::function<Instance(std::size_t)>& f)
    {
        auto results = evaluate(0, count, f);
        for (auto& r : results)
            consume(std::move(r));
    }

    // Evaluates indices in chunks until `wanted` instances were accepted.
    void run_until(std::size_t wanted, std::size_t max_attempts, const std::function<Instance(std::size_t)>& f)
    {
        std::size_t accepted = 0, next = 0, rejected = 0;
        while (accepted < wanted && next < max_attempts && !report_.budget_exceeded) {
            std::size_t chunk = std::min<std::size_t>(std::max<std::size_t>(64, wanted), max_attempts - next);
            auto results = evaluate(next, next + chunk, f);
            next += chunk;
            for (auto& r : results) {
                if (accepted == wanted)
                    break;
                if (r.accepted)
                    ++accepted;
                else
                    ++rejected;
                consume(std::move(r));
            }
        }
        tallies_["filtered out"] += rejected;
        if (accepted < wanted)
            report_.notes.push_back("only " + std::to_string(accepted) + " of " + std::to_string(wanted) +
                                    " instances passed the filter");
    }

    void tally(const std::string& name, std::size_t amount = 1) { tallies_[name] += amount; }

    void finish()
    {
        for (const auto& [name, count] : tallies_)
            report_.notes.push_back(name + ": " + std::to_string(count));
        std::sort(report_.failures.begin(), report_.failures.end());
    }

private:
    std::vector<Instance> evaluate(std::size_t begin, std::size_t end, const std::function<Instance(std::size_t)>& f)
    {
        std::vector<Instance> results(end - begin);
        std::atomic<std::size_t> cursor{begin};
        auto work = [&] {
            for (std::size_t i = cursor++; i < end; i = cursor++) {
                Instance& out = results[i - begin];
                try {
                    out = f(i);
                } catch (const BudgetExceeded& e) {
                    out = Instance{};
                    out.budget = true;
                    out.budget_note = "instance " + std::to_string(i) + ": " + e.what();
                } catch (const std::exception& e) {
                    out = Instance{};
                    out.failures.push_back({"instance " + std::to_string(i), seed_for(i), "no exception", e.what()});
                }
            }
        };
        std::size_t workers = std::min<std::size_t>(threads_, end - begin);
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < workers; ++t)
                pool.emplace_back(work);
            for (auto& th : pool)
                th.join();
        }
        return results;
    }

    void consume(Instance&& r)
    {
        if (r.budget) {
            report_.budget_exceeded = true;
            report_.notes.push_back(r.budget_note);
            return;
        }
        if (r.accepted)
            ++report_.instances_run;
        for (auto& f : r.failures)
            report_.failures.push_back(std::move(f));
        for (const auto& [name, count] : r.tallies)
            tallies_[name] += count;
    }

    const SuiteConfig& config_;
    VerificationReport& report_;
    unsigned threads_ = 1;
    std::map<std::string, std::size_t> tallies_;
};

std::size_t pick(std::uint64_t seed, std::uint64_t counter, std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(counter_hash(seed, counter) % (hi - lo + 1));
}

double uniform(std::uint64_t seed, std::uint64_t counter, double lo, double hi)
{
    return lo + (hi - lo) * counter_unit(seed, counter);
}

std::size_t or_default(std::size_t value, std::size_t fallback)
{
    return value ? value : fallback;
}

std::string describe(const VertexList& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// ---- flh-extraction

void check_disoriented_holes(const Digraph& g, const std::vector<HoleRecord>& holes, std::uint64_t seed,
                             Instance& out)
{
    bool any = false;
    for (const auto& hole : holes) {
        HoleRecord h{hole.cycle, classify_hole(g, hole.cycle)};
        if (h.cycle.size() < 5 || h.cls != HoleClass::disoriented)
            continue;
        any = true;
        ++out.tallies["disoriented long holes"];
        try {
            Occurrence occ = extract_flh_from_hole(g, h);
            bool on_hole = std::all_of(occ.host.begin(), occ.host.end(), [&](Vertex v) {
                return std::find(h.cycle.begin(), h.cycle.end(), v) != h.cycle.end();
            });
            auto sub = induced_subdigraph(g, occ.host);
            VertexList local;
            for (Vertex v : occ.host)
                local.push_back(sub.local(v));
            auto matches = find_induced(sub.graph, flh_pattern());
            bool matched = std::any_of(matches.begin(), matches.end(), [&](const Occurrence& m) { return m.host == local; });
            if (!on_hole || !matched || !is_induced_embedding(g, flh_pattern(), occ.host))
                out.failures.push_back({serialize_digraph(g), seed, "occurrence on hole " + describe(h.cycle),
                                        "invalid occurrence " + describe(occ.host)});
        } catch (const std::exception& e) {
            out.failures.push_back({serialize_digraph(g), seed, "occurrence on hole " + describe(h.cycle), e.what()});
        }
    }
    if (any && !find_flh(g))
        out.failures.push_back({serialize_digraph(g), seed, "find_flh nonempty", "no occurrence"});
}

void suite_flh(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t exhaustive_n = or_default(cfg.exhaustive_n, 7);
    const std::size_t samples = or_default(cfg.samples, 10000);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 10), 5);

    // Hole classes and extraction depend only on the orientation of the hole
    // edges, so every orientation of the long-hole edges of each isomorphism
    // class covers all oriented graphs on that many vertices.
    std::vector<Digraph> classes;
    for (std::size_t n = 5; n <= exhaustive_n; ++n)
        for (auto& g : graph_classes(n))
            classes.push_back(std::move(g));
    run.tally("graph classes", classes.size());
    run.run_all(classes.size(), [&](std::size_t i) {
        Instance out;
        const Digraph& base = classes[i];
        auto holes = enumerate_holes(base, 5, base.size(), cfg.budget);
        if (holes.empty())
            return out;
        std::set<Edge> hole_edges;
        for (const auto& h : holes)
            for (std::size_t t = 0; t < h.cycle.size(); ++t) {
                Vertex a = h.cycle[t], b = h.cycle[(t + 1) % h.cycle.size()];
                hole_edges.insert({std::min(a, b), std::max(a, b)});
            }
        std::vector<Edge> varying(hole_edges.begin(), hole_edges.end());
        std::vector<Edge> fixed;
        for (const auto& e : base.edges())
            if (!hole_edges.count(e))
                fixed.push_back(e);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << varying.size()); ++mask) {
            std::vector<Edge> edges = fixed;
            for (std::size_t b = 0; b < varying.size(); ++b)
                edges.push_back((mask >> b) & 1 ? Edge{varying[b].head, varying[b].tail} : varying[b]);
            Digraph g(base.size(), edges);
            check_disoriented_holes(g, holes, mask, out);
            ++out.tallies["exhaustive orientations"];
        }
        return out;
    });

    run.run_all(samples, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(classes.size() + i);
        Digraph g = random_oriented(pick(seed, 1, 5, max_n), uniform(seed, 2, 0.2, 0.7), seed);
        check_disoriented_holes(g, enumerate_holes(g, 5, g.size(), cfg.budget), seed, out);
        ++out.tallies["random digraphs"];
        return out;
    });
}

// ---- chvatal

void suite_chvatal(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t samples = or_default(cfg.samples, 500);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 9), 4);
    run.run_until(samples, samples * 200, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(i);
        Digraph g = random_acyclic(pick(seed, 1, 4, max_n), uniform(seed, 2, 0.15, 0.7), seed);
        if (find_flh(g)) {
            out.accepted = false;
            return out;
        }
        auto verdict = is_perfect_underlying(g, cfg.budget);
        auto chi = chromatic_number(g, cfg.budget).count;
        auto omega = clique_number(g, cfg.budget).size;
        if (!verdict.perfect)
            out.failures.push_back({serialize_digraph(g), seed, "perfect underlying graph",
                                    "imperfect at " + describe(verdict.witness)});
        if (chi != omega)
            out.failures.push_back({serialize_digraph(g), seed, "chi = omega = " + std::to_string(omega),
                                    "chi = " + std::to_string(chi)});
        out.tallies["edges"] += g.edges().size();
        return out;
    });
}

// ---- shift-family

void suite_shift(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 8), 3);
    run.run_all(max_n - 2, [&](std::size_t i) {
        Instance out;
        const std::size_t n = i + 3;
        Digraph g = shift_digraph(n);
        std::size_t log2 = 0;
        while ((std::size_t{1} << log2) < n)
            ++log2;
        auto omega = clique_number(g, cfg.budget).size;
        auto chi = chromatic_number(g, cfg.budget).count;
        bool frf = contains_induced(g, parse_pattern("p4:frf"), cfg.budget);
        if (omega != 2)
            out.failures.push_back({serialize_digraph(g), n, "omega = 2", "omega = " + std::to_string(omega)});
        if (frf)
            out.failures.push_back({serialize_digraph(g), n, "no induced p4:frf", "occurrence found"});
        if (chi != log2)
            out.failures.push_back({serialize_digraph(g), n, "chi = " + std::to_string(log2),
                                    "chi = " + std::to_string(chi)});
        out.tallies["shift(" + std::to_string(n) + ") chi=" + std::to_string(chi)] = 1;
        return out;
    });
}

// ---- cyclic-recognizer

bool has_alternating_four_cycle(const Digraph& t, Vertex v)
{
    const std::size_t n = t.size();
    for (Vertex p = 0; p < n; ++p)
        for (Vertex q = 0; q < n; ++q)
            for (Vertex r = 0; r < n; ++r)
                for (Vertex s = 0; s < n; ++s) {
                    if (!t.has_edge(v, p) || !t.has_edge(v, r) || !t.has_edge(q, v) || !t.has_edge(s, v))
                        continue;
                    if (t.has_edge(p, q) && t.has_edge(q, r) && t.has_edge(r, s) && t.has_edge(s, p))
                        return true;
                }
    return false;
}

void suite_cyclic(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t exhaustive_n = or_default(cfg.exhaustive_n, 7);
    std::vector<Digraph> tournaments;
    for (std::size_t n = 3; n <= exhaustive_n; n += 2)
        for_each_regular_tournament(n, [&](const Digraph& t) { tournaments.push_back(t); });
    run.run_all(tournaments.size(), [&](std::size_t i) {
        Instance out;
        const Digraph& t = tournaments[i];
        const bool cyclic = is_cyclic_by_search(t);
        ++out.tallies["regular tournaments on " + std::to_string(t.size()) + " vertices"];
        if (cyclic)
            ++out.tallies["cyclic tournaments on " + std::to_string(t.size()) + " vertices"];
        for (Vertex v = 0; v < t.size(); ++v) {
            auto outcome = recognize_cyclic(t, v);
            bool has_cycle = has_alternating_four_cycle(t, v);
            std::string got;
            bool ok = true;
            if (auto* ord = std::get_if<TournamentOrdering>(&outcome)) {
                got = "ordering " + describe(ord->order);
                ok = cyclic && !has_cycle && is_cyclic_ordering(t, ord->order) && ord->order.front() == v;
            } else {
                const auto& c = std::get<AlternatingFourCycle>(outcome);
                got = "4-cycle " + describe({c.p, c.q, c.r, c.s});
                ok = !cyclic && has_cycle && is_alternating_four_cycle(t, v, c);
            }
            if (!ok)
                out.failures.push_back({serialize_digraph(t), v,
                                        cyclic ? "validated ordering from " + std::to_string(v)
                                               : "validated alternating 4-cycle at " + std::to_string(v),
                                        got});
        }
        return out;
    });
}

// ---- partition certificates

std::string params_text(const std::string& tag, std::initializer_list<std::pair<const char*, std::size_t>> params)
{
    std::string s = tag;
    for (const auto& [name, value] : params)
        s += std::string(" ") + name + "=" + std::to_string(value);
    return s;
}

void recheck_into(const Digraph& g, const PartitionCertificate& cert, std::uint64_t seed, const std::string& what,
                  Instance& out)
{
    Json reparsed = Json::parse(to_json(cert).dump());
    auto problems = recheck_certificate(g, reparsed);
    ++out.tallies["certificates rechecked"];
    for (const auto& p : problems)
        out.failures.push_back({serialize_digraph(g), seed, what + " re-verifies", p});
}

bool valid_family(const Digraph& g, const std::vector<VertexList>& family, const Bits& inside, std::size_t m,
                  std::size_t target)
{
    Bits used(g.size());
    for (const auto& c : family) {
        if (c.size() != m || !is_clique(g, c))
            return false;
        for (Vertex v : c) {
            if (!inside.test(v) || used.test(v))
                return false;
            used.set(v);
        }
    }
    return family.size() >= target;
}

void suite_outnbrs(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t samples = or_default(cfg.samples, 200);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 10), 4);
    run.run_all(samples, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(i);
        Digraph g = random_oriented(pick(seed, 1, 4, max_n), uniform(seed, 2, 0.2, 0.8), seed);
        for (std::size_t k = 1; k <= 2; ++k)
            for (std::size_t m = 1; m <= 2; ++m)
                for (std::size_t n = 1; n <= 3; ++n) {
                    auto what = params_text("outnbrs", {{"k", k}, {"m", m}, {"n", n}});
                    auto outcome = source_sink_partition(g, k, m, n, cfg.budget);
                    if (auto* cert = std::get_if<PartitionCertificate>(&outcome)) {
                        recheck_into(g, *cert, seed, what, out);
                        continue;
                    }
                    const auto& failure = std::get<SourceSinkFailure>(outcome);
                    ++out.tallies["failure witnesses"];
                    if (!valid_family(g, failure.out_family, g.out(failure.v), m, n) ||
                        !valid_family(g, failure.in_family, g.in(failure.v), m, n))
                        out.failures.push_back({serialize_digraph(g), seed, what + " truthful failure witness",
                                                "invalid clique families at " + std::to_string(failure.v)});
                }
        return out;
    });
}

// Builds an orderable witness back to front: a vertex joins the part under
// construction while it has at most k-1 relevant neighbours in the parts
// already built and the part stays h-colourable.
OrderableWitness synthetic_witness(const Digraph& g, std::size_t h, std::size_t k, OrderDirection dir,
                                   std::uint64_t seed, const Budget& budget)
{
    VertexList order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return std::pair(counter_hash(seed, a), a) < std::pair(counter_hash(seed, b), b);
    });
    Bits later(g.size());
    std::vector<VertexList> reversed_parts;
    while (!order.empty()) {
        VertexList part, rest;
        for (Vertex v : order) {
            const Bits& nbrs = dir == OrderDirection::out ? g.out(v) : g.in(v);
            VertexList trial = part;
            trial.push_back(v);
            if ((nbrs & later).count() + 1 <= k &&
                color_with(induced_subdigraph(g, normalized(trial)).graph, h, budget))
                part = std::move(trial);
            else
                rest.push_back(v);
        }
        if (part.empty())
            break;
        part = normalized(std::move(part));
        for (Vertex v : part)
            later.set(v);
        reversed_parts.push_back(std::move(part));
        order = std::move(rest);
    }
    OrderableWitness w{dir, h, k, {}, {}};
    for (auto it = reversed_parts.rbegin(); it != reversed_parts.rend(); ++it) {
        w.parts.push_back(*it);
        w.colorings.push_back(chromatic_number(induced_subdigraph(g, *it).graph, budget).coloring);
    }
    return w;
}

void suite_outorderable(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t samples = or_default(cfg.samples, 200);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 10), 4);
    run.run_all(samples, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(i);
        Digraph g = random_oriented(pick(seed, 1, 4, max_n), uniform(seed, 2, 0.2, 0.8), seed);
        for (std::size_t h = 1; h <= 2; ++h)
            for (std::size_t k = 1; k <= 2; ++k) {
                std::vector<OrderableWitness> witnesses{
                    synthetic_witness(g, h, k, OrderDirection::out, seed ^ 0x5eed, cfg.budget),
                    synthetic_witness(g, h, k, OrderDirection::in, seed ^ 0xfeed, cfg.budget)};
                auto triple = robust_decomposition(g, h, k, cfg.budget);
                witnesses.push_back(triple.p);
                witnesses.push_back(triple.q);
                for (const auto& w : witnesses) {
                    if (w.parts.empty())
                        continue;
                    auto what = params_text("outorderable", {{"h", h}, {"k", k}});
                    if (auto problem = orderable_problem(g, w)) {
                        out.failures.push_back({serialize_digraph(g), seed, what + " valid witness", *problem});
                        continue;
                    }
                    auto cert = acyclic_partition(g, w, cfg.budget);
                    recheck_into(g, cert, seed, what, out);
                }
            }
        return out;
    });
}

void suite_robust(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t samples = or_default(cfg.samples, 200);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 12), 4);
    run.run_all(samples, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(i);
        Digraph g = random_oriented(pick(seed, 1, 4, max_n), uniform(seed, 2, 0.3, 0.95), seed);
        for (std::size_t h = 1; h <= 2; ++h)
            for (std::size_t k = 1; k <= 2; ++k) {
                auto what = params_text("robustpartition", {{"h", h}, {"k", k}});
                auto triple = robust_decomposition(g, h, k, cfg.budget);
                recheck_into(g, robust_certificate(triple), seed, what, out);
                ++out.tallies[triple.r.empty() ? "empty robust part" : "nonempty robust part"];
                VertexList all(g.size());
                std::iota(all.begin(), all.end(), 0);
                bool robust = is_robust(g, h, k, cfg.budget).robust;
                if (robust != oracle::robust(g, all, h, k))
                    out.failures.push_back({serialize_digraph(g), seed, what + " robustness matches subset sweep",
                                            robust ? "robust" : "not robust"});
            }
        return out;
    });
}

// ---- userobust

VertexList degree_core(const Digraph& g, std::size_t need)
{
    Bits x = full_bits(g.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.size(); ++v)
            if (x.test(v) && ((g.out(v) & x).count() < need || (g.in(v) & x).count() < need)) {
                x.reset(v);
                changed = true;
            }
    }
    return to_list(x);
}

void suite_userobust(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t samples = or_default(cfg.samples, 300);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 12), 7);
    const std::size_t lambda = 1;
    run.run_all(samples, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(i);
        std::size_t n = pick(seed, 1, 7, max_n);
        Digraph g = i % 2 == 0 ? random_tournament(n, seed) : random_oriented(n, uniform(seed, 2, 0.6, 0.95), seed);
        VertexList x = degree_core(g, 2 * lambda * lambda + lambda);
        for (std::size_t tau = 1; tau <= 2; ++tau) {
            auto verdict = check_userobust_instance(g, x, lambda, tau, cfg.budget);
            if (verdict.hypothesis)
                ++out.tallies["hypothesis holds"];
            if (!verdict.implication)
                out.failures.push_back({serialize_digraph(g), seed,
                                        "not (|X|tau, |X|+Lambda)-robust for X = " + describe(x) +
                                            " tau = " + std::to_string(tau),
                                        "robust"});
        }
        return out;
    });
}

// ---- layer-inequality

void suite_layers(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t samples = or_default(cfg.samples, 300);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 9), 4);
    const std::size_t kappa = 2;
    run.run_until(samples, samples * 1000, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(i);
        Digraph g = random_oriented(pick(seed, 1, 4, max_n), uniform(seed, 2, 0.15, 0.5), seed);
        if (clique_number(g, cfg.budget).size > kappa) {
            out.accepted = false;
            return out;
        }
        for (const auto& h : enumerate_holes(g, 5, std::max<std::size_t>(g.size(), 5), cfg.budget))
            if (h.cls == HoleClass::disoriented) {
                out.accepted = false;
                return out;
            }
        for (Vertex z = 0; z < g.size(); ++z) {
            auto profile = layer_chromatic_profile(g, z, kappa, cfg.budget);
            for (std::size_t r = 1; r < profile.chi.size(); ++r) {
                ++out.tallies["layer pairs checked"];
                if (!profile.inequality_holds[r - 1])
                    out.failures.push_back({serialize_digraph(g), seed,
                                            "chi(L" + std::to_string(r) + ") <= 3 * " +
                                                std::to_string(profile.tau_hat) + " * " +
                                                std::to_string(profile.chi[r - 1]) + " at root " + std::to_string(z),
                                            "chi(L" + std::to_string(r) + ") = " + std::to_string(profile.chi[r])});
            }
        }
        return out;
    });
}

// ---- pipeline

void suite_pipeline(Runner& run, const SuiteConfig& cfg)
{
    const std::size_t samples = or_default(cfg.samples, 100);
    const std::size_t max_n = std::max<std::size_t>(or_default(cfg.max_n, 10), 3);
    run.run_until(samples, samples * 200, [&](std::size_t i) {
        Instance out;
        std::uint64_t seed = run.seed_for(i);
        std::size_t n = pick(seed, 1, 3, max_n);
        Digraph g = i % 2 == 0 ? random_tournament(n, seed) : random_oriented(n, uniform(seed, 2, 0.4, 0.95), seed);
        if (!is_lambda_spread(g, 1, cfg.budget).spread) {
            out.accepted = false;
            return out;
        }
        ParamPack params;
        params.kappa = std::max<std::size_t>(1, clique_number(g, cfg.budget).size);
        params.lambda = 1;
        params.budget = cfg.budget;
        auto report = color_spread(g, params);
        auto chi = chromatic_number(g, cfg.budget).count;
        if (!report.verified || !is_proper(g, report.coloring))
            out.failures.push_back({serialize_digraph(g), seed, "proper colouring", "improper colouring"});
        if (auto problem = trace_problem(g, report))
            out.failures.push_back({serialize_digraph(g), seed, "well-formed trace", *problem});
        if (report.coloring.color_count < chi)
            out.failures.push_back({serialize_digraph(g), seed, "at least " + std::to_string(chi) + " colours",
                                    std::to_string(report.coloring.color_count) + " colours"});
        out.tallies["proof-path colours"] += report.proof_colors;
        out.tallies["fallback colours"] += report.fallback_colors;
        return out;
    });
}

using SuiteFn = void (*)(Runner&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites()
{
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"flh-extraction", suite_flh},       {"chvatal", suite_chvatal},
        {"shift-family", suite_shift},       {"cyclic-recognizer", suite_cyclic},
        {"outnbrs", suite_outnbrs},          {"outorderable", suite_outorderable},
        {"robustpartition", suite_robust},   {"userobust", suite_userobust},
        {"layer-inequality", suite_layers},  {"pipeline", suite_pipeline},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suites())
            v.push_back(name);
        return v;
    }();
    return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteConfig& config)
{
    auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& s) { return s.first == suite; });
    if (it == suites().end())
        throw PreconditionError("unknown suite '" + suite + "'");
    VerificationReport report;
    report.suite = suite;
    auto start = std::chrono::steady_clock::now();
    Runner runner(config, report);
    try {
        it->second(runner, config);
    } catch (const BudgetExceeded& e) {
        report.budget_exceeded = true;
        report.notes.push_back(e.what());
    }
    runner.finish();
    report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json to_json(const VerificationReport& report)
{
    Json j;
    j["suite"] = report.suite;
    j["instances_run"] = report.instances_run;
    j["passed"] = report.passed();
    j["budget_exceeded"] = report.budget_exceeded;
    j["failures"] = Json::array();
    for (const auto& f : report.failures)
        j["failures"].push_back({{"input", f.input}, {"seed", f.seed}, {"expected", f.expected}, {"got", f.got}});
    j["notes"] = report.notes;
    j["runtime_seconds"] = report.runtime_seconds;
    return j;
}

namespace {

std::size_t pair_index(std::size_t i, std::size_t j)
{
    if (i > j)
        std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

// Minimum code over relabellings that place vertices in order of degree;
// degree is invariant, so this is a canonical form.
std::uint64_t canonical_code(std::uint64_t code, std::size_t size)
{
    std::vector<std::size_t> degree(size, 0);
    for (std::size_t j = 1; j < size; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if ((code >> pair_index(i, j)) & 1) {
                ++degree[i];
                ++degree[j];
            }
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return std::pair(degree[a], a) < std::pair(degree[b], b); });
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) in order
    for (std::size_t b = 0; b < size;) {
        std::size_t e = b;
        while (e < size && degree[order[e]] == degree[order[b]])
            ++e;
        cells.emplace_back(b, e);
        b = e;
    }
    std::vector<std::size_t> position(size);
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> visit = [&](std::size_t cell) {
        if (cell == cells.size()) {
            for (std::size_t p = 0; p < size; ++p)
                position[order[p]] = p;
            std::uint64_t c = 0;
            for (std::size_t j = 1; j < size; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    if ((code >> pair_index(i, j)) & 1)
                        c |= std::uint64_t{1} << pair_index(position[i], position[j]);
            best = std::min(best, c);
            return;
        }
        auto [b, e] = cells[cell];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));
        do
            visit(cell + 1);
        while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b),
                                     order.begin() + static_cast<std::ptrdiff_t>(e)));
    };
    visit(0);
    return best;
}

}  // namespace

std::vector<Digraph> graph_classes(std::size_t n)
{
    // Graphs as bit codes over pairs i < j at index j(j-1)/2 + i, so adding a
    // vertex only adds high bits.
    std::set<std::uint64_t> level{0};
    for (std::size_t size = 1; size <= n; ++size) {
        std::set<std::uint64_t> next;
        const std::size_t base = (size - 1) * (size - 2) / 2;
        for (std::uint64_t code : level)
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << (size - 1)); ++s)
                next.insert(canonical_code(code | (s << base), size));
        level = std::move(next);
    }
    std::vector<Digraph> out;
    for (std::uint64_t code : level) {
        std::vector<Edge> edges;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if ((code >> pair_index(i, j)) & 1)
                    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        out.emplace_back(n, edges);
    }
    return out;
}

bool is_cyclic_by_search(const Digraph& t)
{
    const std::size_t n = t.size();
    if (n % 2 == 0)
        return false;
    if (n <= 1)
        return true;
    const std::size_t m = (n - 1) / 2;
    // Cyclic tournaments are vertex-transitive, so vertex 0 may come first.
    VertexList order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                ok = t.has_edge(order[i], order[j]) == (j - i <= m);
        if (ok)
            return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

}  // namespace orient
