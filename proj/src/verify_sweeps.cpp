// Exhaustive and random sweeps. Each sweep evaluates its items in an OpenMP
// loop into per-item slots and folds them serially, so reports are identical
// for every worker count.

#include "dpe/verify.hpp"

#include "dpe/error.hpp"
#include "dpe/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace dpe {

namespace {

struct Tally {
    long long checks = 0;
    long long violations = 0;
    long long inconclusive = 0;
    std::vector<PropertyReport> failures;
    double least = std::numeric_limits<double>::infinity();

    void add(PropertyReport r, std::string_view margin = {}) {
        ++checks;
        if (!margin.empty())
            for (const auto& [k, v] : r.metrics)
                if (k == margin) least = std::min(least, v);
        if (r.status == Status::inconclusive) ++inconclusive;
        if (r.status == Status::violated || r.status == Status::hypothesis_failed) {
            ++violations;
            if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(r));
        }
    }

    void error(const std::string& property, const std::string& instance, const std::exception& e) {
        PropertyReport r;
        r.property_id = property;
        r.instance = instance;
        r.status = Status::violated;
        r.counterexample = Counterexample{{}, {}, e.what()};
        add(std::move(r));
    }
};

template <class Item>
std::vector<Tally> run_items(const std::vector<Item>& items, int jobs, const std::function<void(const Item&, Tally&)>& fn) {
    std::vector<Tally> slots(items.size());
    const int workers = kernels::resolve_jobs(jobs);
    const auto count = static_cast<long long>(items.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) fn(items[i], slots[i]);
    return slots;
}

SweepReport fold(std::string suite, int order, long long instances, std::vector<Tally> slots, std::string_view margin) {
    SweepReport out;
    out.suite = std::move(suite);
    out.order = order;
    out.instances = instances;
    double least = std::numeric_limits<double>::infinity();
    for (auto& s : slots) {
        out.checks += s.checks;
        out.violations += s.violations;
        out.inconclusive += s.inconclusive;
        least = std::min(least, s.least);
        for (auto& f : s.failures)
            if (out.failures.size() < kMaxStoredFailures) out.failures.push_back(std::move(f));
    }
    if (!margin.empty() && std::isfinite(least)) out.metrics.emplace_back(std::string(margin), least);
    return out;
}

std::vector<Graph> trees_up_to(int lo, int hi, int jobs) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& t : kernels::unique_trees_parallel(n, jobs)) out.push_back(std::move(t));
    return out;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

double SweepReport::metric(std::string_view name) const {
    for (const auto& [k, v] : metrics)
        if (k == name) return v;
    throw std::out_of_range("no metric '" + std::string(name) + "'");
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 7) throw CapExceeded("connected_graphs: order must be in 1..7");
    std::vector<Graph> out;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m)
        if (kernels::mask_connected(n, m)) out.push_back(kernels::graph_from_mask(n, m));
    return out;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n >= 1");
    if (n == 1) return Graph(1, {});
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const Graph tree = kernels::tree_from_pruefer(n, seq);
    std::vector<Edge> edges = tree.edges();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!tree.adjacent(a, b) && uniform01(rng) < p) edges.emplace_back(a, b);
    return Graph(n, edges);
}

std::vector<Graph> random_graph_batch(int count, int lo, int hi, std::uint64_t seed) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("random_graph_batch: need 1 <= lo <= hi");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
        const double p = 0.1 + 0.8 * uniform01(rng);
        out.push_back(random_connected_graph(n, p, rng));
    }
    return out;
}

SweepReport convexity_sweep(int max_order, int jobs) {
    if (max_order > 9) throw CapExceeded("convexity_sweep: order above 9");
    const auto trees = trees_up_to(2, max_order, jobs);
    auto slots = run_items<Graph>(trees, jobs, [](const Graph& t, Tally& tally) {
        const int n = t.order();
        const DistanceMatrix dm = distance_matrix(t);
        for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
            const auto support = mask_vertices(m);
            try {
                tally.add(check_eigenvector_convexity(t, pareto_eigenpair(dm, support)), "min_gap");
            } catch (const std::exception& e) {
                tally.error("eigenvector_convexity", describe(t), e);
            }
        }
    });
    return fold("convexity", max_order, static_cast<long long>(trees.size()), std::move(slots), "min_gap");
}

SweepReport monotonicity_sweep(int max_order, int jobs) {
    std::vector<Graph> graphs;
    for (int n = 2; n <= max_order; ++n)
        for (auto& g : connected_graphs(n)) graphs.push_back(std::move(g));
    auto slots = run_items<Graph>(graphs, jobs, [](const Graph& g, Tally& tally) {
        for (const Edge& e : g.edges()) {
            if (!is_connected(delete_edge(g, e))) continue;
            try {
                PropertyReport r = check_edge_monotonicity(g, e);
                const double gain = r.metric("rho2_after") - r.metric("rho2_before");
                r.metrics.emplace_back("gain", gain);
                tally.add(std::move(r), "gain");
            } catch (const std::exception& ex) {
                tally.error("edge_monotonicity", describe(g), ex);
            }
        }
    });
    auto out = fold("monotonicity", max_order, static_cast<long long>(graphs.size()), std::move(slots), "min_gain");
    return out;
}

SweepReport quasiconvexity_sweep(int max_order, int jobs) {
    if (max_order > 9) throw CapExceeded("quasiconvexity_sweep: order above 9");
    struct Item {
        Graph t;
        Graph h;
        Vertex w;
    };
    const std::vector<Graph> attachments = {make_family("path", {2}), make_family("path", {3}),
                                            make_family("complete", {3})};
    std::vector<Item> items;
    for (const Graph& t : trees_up_to(3, max_order, jobs))
        for (const Graph& h : attachments)
            for (Vertex w = 0; w < h.order(); ++w) items.push_back({t, h, w});
    auto slots = run_items<Item>(items, jobs, [](const Item& it, Tally& tally) {
        try {
            tally.add(check_coalescence_quasiconvexity(it.t, it.h, it.w), "min_margin");
        } catch (const std::exception& e) {
            tally.error("coalescence_quasiconvexity", describe(it.t), e);
        }
    });
    return fold("quasiconvex", max_order, static_cast<long long>(items.size()), std::move(slots), "min_margin");
}

SweepReport tree_extremes_sweep(int max_order, int jobs) {
    SweepReport out;
    out.suite = "tree-extremes";
    out.order = max_order;
    for (int n = 3; n <= max_order; ++n) {
        PropertyReport r = check_tree_extremes(n, jobs);
        out.instances += static_cast<long long>(r.metric("trees"));
        ++out.checks;
        if (r.status == Status::inconclusive) ++out.inconclusive;
        if (r.status == Status::violated) {
            ++out.violations;
            out.failures.push_back(r);
        }
        out.metrics.emplace_back("rho2_path_" + std::to_string(n), r.metric("rho2_path"));
        out.metrics.emplace_back("rho2_star_" + std::to_string(n), r.metric("rho2_star"));
    }
    return out;
}

// --- bounds -----------------------------------------------------------------------

namespace {

struct Characterization {
    const char* label;
    bool (*member)(const Graph&);
};

bool p3_or_complete(const Graph& g) { return is_complete(g) || (g.order() == 3 && is_path(g)); }
bool is_p3(const Graph& g) { return g.order() == 3 && is_path(g); }

std::optional<Characterization> characterization(BoundId id) {
    switch (id) {
    case BoundId::rho_k_lower: return Characterization{"K_n", is_complete};
    case BoundId::count_lower: return Characterization{"P_3 or K_n", p3_or_complete};
    case BoundId::rho2_dominating_upper: return Characterization{"S_n", is_star};
    case BoundId::rho2_dominating_lower: return Characterization{"K_n", is_complete};
    case BoundId::rho2_diam2_upper: return Characterization{"S_n", is_star};
    case BoundId::rho2_noncomplete_lower: return Characterization{"K_n - e", is_complete_minus_edge};
    case BoundId::rho2_simple_lower: return Characterization{"P_3", is_p3};
    case BoundId::rho2_two_edges_lower:
        return Characterization{"K_n minus two non-incident edges", is_complete_minus_two_nonincident};
    case BoundId::rho2_bipartite_lower:
        return Characterization{"K_{floor(n/2),ceil(n/2)}", is_balanced_complete_bipartite};
    case BoundId::rho2_tmin_lower: return Characterization{"K_n", is_complete};
    default: return std::nullopt;
    }
}

} // namespace

long long BoundSweepReport::violations() const {
    long long v = 0;
    for (const auto& s : stats) v += s.violations;
    return v;
}

long long BoundSweepReport::mismatches() const {
    long long v = 0;
    for (const auto& s : stats) v += s.mismatches;
    return v;
}

BoundSweepReport bounds_sweep(int max_order, int random, int jobs, std::uint64_t seed) {
    if (max_order < 2 || max_order > 7) throw CapExceeded("bounds_sweep: exhaustive order must be in 2..7");
    std::vector<Graph> graphs;
    for (int n = 2; n <= max_order; ++n)
        for (auto& g : connected_graphs(n)) graphs.push_back(std::move(g));
    const std::size_t exhaustive = graphs.size();
    for (auto& g : random_graph_batch(random, 7, 10, seed)) graphs.push_back(std::move(g));

    std::vector<std::vector<BoundResult>> results(graphs.size());
    const int workers = kernels::resolve_jobs(jobs);
    const auto count = static_cast<long long>(graphs.size());
    EnumerationOptions inner;
    inner.jobs = 1;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) results[i] = bound_report(graphs[i], inner);

    BoundSweepReport out;
    out.exhaustive_order = max_order;
    out.random_graphs = random;
    out.graphs = count;
    for (BoundId id : kAllBounds) {
        BoundStats s;
        s.id = id;
        s.min_slack = std::numeric_limits<double>::infinity();
        if (auto c = characterization(id)) s.characterization = c->label;
        out.stats.push_back(s);
    }
    std::vector<int> stored_violations(kAllBounds.size(), 0), stored_mismatches(kAllBounds.size(), 0);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        for (const BoundResult& r : results[gi]) {
            if (!r.applicable) continue;
            const auto b = static_cast<std::size_t>(r.id);
            BoundStats& s = out.stats[b];
            ++s.applicable;
            if (r.tight) ++s.tight;
            s.min_slack = std::min(s.min_slack, r.slack);
            if (r.violated()) {
                ++s.violations;
                if (stored_violations[b]++ < static_cast<int>(kMaxStoredFailures))
                    out.issues.push_back({r.id, "violation", graphs[gi], r, false});
            }
            const auto c = characterization(r.id);
            if (gi < exhaustive && c) {
                const bool expected = c->member(graphs[gi]);
                if (expected != r.tight) {
                    ++s.mismatches;
                    if (stored_mismatches[b]++ < static_cast<int>(kMaxStoredFailures))
                        out.issues.push_back({r.id, "characterization", graphs[gi], r, expected});
                }
            }
        }
    }
    return out;
}

} // namespace dpe
