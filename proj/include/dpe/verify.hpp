#pragma once

#include "dpe/graph.hpp"
#include "dpe/laws.hpp"
#include "dpe/pareto.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dpe {

enum class Status { holds, violated, inconclusive, hypothesis_failed };

std::string_view status_name(Status s);

/// Vertices and values that break a property; enough to re-run the check.
struct Counterexample {
    std::vector<Vertex> vertices;
    std::vector<double> values;
    std::string note;
};

struct PropertyReport {
    std::string property_id;
    std::string instance;
    Status status = Status::holds;
    std::optional<Counterexample> counterexample;
    /// Named numeric observations (e.g. rho2 before/after, minimum slack).
    std::vector<std::pair<std::string, double>> metrics;

    bool holds() const { return status == Status::holds; }
    double metric(std::string_view name) const;
};

/// Strict inequality lhs < rhs, judged on rhs - lhs: holds above tol,
/// inconclusive within it, violated below -tol.
Status strict_less(double lhs, double rhs, double tol);

// --- checkers ------------------------------------------------------------------

/// Strict convexity 2 x_j < x_i + x_k on every path i~j~k of the forest induced
/// by the support. Tolerance 1e-12 on the difference. Throws for non-trees.
PropertyReport check_eigenvector_convexity(const Graph& t, const ParetoEigenpair& pair);

/// Minimiser of a strictly quasiconvex f on a tree is one vertex or two
/// adjacent ones, and f strictly increases moving away from it.
PropertyReport check_min_structure(const Graph& t, const std::vector<double>& f);

/// rho2(g - e) >= rho2(g) - 1e-9. When e misses some vertex whose deletion
/// attains rho2(g), the increase must be strict. Throws Disconnected when
/// g - e is disconnected.
PropertyReport check_edge_monotonicity(const Graph& g, const Edge& e);

/// For G^i = coalesce(t, i, h, w): rho2(G^j) < max(rho2(G^i), rho2(G^k)) on
/// every path i~j~k of t, and for every vertex u the per-deletion inequality
/// rho^u(G^i) + rho^u(G^k) >= 2 rho^u(G^j) with one side strictly above.
PropertyReport check_coalescence_quasiconvexity(const Graph& t, const Graph& h, Vertex w);

/// All trees of order n (3 <= n <= 9): rho2 uniquely maximised by P_n and
/// uniquely minimised by S_n.
PropertyReport check_tree_extremes(int n, int jobs = 0);

struct ExtremalResult {
    int order = 0;
    int max_count = 0;
    /// Canonical forms when deduplicated, labelled graphs otherwise.
    std::vector<Graph> witnesses;
    long long graphs_scanned = 0;
    long long connected_graphs = 0;
};

/// Max |Pi(G)| over connected graphs of order n, 2 <= n <= 7.
ExtremalResult extremal_search(int n, bool dedup_iso = true, int jobs = 0, double tol = kDedupTolerance);

// --- recognisers -----------------------------------------------------------------

bool is_star(const Graph& g);
bool is_complete(const Graph& g);
bool is_path(const Graph& g);
bool is_complete_minus_edge(const Graph& g);
bool is_complete_minus_two_nonincident(const Graph& g);
bool is_balanced_complete_bipartite(const Graph& g);

// --- sweeps ------------------------------------------------------------------------

/// All connected labelled graphs of order n.
std::vector<Graph> connected_graphs(int n);

/// Connected graph of order n: a uniform random Pruefer tree plus each other
/// pair independently with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

/// `count` random graphs with orders in [lo, hi] from a fixed seed.
std::vector<Graph> random_graph_batch(int count, int lo, int hi, std::uint64_t seed);

struct SweepReport {
    std::string suite;
    int order = 0;
    long long instances = 0;
    long long checks = 0;
    long long violations = 0;
    long long inconclusive = 0;
    /// First few failing reports (up to kMaxStoredFailures).
    std::vector<PropertyReport> failures;
    std::vector<std::pair<std::string, double>> metrics;

    bool ok() const { return violations == 0; }
    double metric(std::string_view name) const;
};

inline constexpr std::size_t kMaxStoredFailures = 20;

/// Every Pareto eigenpair (every support) of every tree of order <= max_order.
SweepReport convexity_sweep(int max_order, int jobs = 0);
/// Every (g, e) with g connected of order <= max_order and g - e connected.
SweepReport monotonicity_sweep(int max_order, int jobs = 0);
/// Trees 3 <= n_t <= max_order coalesced with K2, P3, K3 at each attachment vertex.
SweepReport quasiconvexity_sweep(int max_order, int jobs = 0);
/// check_tree_extremes for n = 3..max_order.
SweepReport tree_extremes_sweep(int max_order, int jobs = 0);

/// Graph that claims equality for a bound, or that the bound fails on.
struct BoundIssue {
    BoundId id{};
    std::string kind;  ///< "violation" or "characterization"
    Graph graph;
    BoundResult result;
    bool expected_tight = false;
};

struct BoundStats {
    BoundId id{};
    long long applicable = 0;
    long long tight = 0;
    long long violations = 0;
    long long mismatches = 0;
    double min_slack = 0.0;
    /// Equality family checked in the exhaustive range ("" when none).
    std::string characterization;
};

struct BoundSweepReport {
    int exhaustive_order = 0;
    int random_graphs = 0;
    long long graphs = 0;
    std::vector<BoundStats> stats;  ///< kAllBounds order
    std::vector<BoundIssue> issues;  ///< up to kMaxStoredFailures per bound and kind

    long long violations() const;
    long long mismatches() const;
    bool ok() const { return violations() == 0 && mismatches() == 0; }
    const BoundStats& at(BoundId id) const { return stats[static_cast<int>(id)]; }
};

/// bound_report over every connected graph of order 2..max_order (where the
/// equality characterisations are also checked) plus `random` graphs of
/// order 7..10 from a fixed seed.
BoundSweepReport bounds_sweep(int max_order, int random = 500, int jobs = 0, std::uint64_t seed = 20240611);

/// Short text form: family-like name when recognised, else the edge list.
std::string describe(const Graph& g);

} // namespace dpe
