#include "dpe/verify.hpp"

#include "dpe/canonical.hpp"
#include "dpe/error.hpp"
#include "dpe/kernels.hpp"
#include "dpe/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace dpe {

namespace {

constexpr double kConvexTolerance = 1e-12;
constexpr double kValueTolerance = 1e-9;

double scaled(double v) { return kValueTolerance * std::max(1.0, std::abs(v)); }

// Worst status wins: violated > hypothesis_failed > inconclusive > holds.
int rank(Status s) {
    switch (s) {
    case Status::holds: return 0;
    case Status::inconclusive: return 1;
    case Status::hypothesis_failed: return 2;
    case Status::violated: return 3;
    }
    return 0;
}

void record(PropertyReport& r, Status s, Counterexample cx) {
    if (s == Status::holds) return;
    if (rank(s) > rank(r.status)) {
        r.status = s;
        r.counterexample = std::move(cx);
    }
}

void require_tree(const Graph& t, const char* who) {
    if (!structure_queries(t).is_tree) throw std::invalid_argument(std::string(who) + ": input is not a tree");
}

std::vector<double> as_doubles(const DistanceMatrix& dm) { return {dm.entries().begin(), dm.entries().end()}; }

VertexMask full_mask(int n) { return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

} // namespace

std::string_view status_name(Status s) {
    switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::inconclusive: return "inconclusive";
    case Status::hypothesis_failed: return "hypothesis_failed";
    }
    return "";
}

double PropertyReport::metric(std::string_view name) const {
    for (const auto& [k, v] : metrics)
        if (k == name) return v;
    throw std::out_of_range("no metric '" + std::string(name) + "'");
}

Status strict_less(double lhs, double rhs, double tol) {
    const double diff = rhs - lhs;
    if (diff > tol) return Status::holds;
    if (diff < -tol) return Status::violated;
    return Status::inconclusive;
}

std::string describe(const Graph& g) {
    std::string s = g.name().empty() ? "" : g.name() + " ";
    s += "n=" + std::to_string(g.order()) + " [";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return s + "]";
}

// --- recognisers ---------------------------------------------------------------

namespace {
long long pairs(int n) { return static_cast<long long>(n) * (n - 1) / 2; }
} // namespace

bool is_complete(const Graph& g) { return g.size() == pairs(g.order()); }

bool is_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != n - 1) return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

bool is_path(const Graph& g) {
    const int n = g.order();
    if (n < 1 || g.size() != n - 1 || !is_connected(g)) return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_complete_minus_edge(const Graph& g) { return g.order() >= 2 && g.size() == pairs(g.order()) - 1; }

bool is_complete_minus_two_nonincident(const Graph& g) {
    const int n = g.order();
    if (n < 4 || g.size() != pairs(n) - 2) return false;
    std::vector<Vertex> touched;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b)) {
                touched.push_back(a);
                touched.push_back(b);
            }
    std::sort(touched.begin(), touched.end());
    return std::adjacent_find(touched.begin(), touched.end()) == touched.end();
}

bool is_balanced_complete_bipartite(const Graph& g) {
    const Structure s = structure_queries(g);
    if (!s.connected || !s.is_bipartite || !s.parts) return false;
    const auto a = static_cast<long long>(s.parts->first.size());
    const auto b = static_cast<long long>(s.parts->second.size());
    const int n = g.order();
    return std::min(a, b) == n / 2 && g.size() == a * b;
}

// --- checkers ------------------------------------------------------------------

PropertyReport check_eigenvector_convexity(const Graph& t, const ParetoEigenpair& pair) {
    require_tree(t, "check_eigenvector_convexity");
    if (static_cast<int>(pair.vector.size()) != t.order())
        throw std::invalid_argument("check_eigenvector_convexity: vector length differs from tree order");
    PropertyReport r;
    r.property_id = "eigenvector_convexity";
    r.instance = describe(t);
    r.metrics.emplace_back("value", pair.value);
    if (pair.value == 0.0) return r;

    std::uint64_t in = 0;
    for (Vertex v : pair.support) in |= std::uint64_t{1} << v;
    const auto& x = pair.vector;
    double least = std::numeric_limits<double>::infinity();
    long long paths = 0;
    for (Vertex j : pair.support) {
        const auto nb = mask_vertices(static_cast<VertexMask>(t.neighbours(j) & in));
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const Vertex i = nb[a], k = nb[b];
                ++paths;
                least = std::min(least, x[i] + x[k] - 2.0 * x[j]);
                record(r, strict_less(2.0 * x[j], x[i] + x[k], kConvexTolerance),
                       {{i, j, k}, {x[i], x[j], x[k]}, "2 x_j < x_i + x_k fails"});
            }
    }
    r.metrics.emplace_back("paths", static_cast<double>(paths));
    if (paths > 0) r.metrics.emplace_back("min_gap", least);
    return r;
}

PropertyReport check_min_structure(const Graph& t, const std::vector<double>& f) {
    require_tree(t, "check_min_structure");
    const int n = t.order();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("check_min_structure: f has wrong length");
    PropertyReport r;
    r.property_id = "min_structure";
    r.instance = describe(t);

    for (Vertex j = 0; j < n; ++j) {
        const auto nb = mask_vertices(static_cast<VertexMask>(t.neighbours(j)));
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const Status s = strict_less(f[j], std::max(f[nb[a]], f[nb[b]]), kConvexTolerance);
                if (s == Status::violated)
                    record(r, Status::hypothesis_failed,
                           {{nb[a], j, nb[b]}, {f[nb[a]], f[j], f[nb[b]]}, "f is not strictly quasiconvex"});
                else
                    record(r, s, {{nb[a], j, nb[b]}, {f[nb[a]], f[j], f[nb[b]]}, "quasiconvexity within tolerance"});
            }
    }
    if (r.status == Status::hypothesis_failed) return r;

    const double lo = *std::min_element(f.begin(), f.end());
    std::vector<Vertex> minimisers;
    for (Vertex v = 0; v < n; ++v)
        if (f[v] <= lo + kConvexTolerance) minimisers.push_back(v);
    const bool shape_ok = minimisers.size() == 1 || (minimisers.size() == 2 && t.adjacent(minimisers[0], minimisers[1]));
    if (!shape_ok) {
        record(r, Status::violated, {minimisers, {lo}, "minimiser is not a vertex or an edge"});
        return r;
    }
    r.metrics.emplace_back("minimisers", static_cast<double>(minimisers.size()));

    // BFS outward from the minimiser set; each step away must increase f.
    std::vector<int> parent(n, -2);
    std::vector<Vertex> queue;
    for (Vertex v : minimisers) {
        parent[v] = -1;
        queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex a = queue[head];
        for (Vertex b : mask_vertices(static_cast<VertexMask>(t.neighbours(a)))) {
            if (parent[b] != -2) continue;
            parent[b] = a;
            queue.push_back(b);
            record(r, strict_less(f[a], f[b], kConvexTolerance), {{a, b}, {f[a], f[b]}, "f does not increase outward"});
        }
    }
    return r;
}

PropertyReport check_edge_monotonicity(const Graph& g, const Edge& e) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e)) throw std::invalid_argument("check_edge_monotonicity: not an edge");
    const Graph h = delete_edge(g, e);
    const DistanceMatrix dh = distance_matrix(h);
    const DistanceMatrix dg = distance_matrix(g);
    const int n = g.order();
    if (n > kHardMaxOrder) throw CapExceeded("check_edge_monotonicity: order above 30");

    const double before = rho2_fast(g, dg).value;
    const double after = rho2_fast(h, dh).value;

    const auto full = as_doubles(dg);
    bool strict_expected = false;
    for (Vertex v = 0; v < n; ++v) {
        if (v == e.u || v == e.v) continue;
        const double rv = kernel::perron_root(full.data(), n, full_mask(n) & ~(VertexMask{1} << v));
        if (std::abs(rv - before) <= scaled(before)) strict_expected = true;
    }

    PropertyReport r;
    r.property_id = "edge_monotonicity";
    r.instance = describe(g) + " minus " + std::to_string(e.u) + "-" + std::to_string(e.v);
    r.metrics = {{"rho2_before", before},
                 {"rho2_after", after},
                 {"strict", after - before > scaled(before) ? 1.0 : 0.0},
                 {"strict_expected", strict_expected ? 1.0 : 0.0}};
    const Counterexample cx{{e.u, e.v}, {before, after}, ""};
    if (after - before < -scaled(before)) {
        record(r, Status::violated, {cx.vertices, cx.values, "rho2 decreased after deleting the edge"});
    } else if (strict_expected) {
        const Status s = strict_less(before, after, scaled(before));
        record(r, s, {cx.vertices, cx.values, "edge misses a rho2 deletion vertex but rho2 did not increase"});
    }
    return r;
}

PropertyReport check_coalescence_quasiconvexity(const Graph& t, const Graph& h, Vertex w) {
    require_tree(t, "check_coalescence_quasiconvexity");
    if (t.order() < 3) throw std::invalid_argument("check_coalescence_quasiconvexity: tree needs >= 3 vertices");
    if (h.order() < 2 || !is_connected(h))
        throw std::invalid_argument("check_coalescence_quasiconvexity: h must be connected with >= 2 vertices");
    const int nt = t.order();
    const int N = nt + h.order() - 1;
    if (N > kHardMaxOrder) throw CapExceeded("check_coalescence_quasiconvexity: coalescence above order 30");

    std::vector<double> r2(nt);
    std::vector<std::vector<double>> rho_u(nt, std::vector<double>(N));
    for (Vertex i = 0; i < nt; ++i) {
        const Graph gi = coalesce(t, i, h, w);
        const DistanceMatrix dm = distance_matrix(gi);
        r2[i] = rho2_fast(gi, dm).value;
        const auto full = as_doubles(dm);
        for (Vertex u = 0; u < N; ++u)
            rho_u[i][u] = kernel::perron_root(full.data(), N, full_mask(N) & ~(VertexMask{1} << u));
    }

    PropertyReport r;
    r.property_id = "coalescence_quasiconvexity";
    r.instance = describe(t) + " * " + describe(h) + " at " + std::to_string(w);
    long long paths = 0;
    double least = std::numeric_limits<double>::infinity();
    for (Vertex j = 0; j < nt; ++j) {
        const auto nb = mask_vertices(static_cast<VertexMask>(t.neighbours(j)));
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const Vertex i = nb[a], k = nb[b];
                ++paths;
                const double top = std::max(r2[i], r2[k]);
                least = std::min(least, top - r2[j]);
                record(r, strict_less(r2[j], top, scaled(top)),
                       {{i, j, k}, {r2[i], r2[j], r2[k]}, "rho2(G^j) is not below max(rho2(G^i), rho2(G^k))"});
                for (Vertex u = 0; u < N; ++u) {
                    const double ri = rho_u[i][u], rj = rho_u[j][u], rk = rho_u[k][u];
                    if (ri + rk - 2.0 * rj < -scaled(rj))
                        record(r, Status::violated,
                               {{i, j, k, u}, {ri, rj, rk}, "rho^u(G^i) + rho^u(G^k) < 2 rho^u(G^j)"});
                    record(r, strict_less(rj, std::max(ri, rk), scaled(rj)),
                           {{i, j, k, u}, {ri, rj, rk}, "neither rho^u(G^i) nor rho^u(G^k) exceeds rho^u(G^j)"});
                }
            }
    }
    r.metrics.emplace_back("paths", static_cast<double>(paths));
    if (paths > 0) r.metrics.emplace_back("min_margin", least);
    return r;
}

PropertyReport check_tree_extremes(int n, int jobs) {
    if (n < 3 || n > 9) throw CapExceeded("check_tree_extremes: order must be in 3..9");
    const auto trees = kernels::unique_trees_parallel(n, jobs);
    PropertyReport r;
    r.property_id = "tree_extremes";
    r.instance = "trees of order " + std::to_string(n);

    std::vector<double> values;
    int path = -1, star = -1;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        values.push_back(rho2_fast(trees[i]).value);
        if (is_path(trees[i])) path = static_cast<int>(i);
        if (is_star(trees[i])) star = static_cast<int>(i);
    }
    if (path < 0 || star < 0) throw std::logic_error("tree enumeration missed the path or the star");

    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (static_cast<int>(i) != path)
            record(r, strict_less(values[i], values[path], scaled(values[path])),
                   {{}, {values[i], values[path]}, describe(trees[i]) + " reaches the path's rho2"});
        if (static_cast<int>(i) != star)
            record(r, strict_less(values[star], values[i], scaled(values[star])),
                   {{}, {values[i], values[star]}, describe(trees[i]) + " goes below the star's rho2"});
    }
    r.metrics = {{"trees", static_cast<double>(trees.size())},
                 {"rho2_path", values[path]},
                 {"rho2_star", values[star]},
                 {"rho2_max", *std::max_element(values.begin(), values.end())},
                 {"rho2_min", *std::min_element(values.begin(), values.end())}};
    return r;
}

ExtremalResult extremal_search(int n, bool dedup_iso, int jobs, double tol) {
    if (n < 2 || n > 7) throw CapExceeded("extremal_search: order must be in 2..7");
    const kernels::CountSweep sweep = kernels::max_count_parallel(n, tol, jobs);
    ExtremalResult out;
    out.order = n;
    out.max_count = sweep.max_count;
    out.graphs_scanned = sweep.masks_scanned;
    out.connected_graphs = sweep.connected_graphs;
    if (!dedup_iso) {
        for (std::uint64_t m : sweep.witness_masks) out.witnesses.push_back(kernels::graph_from_mask(n, m));
        return out;
    }
    std::map<std::uint64_t, Graph> classes;
    for (std::uint64_t m : sweep.witness_masks) {
        const Graph g = kernels::graph_from_mask(n, m);
        const std::uint64_t code = canonical_graph_code(g);
        if (!classes.contains(code)) classes.emplace(code, canonical_graph(g));
    }
    for (auto& [code, g] : classes) out.witnesses.push_back(std::move(g));
    return out;
}

} // namespace dpe
