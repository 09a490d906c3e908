#include "dpe/graph.hpp"

#include "dpe/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace dpe {

Graph::Graph(int n, std::span<const Edge> edges, std::string name)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0), name_(std::move(name)) {
    if (n < 0 || n > kMaxGraphOrder)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} has an endpoint outside [0, " + std::to_string(n) + ")");
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
    }
    for (int u = 0; u < n; ++u)
        for (std::uint64_t m = adj_[u] >> (u + 1); m; m &= m - 1)
            edges_.emplace_back(u, u + 1 + std::countr_zero(m));
}

int Graph::degree(Vertex v) const { return std::popcount(adj_.at(v)); }

Graph Graph::renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {
    if (d_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("distance matrix entry count does not match order");
}

namespace {

// BFS layers over adjacency masks; -1 marks unreachable.
std::vector<int> bfs(const Graph& g, Vertex s) {
    std::vector<int> dist(g.order(), -1);
    dist[s] = 0;
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    for (int level = 1; frontier; ++level) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
        next &= ~seen;
        for (std::uint64_t m = next; m; m &= m - 1) dist[std::countr_zero(m)] = level;
        seen |= next;
        frontier = next;
    }
    return dist;
}

} // namespace

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s) {
        const auto row = bfs(g, s);
        for (int t = 0; t < n; ++t) {
            if (row[t] < 0) throw Disconnected(s, t);
            d[static_cast<std::size_t>(s) * n + t] = row[t];
        }
    }
    return DistanceMatrix(n, std::move(d));
}

int transmission(const DistanceMatrix& dm, Vertex v) {
    if (v < 0 || v >= dm.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    const auto r = dm.row(v);
    return std::accumulate(r.begin(), r.end(), 0);
}

long long wiener(const DistanceMatrix& dm) {
    const auto& e = dm.entries();
    return std::accumulate(e.begin(), e.end(), 0LL) / 2;
}

int diameter(const DistanceMatrix& dm) {
    const auto& e = dm.entries();
    return e.empty() ? 0 : *std::max_element(e.begin(), e.end());
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto d = bfs(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

namespace {

void expand_clique(const Graph& g, int size, std::uint64_t candidates, int& best) {
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    while (candidates) {
        if (size + std::popcount(candidates) <= best) return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        expand_clique(g, size + 1, candidates & g.neighbours(v), best);
    }
    best = std::max(best, size);
}

} // namespace

int clique_number(const Graph& g, int limit) {
    if (g.order() > limit)
        throw CapExceeded("clique_number: order " + std::to_string(g.order()) + " exceeds limit " +
                          std::to_string(limit));
    if (g.order() == 0) return 0;
    const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    int best = 0;
    expand_clique(g, 0, all, best);
    return best;
}

Structure structure_queries(const Graph& g) {
    const int n = g.order();
    Structure s;
    s.degrees.resize(n);
    std::uint64_t quasi = 0;
    for (int v = 0; v < n; ++v) {
        s.degrees[v] = g.degree(v);
        if (s.degrees[v] == 1) {
            s.pendants.push_back(v);
            quasi |= g.neighbours(v);
        }
    }
    for (std::uint64_t m = quasi; m; m &= m - 1) s.quasipendants.push_back(std::countr_zero(m));
    s.connected = is_connected(g);
    s.is_tree = s.connected && g.size() == n - 1;

    // 2-colouring over every component.
    std::vector<int> colour(n, -1);
    bool bipartite = true;
    for (int r = 0; r < n && bipartite; ++r) {
        if (colour[r] >= 0) continue;
        colour[r] = 0;
        std::deque<int> queue{r};
        while (!queue.empty() && bipartite) {
            const int v = queue.front();
            queue.pop_front();
            for (std::uint64_t m = g.neighbours(v); m; m &= m - 1) {
                const int w = std::countr_zero(m);
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }
    s.is_bipartite = bipartite;
    if (bipartite) {
        std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
        for (int v = 0; v < n; ++v) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
        s.parts = std::move(parts);
    }
    return s;
}

Graph delete_edge(const Graph& g, const Edge& e) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e))
        throw std::invalid_argument("delete_edge: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} is not an edge");
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const Edge& f : g.edges())
        if (f != e) kept.push_back(f);
    return Graph(g.order(), kept);
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertex: no vertex " + std::to_string(v));
    std::vector<Edge> kept;
    for (const Edge& f : g.edges()) {
        if (f.u == v || f.v == v) continue;
        kept.emplace_back(f.u > v ? f.u - 1 : f.u, f.v > v ? f.v - 1 : f.v);
    }
    return Graph(g.order() - 1, kept);
}

Vertex coalesced_label(int g_order, Vertex u, Vertex w, Vertex x) {
    if (x == w) return u;
    return g_order + (x < w ? x : x - 1);
}

Graph coalesce(const Graph& g, Vertex u, const Graph& h, Vertex w) {
    if (u < 0 || u >= g.order()) throw std::invalid_argument("coalesce: no vertex " + std::to_string(u) + " in g");
    if (w < 0 || w >= h.order()) throw std::invalid_argument("coalesce: no vertex " + std::to_string(w) + " in h");
    std::vector<Edge> edges = g.edges();
    for (const Edge& f : h.edges())
        edges.emplace_back(coalesced_label(g.order(), u, w, f.u), coalesced_label(g.order(), u, w, f.v));
    return Graph(g.order() + h.order() - 1, edges);
}

} // namespace dpe
