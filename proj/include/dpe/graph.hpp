#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpe {

using Vertex = int;

/// Hard limit on graph order; adjacency rows are 64-bit masks.
inline constexpr int kMaxGraphOrder = 64;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Duplicate edges collapse to one.
    Graph(int n, std::span<const Edge> edges, std::string name = {});
    Graph(int n, std::initializer_list<Edge> edges, std::string name = {})
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {}

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& name() const noexcept { return name_; }

    bool adjacent(Vertex a, Vertex b) const { return (adj_.at(a) >> b) & 1U; }
    std::uint64_t neighbours(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const;
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    Graph renamed(std::string name) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
    std::string name_;
};

/// Dense hop-distance matrix of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> entries);

    int order() const noexcept { return n_; }
    int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    std::span<const int> row(int i) const { return {d_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)}; }
    const std::vector<int>& entries() const noexcept { return d_; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

/// BFS from every vertex. Throws Disconnected naming a reachable/unreachable pair.
DistanceMatrix distance_matrix(const Graph& g);

int transmission(const DistanceMatrix& dm, Vertex v);
long long wiener(const DistanceMatrix& dm);
int diameter(const DistanceMatrix& dm);

bool is_connected(const Graph& g);

/// Exact clique number by branch and bound. Throws CapExceeded when n > limit.
int clique_number(const Graph& g, int limit = 32);

struct Structure {
    std::vector<int> degrees;
    std::vector<Vertex> pendants;
    std::vector<Vertex> quasipendants;
    bool connected = false;
    bool is_tree = false;
    bool is_bipartite = false;
    /// Colour classes when bipartite (class of vertex 0 first).
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> parts;
};

Structure structure_queries(const Graph& g);

// Edits. Results may be disconnected; connectivity is checked where distances are needed.
Graph delete_edge(const Graph& g, const Edge& e);
/// Vertices above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);
/// Identify u in g with w in h. g keeps its labels; h's vertices x != w become
/// n_g + (x < w ? x : x - 1).
Graph coalesce(const Graph& g, Vertex u, const Graph& h, Vertex w);
/// Label of h's vertex x inside coalesce(g, u, h, w).
Vertex coalesced_label(int g_order, Vertex u, Vertex w, Vertex x);

/// Named families with fixed labelings:
///   path n                       0-1-...-(n-1)
///   cycle n                      path plus {0, n-1}
///   complete n
///   star n                       centre 0, leaves 1..n-1
///   complete_bipartite a b       parts {0..a-1} and {a..a+b-1}
///   complete_minus_edge n        K_n without {0,1}
///   complete_minus_two_nonincident_edges n   K_n without {0,1},{2,3}
///   complete_minus_two_incident_edges n      K_n without {0,1},{0,2}
///   clique_plus_pendant_p w p    K_w on 0..w-1, vertex w joined to 0..p-1
///   star_plus_edge n             star n plus {1,2}
///   wheel n                      hub 0, rim cycle 1..n-1
/// Throws std::invalid_argument for unknown names or bad parameters.
Graph make_family(std::string_view family, std::span<const int> params);
Graph make_family(std::string_view family, std::initializer_list<int> params);
std::vector<std::string> family_names();

/// Line-oriented edge list: first non-comment line is n, then "u v" per line; '#' starts a comment line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6 (optional >>graph6<< header), one graph per non-empty line.
std::vector<Graph> parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

} // namespace dpe
