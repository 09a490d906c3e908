#include "dpe/error.hpp"
#include "dpe/graph.hpp"
#include "dpe/kernels.hpp"
#include "dpe/verify.hpp"

#include <doctest.h>

#include <numeric>

using namespace dpe;

namespace {

std::vector<int> rows(const DistanceMatrix& dm) { return dm.entries(); }

int brute_clique(const Graph& g) {
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
        bool clique = true;
        for (int a = 0; a < n && clique; ++a)
            for (int b = a + 1; b < n && clique; ++b)
                if (((m >> a) & 1U) && ((m >> b) & 1U) && !g.adjacent(a, b)) clique = false;
        if (clique) best = std::max(best, std::popcount(m));
    }
    return best;
}

} // namespace

TEST_CASE("edge list parsing") {
    const Graph p3 = parse_edge_list("3\n0 1\n1 2");
    CHECK(p3 == Graph(3, {{0, 1}, {1, 2}}));
    CHECK(parse_edge_list("2\n0 1") == make_family("complete", {2}));
    CHECK(parse_edge_list("4\n0 1\n0 2\n0 3") == make_family("star", {4}));

    SUBCASE("comments and duplicates") {
        const Graph g = parse_edge_list("# triangle\n3\n0 1\n# mid\n1 2\n2 0\n1 0\n");
        CHECK(g.size() == 3);
    }
    SUBCASE("errors name the line") {
        auto line_of = [](std::string_view text) {
            try {
                parse_edge_list(text);
            } catch (const ParseError& e) {
                return e.line();
            }
            return -1;
        };
        CHECK(line_of("3\n0 1\n1 1") == 3);
        CHECK(line_of("3\n0 1\n1 3") == 3);
        CHECK(line_of("3\n0 x") == 2);
        CHECK(line_of("3\n0 1 2") == 2);
        CHECK(line_of("three\n") == 1);
    }
}

TEST_CASE("families") {
    CHECK(make_family("complete", {4}).size() == 6);
    const Graph k31 = make_family("clique_plus_pendant_p", {3, 1});
    CHECK(k31 == Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));
    const Graph k5 = make_family("complete_minus_two_nonincident_edges", {5});
    CHECK(k5.size() == 8);
    CHECK_FALSE(k5.adjacent(0, 1));
    CHECK_FALSE(k5.adjacent(2, 3));
    CHECK(make_family("wheel", {6}).size() == 10);
    CHECK(make_family("star_plus_edge", {4}).has_edge({1, 2}));
    CHECK(make_family("complete_bipartite", {2, 3}).size() == 6);
    CHECK_THROWS_AS(make_family("dodecahedron", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("clique_plus_pendant_p", {3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("path", {}), std::invalid_argument);
    for (const auto& name : family_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("distance matrices") {
    CHECK(rows(distance_matrix(make_family("path", {3}))) == std::vector<int>{0, 1, 2, 1, 0, 1, 2, 1, 0});
    const DistanceMatrix k4 = distance_matrix(make_family("complete", {4}));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k4(i, j) == (i == j ? 0 : 1));
    const DistanceMatrix s4 = distance_matrix(make_family("star", {4}));
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) CHECK(s4(i, j) == (i == j ? 0 : 2));
    CHECK(s4(0, 2) == 1);

    const Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(distance_matrix(split), Disconnected);
}

TEST_CASE("transmission, Wiener index, diameter") {
    const DistanceMatrix p3 = distance_matrix(make_family("path", {3}));
    CHECK(transmission(p3, 1) == 2);
    CHECK(wiener(p3) == 4);
    CHECK(diameter(p3) == 2);
    const DistanceMatrix k5 = distance_matrix(make_family("complete", {5}));
    CHECK(transmission(k5, 3) == 4);
    CHECK(wiener(k5) == 10);
    CHECK(diameter(k5) == 1);
    const DistanceMatrix s5 = distance_matrix(make_family("star", {5}));
    CHECK(transmission(s5, 0) == 4);
    CHECK(transmission(s5, 2) == 7);
    CHECK(wiener(s5) == 16);
}

TEST_CASE("clique number") {
    CHECK(clique_number(make_family("complete", {5})) == 5);
    CHECK(clique_number(make_family("path", {4})) == 2);
    CHECK(clique_number(make_family("complete_minus_edge", {4})) == 3);
    CHECK_THROWS_AS(clique_number(make_family("path", {10}), 8), CapExceeded);

    for (const Graph& g : random_graph_batch(60, 2, 8, 7))
        CHECK(clique_number(g) == brute_clique(g));
    for (const Graph& g : connected_graphs(5)) CHECK(clique_number(g) == brute_clique(g));
}

TEST_CASE("structure queries") {
    const Structure s4 = structure_queries(make_family("star", {4}));
    CHECK(s4.pendants == std::vector<Vertex>{1, 2, 3});
    CHECK(s4.quasipendants == std::vector<Vertex>{0});
    CHECK(s4.is_tree);
    const Structure c5 = structure_queries(make_family("cycle", {5}));
    CHECK(c5.pendants.empty());
    CHECK_FALSE(c5.is_tree);
    CHECK_FALSE(c5.is_bipartite);
    const Structure k23 = structure_queries(make_family("complete_bipartite", {2, 3}));
    REQUIRE(k23.parts);
    CHECK(std::min(k23.parts->first.size(), k23.parts->second.size()) == 2);
    CHECK(std::max(k23.parts->first.size(), k23.parts->second.size()) == 3);
    CHECK(k23.degrees == std::vector<int>{3, 3, 2, 2, 2});
}

TEST_CASE("edits") {
    CHECK(delete_edge(make_family("complete", {3}), {0, 1}) == Graph(3, {{0, 2}, {1, 2}}));
    const Graph rest = delete_vertex(make_family("star", {4}), 0);
    CHECK(rest.order() == 3);
    CHECK(rest.size() == 0);
    CHECK_FALSE(is_connected(rest));
    CHECK(coalesce(make_family("path", {2}), 1, make_family("path", {2}), 0) == make_family("path", {3}));
    CHECK_THROWS_AS(delete_edge(make_family("path", {3}), {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(delete_vertex(make_family("path", {3}), 3), std::invalid_argument);

    const Graph g = coalesce(make_family("path", {3}), 2, make_family("complete", {3}), 1);
    CHECK(g.order() == 5);
    CHECK(g.has_edge({2, 3}));
    CHECK(g.has_edge({2, 4}));
    CHECK(g.has_edge({3, 4}));
    CHECK(coalesced_label(3, 2, 1, 0) == 3);
    CHECK(coalesced_label(3, 2, 1, 2) == 4);
}

TEST_CASE("graph6") {
    CHECK(to_graph6(make_family("complete", {4})) == "C~");
    CHECK(to_graph6(make_family("path", {3})) == "Bg");
    const auto gs = parse_graph6(">>graph6<<Bg\nC~\n");
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == make_family("path", {3}));
    CHECK(gs[1] == make_family("complete", {4}));
    for (const Graph& g : random_graph_batch(40, 2, 12, 3)) {
        const auto back = parse_graph6(to_graph6(g));
        REQUIRE(back.size() == 1);
        CHECK(back[0] == g);
    }
    CHECK_THROWS_AS(make_family("path", {70}), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("C~~~"), ParseError);
}

TEST_CASE("distance matrix axioms on every small connected graph") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (auto& g : connected_graphs(n)) graphs.push_back(std::move(g));
    for (auto& g : random_graph_batch(100, 6, 8, 11)) graphs.push_back(std::move(g));
    for (const Graph& g : graphs) {
        const DistanceMatrix dm = distance_matrix(g);
        const int n = g.order();
        long long total = 0;
        int biggest = 0;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            ok = ok && dm(i, i) == 0;
            total += transmission(dm, i);
            for (int j = 0; j < n; ++j) {
                ok = ok && dm(i, j) == dm(j, i) && (i == j || dm(i, j) >= 1);
                biggest = std::max(biggest, dm(i, j));
                for (int k = 0; k < n; ++k) ok = ok && dm(i, k) <= dm(i, j) + dm(j, k);
            }
        }
        CHECK(ok);
        CHECK(2 * wiener(dm) == total);
        CHECK(diameter(dm) == biggest);
    }
    for (int n = 2; n <= 12; ++n) {
        CHECK(diameter(distance_matrix(make_family("path", {n}))) == n - 1);
        CHECK(diameter(distance_matrix(make_family("complete", {n}))) == 1);
    }
}

TEST_CASE("labelled connected graph counts") {
    const long long known[] = {1, 1, 4, 38, 728, 26704};
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<long long>(connected_graphs(n).size()) == known[n - 1]);
}
