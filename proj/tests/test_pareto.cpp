#include "dpe/canonical.hpp"
#include "dpe/error.hpp"
#include "dpe/laws.hpp"
#include "dpe/pareto.hpp"
#include "dpe/spectral.hpp"
#include "dpe/verify.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

using namespace dpe;

namespace {

void check_values(const ParetoSpectrum& s, const std::vector<double>& expected) {
    REQUIRE(s.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(s.values[i] - expected[i]) <= 1e-9);
}

// Exhaustive connected graphs up to order 6, one per isomorphism class.
const std::vector<Graph>& small_classes() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        for (int n = 1; n <= 6; ++n) {
            std::map<std::uint64_t, Graph> seen;
            for (auto& g : connected_graphs(n)) seen.emplace(canonical_graph_code(g), std::move(g));
            for (auto& [code, g] : seen) out.push_back(std::move(g));
        }
        return out;
    }();
    return graphs;
}

} // namespace

TEST_CASE("pareto spectrum examples") {
    const double r3 = std::sqrt(3.0);
    check_values(pareto_spectrum(make_family("path", {3})), {0, 1, 2, 1 + r3});
    check_values(pareto_spectrum(make_family("complete", {4})), {0, 1, 2, 3});
    const ParetoSpectrum s4 = pareto_spectrum(make_family("star", {4}));
    check_values(s4, {0, 1, 2, 1 + r3, 4, 2 + std::sqrt(7.0)});
    // 1+sqrt(3) comes from {0,1,2}; the leaf triple {1,2,3} gives 4
    CHECK(s4.witnesses == std::vector<VertexMask>{0x1, 0x3, 0x6, 0x7, 0xe, 0xf});
    CHECK(s4.witness_vertices(4) == std::vector<Vertex>{1, 2, 3});
    CHECK(s4.graph_order == 4);
    CHECK(s4.dedup_tolerance == kDedupTolerance);

    const ParetoSpectrum p3 = pareto_spectrum(make_family("path", {3}));
    CHECK(p3.witnesses == std::vector<VertexMask>{0x1, 0x3, 0x5, 0x7});
}

TEST_CASE("pareto counts") {
    CHECK(pareto_count(make_family("path", {2})) == 2);
    CHECK(pareto_count(make_family("path", {3})) == 4);
    CHECK(pareto_count(make_family("path", {4})) == 7);
    CHECK(pareto_count(make_family("path", {5})) == 13);
    const Graph g3(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}});
    CHECK(pareto_count(g3) == 30);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(pareto_spectrum(Graph(3, {{0, 1}})), Disconnected);
    EnumerationOptions tight;
    tight.max_order = 5;
    CHECK_THROWS_AS(pareto_spectrum(make_family("path", {6}), tight), CapExceeded);
    tight.max_order = 99;
    CHECK_THROWS_AS(pareto_spectrum(make_family("path", {31}), tight), CapExceeded);
    const ParetoSpectrum p3 = pareto_spectrum(make_family("path", {3}));
    CHECK_THROWS_AS(rho_k(p3, 0), std::out_of_range);
    CHECK_THROWS_AS(rho_k(p3, 5), std::out_of_range);
    CHECK_THROWS_AS(mu_k(p3, 5), std::out_of_range);
    CHECK_THROWS_AS(rho2_fast(make_family("complete", {1})), std::invalid_argument);
    CHECK_THROWS_AS(pareto_eigenpair(make_family("path", {3}), std::vector<Vertex>{}), std::invalid_argument);
}

TEST_CASE("rho_k and mu_k") {
    CHECK(rho_k(make_family("star", {4}), 1) == doctest::Approx(2 + std::sqrt(7.0)).epsilon(1e-12));
    CHECK(rho_k(make_family("path", {4}), 2) == doctest::Approx(4.113090584325).epsilon(1e-9));
    for (const char* fam : {"path", "cycle", "star", "wheel"}) CHECK(mu_k(make_family(fam, {5}), 1) == 0.0);
    const ParetoSpectrum s4 = pareto_spectrum(make_family("star", {4}));
    for (int k = 1; k <= 6; ++k) CHECK(rho_k(s4, k) == mu_k(s4, 7 - k));
}

TEST_CASE("rho2 via vertex deletions") {
    const Rho2 s4 = rho2_fast(make_family("star", {4}));
    CHECK(s4.value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(s4.witness == 0);
    CHECK(rho2_fast(make_family("wheel", {6})).value == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rho2_fast(make_family("complete", {4})).value == doctest::Approx(2.0).epsilon(1e-12));
    const Rho2 k2 = rho2_fast(make_family("complete", {2}));
    CHECK(k2.value == 0.0);
    CHECK(k2.witness == 0);
}

TEST_CASE("pareto eigenpairs") {
    const ParetoEigenpair ends = pareto_eigenpair(make_family("path", {3}), std::vector<Vertex>{0, 2});
    CHECK(ends.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ends.vector[0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ends.vector[1] == 0.0);
    CHECK(ends.vector[2] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));

    const ParetoEigenpair k3 = pareto_eigenpair(make_family("complete", {3}), std::vector<Vertex>{0, 1, 2});
    CHECK(k3.value == doctest::Approx(2.0).epsilon(1e-12));
    for (double x : k3.vector) CHECK(x == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));

    // largest root of l^3 - 14 l - 12
    const ParetoEigenpair p4 = pareto_eigenpair(make_family("path", {4}), std::vector<Vertex>{0, 2, 3});
    const double l = p4.value;
    CHECK(std::abs(l * l * l - 14 * l - 12) < 1e-9);
    CHECK(l == doctest::Approx(4.113090584325).epsilon(1e-12));
    CHECK(p4.support == std::vector<Vertex>{0, 2, 3});
    CHECK(p4.vector[1] == 0.0);
    for (int v : {0, 2, 3}) CHECK(p4.vector[v] > 0.0);
}

TEST_CASE("distinct principal submatrix counts") {
    CHECK(distinct_submatrix_count(make_family("complete", {3})) == 3);
    CHECK(distinct_submatrix_count(make_family("star", {4})) == 6);
    // {0}, {0,1}, {0,2}, {0,1,2}
    CHECK(distinct_submatrix_count(make_family("path", {3})) == 4);
    CHECK_THROWS_AS(distinct_submatrix_count(make_family("path", {9})), CapExceeded);
    for (const Graph& g : random_graph_batch(20, 2, 6, 31)) CHECK(pareto_count(g) <= distinct_submatrix_count(g));
}

TEST_CASE("spectrum agrees with an independent enumeration") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 6; ++n)
        for (auto& g : connected_graphs(n)) graphs.push_back(std::move(g));
    for (auto& g : random_graph_batch(200, 7, 10, 2024)) graphs.push_back(std::move(g));

    long long bad_values = 0, bad_rho2 = 0;
    for (const Graph& g : graphs) {
        const DistanceMatrix dm = distance_matrix(g);
        const ParetoSpectrum s = pareto_spectrum(dm);
        const auto ref = oracle::pareto_values(dm);
        bool same = s.size() == ref.size();
        for (std::size_t i = 0; same && i < ref.size(); ++i) same = std::abs(s.values[i] - ref[i]) <= 1e-9;
        if (!same) ++bad_values;
        if (g.order() >= 2) {
            const double fast = rho2_fast(g, dm).value;
            if (std::abs(fast - rho_k(s, 2)) > 1e-9 || std::abs(fast - oracle::rho2(dm)) > 1e-9) ++bad_rho2;
        }
    }
    CHECK(bad_values == 0);
    CHECK(bad_rho2 == 0);
}

TEST_CASE("structural invariants of the spectrum") {
    for (const Graph& g : small_classes()) {
        const DistanceMatrix dm = distance_matrix(g);
        const ParetoSpectrum s = pareto_spectrum(dm);
        INFO(describe(g));
        CHECK(s.values.front() == 0.0);
        CHECK(std::popcount(s.witnesses.front()) == 1);
        const int n = g.order();
        CHECK(s.witnesses.back() == (VertexMask{1} << n) - 1);
        CHECK(s.values.back() == doctest::Approx(spectral_radius(SymMatrix::from_distances(dm)).value).epsilon(1e-12));
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s.values[i] - s.values[i - 1] > kDedupTolerance);
        for (int d = 0; d <= diameter(dm); ++d)
            CHECK(std::any_of(s.values.begin(), s.values.end(), [&](double v) { return std::abs(v - d) < 1e-9; }));
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto pair = pareto_eigenpair(dm, s.witness_vertices(i));
            CHECK(pair.value == doctest::Approx(s.values[i]).epsilon(1e-12));
            const SymMatrix m = SymMatrix::from_distances(dm);
            for (int r = 0; r < n; ++r) {
                double mx = 0.0;
                for (int c = 0; c < n; ++c) mx += m(r, c) * pair.vector[c];
                CHECK(mx >= pair.value * pair.vector[r] - 1e-9);
                CHECK(pair.vector[r] >= 0.0);
            }
            CHECK(std::abs(rayleigh(m, pair.vector) - pair.value) <= 1e-9);
        }
    }
}

TEST_CASE("count lower bound and its equality cases") {
    int equal = 0;
    for (const Graph& g : small_classes()) {
        const int n = g.order();
        if (n < 2) continue;
        const int d = diameter(distance_matrix(g));
        const int count = pareto_count(g);
        INFO(describe(g));
        CHECK(count >= n + d - 1);
        if (count == n + d - 1) {
            ++equal;
            const bool p3 = n == 3 && is_path(g);
            const bool k4e = n == 4 && is_complete_minus_edge(g);
            const bool c4 = isomorphic(g, make_family("cycle", {4}));
            CHECK((is_complete(g) || p3 || k4e || c4));
        }
    }
    // K2..K6, P3, K4-e, C4
    CHECK(equal == 8);
}

TEST_CASE("k-th largest value is at least n-k") {
    for (const Graph& g : small_classes()) {
        const int n = g.order();
        const ParetoSpectrum s = pareto_spectrum(g);
        bool all_equal = true;
        for (int k = 1; k <= n; ++k) {
            CHECK(rho_k(s, k) >= n - k - 1e-9);
            all_equal = all_equal && std::abs(rho_k(s, k) - (n - k)) <= 1e-9;
        }
        CHECK(all_equal == is_complete(g));
    }
}

TEST_CASE("rho2 as a constrained maximum of the quadratic form") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const Graph& g : small_classes()) {
        const int n = g.order();
        if (n < 2) continue;
        const SymMatrix m = SymMatrix::from_distances(distance_matrix(g));
        const double r2 = rho2_fast(g).value;
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<double> x(static_cast<std::size_t>(n));
        double best = 0.0;
        for (int t = 0; t < 500; ++t) {
            const int hole = pick(rng);
            for (int i = 0; i < n; ++i) x[i] = i == hole ? 0.0 : unit(rng);
            if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) continue;
            best = std::max(best, rayleigh(m, x));
        }
        INFO(describe(g));
        CHECK(best <= r2 + 1e-9);
        const ParetoEigenpair pair = rho2_eigenpair(g);
        CHECK(std::count(pair.vector.begin(), pair.vector.end(), 0.0) >= 1);
        CHECK(rayleigh(m, pair.vector) == doctest::Approx(r2).epsilon(1e-10));
    }
}
