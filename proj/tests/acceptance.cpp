// Acceptance criteria, one per --criterion N (all of them without the flag).
// Each prints a single PASS/FAIL line plus indented detail lines.

#include "dpe/canonical.hpp"
#include "dpe/kernels.hpp"
#include "dpe/laws.hpp"
#include "dpe/pareto.hpp"
#include "dpe/spectral.hpp"
#include "dpe/verify.hpp"

#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace dpe;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

std::string fmt(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

bool same_values(const std::vector<double>& a, const std::vector<double>& b, double tol = 1e-9) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close(a[i], b[i], tol)) return false;
    return true;
}

std::vector<Graph> connected_up_to(int hi) {
    std::vector<Graph> out;
    for (int n = 1; n <= hi; ++n)
        for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
    return out;
}

// ---------------------------------------------------------------------------

Outcome small_spectra() {
    Outcome o;
    const auto p3 = pareto_spectrum(make_family("path", {3})).values;
    o.expect(same_values(p3, {0, 1, 2, 1 + std::sqrt(3.0)}), "Pi(P3) = {0, 1, 2, 1+sqrt3}");
    for (int n = 2; n <= 10; ++n) {
        std::vector<double> ladder(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ladder[i] = i;
        o.expect(same_values(pareto_spectrum(make_family("complete", {n})).values, ladder),
                 "Pi(K_" + std::to_string(n) + ") = {0..n-1}");
    }
    return o;
}

Outcome pareto_counts() {
    Outcome o;
    const int paths[] = {2, 4, 7};
    for (int n = 2; n <= 4; ++n) {
        const int c = pareto_count(make_family("path", {n}));
        o.expect(c == paths[n - 2], "|Pi(P" + std::to_string(n) + ")| = " + std::to_string(paths[n - 2]) +
                                        ", got " + std::to_string(c));
    }

    const ExtremalResult five = extremal_search(5);
    o.note("n=5: max " + std::to_string(five.max_count) + ", " + std::to_string(five.witnesses.size()) +
           " witnesses over " + std::to_string(five.connected_graphs) + " connected labelled graphs");
    o.expect(five.max_count == 13, "extremal_search(5) max 13");
    o.expect(five.witnesses.size() == 3, "exactly three witnesses at n=5");
    const Graph spider(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    const Graph triangle_tail(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    for (const Graph& want : {make_family("path", {5}), spider, triangle_tail}) {
        const bool hit = std::any_of(five.witnesses.begin(), five.witnesses.end(),
                                     [&](const Graph& w) { return isomorphic(w, want); });
        o.expect(hit, describe(want) + " among the n=5 witnesses");
    }

    const ExtremalResult six = extremal_search(6);
    o.note("n=6: max " + std::to_string(six.max_count) + ", " + std::to_string(six.witnesses.size()) + " witness(es)");
    o.expect(six.max_count == 30, "extremal_search(6) max 30");
    o.expect(six.witnesses.size() == 1, "unique witness at n=6");
    const Graph g3(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}});
    o.expect(!six.witnesses.empty() && isomorphic(six.witnesses[0], g3), "n=6 witness is the path with a triangle on 1-2");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    long long graphs = 0, bad_parallel = 0, bad_oracle = 0, bad_rho2 = 0;
    for (const Graph& g : connected_up_to(6)) {
        ++graphs;
        const DistanceMatrix dm = distance_matrix(g);
        const ParetoSpectrum ref = kernels::enumerate_serial(dm, kDedupTolerance);
        bool same = true;
        for (int jobs : {1, 2, 3, 5}) {
            const ParetoSpectrum par = kernels::enumerate_parallel(dm, kDedupTolerance, jobs);
            same = same && par.witnesses == ref.witnesses && same_values(par.values, ref.values);
        }
        if (!same) ++bad_parallel;
        if (!same_values(ref.values, oracle::pareto_values(dm))) ++bad_oracle;
        if (g.order() >= 2 && !close(rho2_fast(g, dm).value, rho_k(ref, 2))) ++bad_rho2;
    }
    o.note(std::to_string(graphs) + " connected labelled graphs of order <= 6");
    o.expect(bad_parallel == 0, std::to_string(bad_parallel) + " parallel/serial disagreements");
    o.expect(bad_oracle == 0, std::to_string(bad_oracle) + " disagreements with the dense-solver oracle");
    o.expect(bad_rho2 == 0, std::to_string(bad_rho2) + " rho2_fast mismatches against the full spectrum");
    return o;
}

Outcome closed_forms() {
    Outcome o;
    double worst = 0.0;
    int checked = 0;
    auto run = [&](const char* id, std::vector<int> params) {
        const FormulaCheck c = check_closed_form(id, params);
        ++checked;
        worst = std::max(worst, c.difference);
        if (!(c.difference <= 1e-9)) {
            std::string p;
            for (int x : params) p += " " + std::to_string(x);
            o.expect(false, std::string(id) + p + ": formula " + fmt(c.formula.value()) + " vs brute " +
                                (c.brute.empty() ? "-" : fmt(c.brute.back())));
        }
    };
    for (int n = 2; n <= 10; ++n) run("star_radius", {n});
    for (int n = 3; n <= 10; ++n) {
        run("kn_minus_e_radius", {n});
        run("rho2_kn_minus_e", {n});
    }
    for (int a = 1; a <= 9; ++a)
        for (int b = a; a + b <= 10; ++b) run("rho2_kab", {a, b});
    for (int n = 2; n <= 10; ++n) run("rho2_k_pendant", {n});
    for (int n = 5; n <= 10; ++n) run("rho2_two_nonincident", {n});
    o.note(std::to_string(checked) + " instances, largest difference " + fmt(worst, 3));
    return o;
}

Outcome bound_sweep(const BoundSweepReport& r) {
    Outcome o;
    o.note(std::to_string(r.graphs) + " graphs (exhaustive to order " + std::to_string(r.exhaustive_order) + ", " +
           std::to_string(r.random_graphs) + " random of order 7..10)");
    for (const BoundStats& s : r.stats) {
        std::ostringstream line;
        line << bound_name(s.id) << ": applicable " << s.applicable << ", tight " << s.tight << ", violations "
             << s.violations << ", characterisation mismatches " << s.mismatches << ", min slack " << fmt(s.min_slack, 6);
        o.note(line.str());
        o.expect(s.violations == 0, std::string(bound_name(s.id)) + " has " + std::to_string(s.violations) + " violations");
        o.expect(s.mismatches == 0, std::string(bound_name(s.id)) + " equality cases differ from " +
                                        (s.characterization.empty() ? "its family" : s.characterization));
    }
    int shown = 0;
    for (const BoundIssue& issue : r.issues) {
        if (shown == 12) break;
        bool first_of_kind = true;
        for (const BoundIssue& prev : r.issues) {
            if (&prev == &issue) break;
            if (prev.id == issue.id && prev.kind == issue.kind) first_of_kind = false;
        }
        if (!first_of_kind) continue;
        ++shown;
        o.note("example " + issue.kind + " of " + std::string(bound_name(issue.id)) + ": " + describe(issue.graph) +
               " bound " + fmt(issue.result.bound_value) + " actual " + fmt(issue.result.actual_value));
    }
    return o;
}

Outcome rho2_vs_lambda2(const BoundSweepReport& r) {
    Outcome o;
    const BoundStats& s = r.at(BoundId::rho2_vs_lambda2);
    o.note(std::to_string(s.applicable) + " graphs, minimum observed rho2 - lambda2 = " + fmt(s.min_slack));
    o.expect(s.applicable > 0, "at least one graph tested");
    o.expect(s.violations == 0 && s.min_slack > 0.0, "rho2 > lambda2 on every graph");
    return o;
}

Outcome convexity() {
    Outcome o;
    const SweepReport r = convexity_sweep(7);
    o.note(std::to_string(r.instances) + " trees, " + std::to_string(r.checks) + " eigenpairs, min gap " +
           fmt(r.metric("min_gap"), 6));
    o.expect(r.violations == 0, std::to_string(r.violations) + " violations");
    o.expect(r.inconclusive == 0, std::to_string(r.inconclusive) + " inconclusive");
    for (const auto& f : r.failures) o.note("  " + f.instance + ": " + (f.counterexample ? f.counterexample->note : ""));
    return o;
}

Outcome monotonicity() {
    Outcome o;
    const SweepReport r = monotonicity_sweep(6);
    o.note(std::to_string(r.checks) + " (graph, edge) pairs, least rho2 gain " + fmt(r.metric("min_gain"), 6) + ", " +
           std::to_string(r.inconclusive) + " strict cases within tolerance");
    o.expect(r.violations == 0, std::to_string(r.violations) + " violations");
    for (const auto& f : r.failures) o.note("  " + f.instance + ": " + (f.counterexample ? f.counterexample->note : ""));

    const PropertyReport w6 = check_edge_monotonicity(make_family("wheel", {6}), {0, 1});
    o.note("W6 minus a spoke: rho2 " + fmt(w6.metric("rho2_before")) + " -> " + fmt(w6.metric("rho2_after")));
    o.expect(close(w6.metric("rho2_before"), 6.0) && close(w6.metric("rho2_after"), 6.0), "W6 spoke deletion keeps rho2 = 6");
    return o;
}

Outcome tree_extremes() {
    Outcome o;
    const SweepReport r = tree_extremes_sweep(8);
    for (int n = 3; n <= 8; ++n)
        o.note("n=" + std::to_string(n) + ": rho2(P) " + fmt(r.metric("rho2_path_" + std::to_string(n))) + ", rho2(S) " +
               fmt(r.metric("rho2_star_" + std::to_string(n))));
    o.expect(r.violations == 0, std::to_string(r.violations) + " orders where the path or star is not the extreme");
    o.expect(r.inconclusive == 0, std::to_string(r.inconclusive) + " inconclusive orders");
    return o;
}

Outcome star_spectrum() {
    Outcome o;
    for (int n = 3; n <= 10; ++n) {
        const ParetoSpectrum s = pareto_spectrum(make_family("star", {n}));
        o.expect(static_cast<int>(s.size()) == 2 * (n - 1),
                 "|Pi(S" + std::to_string(n) + ")| = " + std::to_string(2 * (n - 1)) + ", got " + std::to_string(s.size()));

        // sub-stars with k leaves give rho(D(S_{k+1})); leaf sets give 2(J_k - I_k)
        std::vector<double> expected{0.0, 1.0};
        for (int m = 3; m <= n; ++m) expected.push_back(closed_form("star_radius", {m}).value());
        for (int k = 2; k <= n - 1; ++k) expected.push_back(2.0 * (k - 1));
        std::sort(expected.begin(), expected.end());
        o.expect(same_values(s.values, expected), "Pi(S" + std::to_string(n) + ") equals the sub-star / leaf-set values");

        auto star_rho = [](int m) {
            return spectral_radius(SymMatrix::from_distances(distance_matrix(make_family("star", {m})))).value;
        };
        for (int k = 2; k <= n - 1; ++k) {
            const double leaves = 2.0 * (k - 1);
            o.expect(star_rho(k + 1) > leaves && leaves > star_rho(k),
                     "rho(D(S_" + std::to_string(k + 1) + ")) > 2(k-1) > rho(D(S_" + std::to_string(k) + "))");
        }
    }
    o.note("printed mu_{2k-1} = k-1+sqrt(k^2-3k+3) against brute force rho(D(S_k)); brute force is authoritative:");
    for (int k = 3; k <= 6; ++k) {
        const double printed = k - 1 + std::sqrt(static_cast<double>(k * k - 3 * k + 3));
        const double brute = spectral_radius(SymMatrix::from_distances(distance_matrix(make_family("star", {k})))).value;
        o.note("  k=" + std::to_string(k) + ": printed " + fmt(printed) + ", brute " + fmt(brute) + ", difference " +
               fmt(printed - brute, 6));
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

const BoundSweepReport& shared_bound_sweep() {
    static const BoundSweepReport r = bounds_sweep(6, 500);
    return r;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "Pi(P3) and Pi(K_n), n = 2..10", 1.0, small_spectra},
        {2, "Pareto counts and extremal graphs at n = 5, 6", 300.0, pareto_counts},
        {3, "parallel enumeration, serial reference and oracle agree for n <= 6", 0.0, oracle_equivalence},
        {4, "closed forms match brute force up to order 10", 0.0, closed_forms},
        {5, "bound sweep: no violations, equality cases as characterised", 0.0, [] { return bound_sweep(shared_bound_sweep()); }},
        {6, "rho2 > lambda2 on every tested graph", 0.0, [] { return rho2_vs_lambda2(shared_bound_sweep()); }},
        {7, "eigenvector convexity on trees n <= 7", 0.0, convexity},
        {8, "edge-deletion monotonicity n <= 6 and the W6 spoke", 0.0, monotonicity},
        {9, "path and star extremes among trees, n = 3..8", 120.0, tree_extremes},
        {10, "star spectrum cardinality and interleaving, n = 3..10", 0.0, star_spectrum},
    };
    return list;
}

bool run_one(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0) o.expect(secs < c.budget_seconds, "runtime " + fmt(secs, 3) + " s over " + fmt(c.budget_seconds, 3) + " s");
    std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    return o.pass;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria().size())) {
        std::cerr << "no criterion " << only << "\n";
        return 2;
    }
    bool all = true;
    for (const Criterion& c : criteria())
        if (only == 0 || c.id == only) all = run_one(c) && all;
    return all ? 0 : 1;
}
