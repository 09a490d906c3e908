#include "dpe/pareto.hpp"

#include "dpe/canonical.hpp"
#include "dpe/error.hpp"
#include "dpe/kernels.hpp"
#include "dpe/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dpe {

bool witness_less(VertexMask a, VertexMask b) noexcept {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    // Same size: the set holding the lowest differing vertex comes first.
    const VertexMask low = (a ^ b) & (~(a ^ b) + 1);
    return (a & low) != 0;
}

std::vector<Vertex> mask_vertices(VertexMask m) {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

VertexMask vertices_mask(std::span<const Vertex> vs) {
    VertexMask m = 0;
    for (Vertex v : vs) {
        if (v < 0 || v >= 32) throw std::invalid_argument("vertex " + std::to_string(v) + " outside mask range");
        m |= VertexMask{1} << v;
    }
    return m;
}

bool same_eigenvalue(double a, double b, double tol) noexcept {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

std::vector<Vertex> ParetoSpectrum::witness_vertices(std::size_t i) const { return mask_vertices(witnesses.at(i)); }

ParetoSpectrum pareto_spectrum(const DistanceMatrix& dm, const EnumerationOptions& opts) {
    const int cap = std::min(opts.max_order, kHardMaxOrder);
    if (dm.order() > cap)
        throw CapExceeded("pareto_spectrum: order " + std::to_string(dm.order()) + " exceeds cap " +
                          std::to_string(cap));
    if (dm.order() < 1) throw std::invalid_argument("pareto_spectrum: empty graph");
    return kernels::enumerate_parallel(dm, opts.tolerance, opts.jobs);
}

ParetoSpectrum pareto_spectrum(const Graph& g, const EnumerationOptions& opts) {
    const int cap = std::min(opts.max_order, kHardMaxOrder);
    if (g.order() > cap)
        throw CapExceeded("pareto_spectrum: order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(cap));
    return pareto_spectrum(distance_matrix(g), opts);
}

int pareto_count(const Graph& g, const EnumerationOptions& opts) {
    return static_cast<int>(pareto_spectrum(g, opts).size());
}

double rho_k(const ParetoSpectrum& s, int k) {
    if (k < 1 || k > static_cast<int>(s.size()))
        throw std::out_of_range("rho_k: k = " + std::to_string(k) + " outside [1, " + std::to_string(s.size()) + "]");
    return s.values[s.size() - k];
}

double mu_k(const ParetoSpectrum& s, int k) {
    if (k < 1 || k > static_cast<int>(s.size()))
        throw std::out_of_range("mu_k: k = " + std::to_string(k) + " outside [1, " + std::to_string(s.size()) + "]");
    return s.values[k - 1];
}

double rho_k(const Graph& g, int k, const EnumerationOptions& opts) { return rho_k(pareto_spectrum(g, opts), k); }
double mu_k(const Graph& g, int k, const EnumerationOptions& opts) { return mu_k(pareto_spectrum(g, opts), k); }

Rho2 rho2_fast(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("rho2_fast: needs at least two vertices");
    if (n > kHardMaxOrder) throw CapExceeded("rho2_fast: order above 30");
    const std::vector<double> full(dm.entries().begin(), dm.entries().end());
    const VertexMask all = (VertexMask{1} << n) - 1;
    Rho2 best{-1.0, -1};
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) <= 1) continue;
        const double r = kernel::perron_root(full.data(), n, all & ~(VertexMask{1} << v));
        if (best.witness < 0 || (r > best.value && !same_eigenvalue(r, best.value, 1e-12))) best = {r, v};
    }
    if (best.witness < 0) best = {kernel::perron_root(full.data(), n, all & ~VertexMask{1}), 0};
    return best;
}

Rho2 rho2_fast(const Graph& g) { return rho2_fast(g, distance_matrix(g)); }

ParetoEigenpair pareto_eigenpair(const DistanceMatrix& dm, std::span<const Vertex> support) {
    if (support.empty()) throw std::invalid_argument("pareto_eigenpair: empty support");
    const SymMatrix d = SymMatrix::from_distances(dm);
    const SymMatrix sub = principal_submatrix(d, support);
    const EigenResult perron = spectral_radius(sub);

    ParetoEigenpair pair;
    pair.value = perron.value;
    pair.support.assign(support.begin(), support.end());
    std::sort(pair.support.begin(), pair.support.end());
    pair.vector.assign(dm.order(), 0.0);
    for (std::size_t i = 0; i < pair.support.size(); ++i) pair.vector[pair.support[i]] = perron.vector[i];

    // A x >= lambda x, and lambda equals the Rayleigh quotient.
    const double scale = std::max(1.0, std::abs(pair.value));
    for (int i = 0; i < dm.order(); ++i) {
        double ax = 0.0;
        for (int j = 0; j < dm.order(); ++j) ax += d(i, j) * pair.vector[j];
        if (ax < pair.value * pair.vector[i] - 1e-9 * scale)
            throw NumericalError("Pareto eigenpair violates complementarity at vertex " + std::to_string(i));
    }
    if (std::abs(rayleigh(d, pair.vector) - pair.value) > 1e-9 * scale)
        throw NumericalError("Pareto eigenpair Rayleigh quotient differs from its value");
    return pair;
}

ParetoEigenpair pareto_eigenpair(const Graph& g, std::span<const Vertex> support) {
    return pareto_eigenpair(distance_matrix(g), support);
}

long long distinct_submatrix_count(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) throw CapExceeded("distinct_submatrix_count: order above 8");
    const DistanceMatrix dm = distance_matrix(g);
    std::set<std::vector<int>> classes;
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
        const auto vs = mask_vertices(m);
        const int k = static_cast<int>(vs.size());
        std::vector<int> sub(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i * k + j] = dm(vs[i], vs[j]);
        auto form = canonical_matrix_form(sub, k);
        form.insert(form.begin(), k);
        classes.insert(std::move(form));
    }
    return static_cast<long long>(classes.size());
}

} // namespace dpe
