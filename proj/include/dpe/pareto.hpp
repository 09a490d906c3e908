#pragma once

#include "dpe/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dpe {

/// Vertex subset as a bit mask (bit i = vertex i).
using VertexMask = std::uint32_t;

inline constexpr int kDefaultMaxOrder = 20;
/// Subset masks are 32-bit and the kernels use fixed 32x32 scratch.
inline constexpr int kHardMaxOrder = 30;
/// Two Perron roots a, b are one Pareto eigenvalue iff |a - b| <= tol * max(1, b).
inline constexpr double kDedupTolerance = 1e-8;

struct EnumerationOptions {
    int max_order = kDefaultMaxOrder;
    double tolerance = kDedupTolerance;
    /// Worker count; 0 lets OpenMP decide.
    int jobs = 0;
};

/// Distinct distance Pareto eigenvalues in ascending order. witnesses[i] is the
/// smallest subset (by cardinality, then lexicographically) whose principal
/// submatrix has Perron root values[i].
struct ParetoSpectrum {
    std::vector<double> values;
    std::vector<VertexMask> witnesses;
    double dedup_tolerance = kDedupTolerance;
    int graph_order = 0;

    std::size_t size() const noexcept { return values.size(); }
    std::vector<Vertex> witness_vertices(std::size_t i) const;

    friend bool operator==(const ParetoSpectrum&, const ParetoSpectrum&) = default;
};

/// Pareto eigenvalue with its support J and a unit Pareto eigenvector that is
/// positive on J and zero elsewhere.
struct ParetoEigenpair {
    double value = 0.0;
    std::vector<Vertex> support;
    std::vector<double> vector;
};

struct Rho2 {
    double value = 0.0;
    Vertex witness = 0;  ///< vertex whose deletion attains the value (smallest label on ties)
};

/// Order used for witnesses: cardinality first, then lexicographic on the sorted vertex list.
bool witness_less(VertexMask a, VertexMask b) noexcept;
std::vector<Vertex> mask_vertices(VertexMask m);
VertexMask vertices_mask(std::span<const Vertex> vs);

/// True when a and b count as the same Pareto eigenvalue under `tol`.
bool same_eigenvalue(double a, double b, double tol) noexcept;

/// Every nonempty principal submatrix of D(G), deduplicated. Throws
/// Disconnected or CapExceeded (order > max_order).
ParetoSpectrum pareto_spectrum(const Graph& g, const EnumerationOptions& opts = {});
ParetoSpectrum pareto_spectrum(const DistanceMatrix& dm, const EnumerationOptions& opts = {});

int pareto_count(const Graph& g, const EnumerationOptions& opts = {});

/// k-th largest / smallest distinct value, k counted from 1. Throws std::out_of_range.
double rho_k(const ParetoSpectrum& s, int k);
double mu_k(const ParetoSpectrum& s, int k);
double rho_k(const Graph& g, int k, const EnumerationOptions& opts = {});
double mu_k(const Graph& g, int k, const EnumerationOptions& opts = {});

/// Second largest Pareto eigenvalue from single-vertex deletions, skipping
/// pendant vertices (K2, where both are pendant, deletes either).
Rho2 rho2_fast(const Graph& g);
Rho2 rho2_fast(const Graph& g, const DistanceMatrix& dm);

/// Perron pair of D(G)[J] embedded at J. Verifies both Pareto conditions and
/// throws NumericalError if either fails.
ParetoEigenpair pareto_eigenpair(const Graph& g, std::span<const Vertex> support);
ParetoEigenpair pareto_eigenpair(const DistanceMatrix& dm, std::span<const Vertex> support);

/// Number of principal submatrices of D(G) up to permutation similarity (n <= 8).
long long distinct_submatrix_count(const Graph& g);

} // namespace dpe
