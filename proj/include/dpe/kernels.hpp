#pragma once

// Data-parallel kernels. Each has an OpenMP version and a serial reference
// that shares no code path with it beyond the eigenvalue primitive; tests
// compare the two.

#include "dpe/graph.hpp"
#include "dpe/pareto.hpp"

#include <cstdint>
#include <vector>

namespace dpe::kernels {

/// Worker count actually used for `jobs` (0 = OpenMP default, 1 without OpenMP).
int resolve_jobs(int jobs);

// --- principal-submatrix enumeration -------------------------------------

/// Subsets in ascending (cardinality, lexicographic) order, each value
/// inserted into a sorted table unless an equal one is present.
ParetoSpectrum enumerate_serial(const DistanceMatrix& dm, double tol);

/// Mask range split across workers; per-worker candidates are sorted, merged
/// and clustered once. The result does not depend on `jobs`.
ParetoSpectrum enumerate_parallel(const DistanceMatrix& dm, double tol, int jobs);

/// |Pi(G)| only; used by sweeps that evaluate many small graphs.
int count_distinct_roots(const DistanceMatrix& dm, double tol);

// --- labelled connected-graph sweep --------------------------------------

struct CountSweep {
    int max_count = 0;
    std::vector<std::uint64_t> witness_masks;  ///< ascending edge masks attaining max_count
    long long connected_graphs = 0;
    long long masks_scanned = 0;
};

/// Edge mask bit b refers to edge_pairs(n)[b].
std::vector<Edge> edge_pairs(int n);
Graph graph_from_mask(int n, std::uint64_t mask);
/// Union-find connectivity of an edge mask.
bool mask_connected(int n, std::uint64_t mask);

CountSweep max_count_serial(int n, double tol);
CountSweep max_count_parallel(int n, double tol, int jobs);

// --- trees from Pruefer sequences ----------------------------------------

/// All n^(n-2) labelled trees decoded and deduplicated by canonical form;
/// one representative per isomorphism class, sorted by canonical code.
std::vector<Graph> unique_trees_serial(int n);
std::vector<Graph> unique_trees_parallel(int n, int jobs);

Graph tree_from_pruefer(int n, std::span<const int> seq);

} // namespace dpe::kernels
