// OpenMP kernels. Per-worker state is merged in worker order after the
// parallel region, and every merge is order-independent, so results do not
// depend on the worker count.

#include "dpe/canonical.hpp"
#include "dpe/kernels.hpp"
#include "dpe/spectral.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dpe::kernels {

namespace {

int worker_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

struct Candidate {
    double value;
    VertexMask witness;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return witness_less(a.witness, b.witness);
}

// Sorted candidates -> clusters. Each cluster reports its smallest witness and
// that witness's own Perron root.
ParetoSpectrum cluster(const std::vector<Candidate>& sorted, double tol, int n) {
    ParetoSpectrum out;
    out.dedup_tolerance = tol;
    out.graph_order = n;
    double anchor = 0.0;
    for (const Candidate& c : sorted) {
        if (out.values.empty() || !same_eigenvalue(c.value, anchor, tol)) {
            anchor = c.value;
            out.values.push_back(c.value);
            out.witnesses.push_back(c.witness);
        } else if (witness_less(c.witness, out.witnesses.back())) {
            out.values.back() = c.value;
            out.witnesses.back() = c.witness;
        }
    }
    return out;
}

// Fixed-size BFS distance rows for an edge mask over n <= 11 vertices.
void mask_distances(int n, std::uint64_t mask, double* d) {
    std::array<std::uint32_t, 16> adj{};
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if ((mask >> b) & 1U) {
                adj[i] |= 1U << j;
                adj[j] |= 1U << i;
            }
    for (int s = 0; s < n; ++s) {
        std::uint32_t seen = 1U << s, frontier = seen;
        d[s * n + s] = 0.0;
        for (int level = 1; frontier; ++level) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            next &= ~seen;
            for (std::uint32_t m = next; m; m &= m - 1) d[s * n + std::countr_zero(m)] = level;
            seen |= next;
            frontier = next;
        }
    }
}

int count_roots(const double* d, int n, double tol, std::vector<double>& scratch) {
    const VertexMask total = (VertexMask{1} << n) - 1;
    scratch.clear();
    for (VertexMask m = 1; m <= total; ++m) scratch.push_back(kernel::perron_root(d, n, m));
    std::sort(scratch.begin(), scratch.end());
    int count = 0;
    double anchor = 0.0;
    for (double v : scratch)
        if (count == 0 || !same_eigenvalue(v, anchor, tol)) {
            anchor = v;
            ++count;
        }
    return count;
}

} // namespace

ParetoSpectrum enumerate_parallel(const DistanceMatrix& dm, double tol, int jobs) {
    const int n = dm.order();
    const int workers = resolve_jobs(jobs);
    const std::vector<double> full(dm.entries().begin(), dm.entries().end());
    const std::int64_t total = (std::int64_t{1} << n) - 1;
    std::vector<std::vector<Candidate>> local(workers);

#pragma omp parallel num_threads(workers)
    {
        auto& mine = local[worker_id()];
#pragma omp for schedule(dynamic, 1024)
        for (std::int64_t m = 1; m <= total; ++m)
            mine.push_back({kernel::perron_root(full.data(), n, static_cast<VertexMask>(m)),
                            static_cast<VertexMask>(m)});
        std::sort(mine.begin(), mine.end(), candidate_less);
    }

    std::vector<Candidate> merged;
    merged.reserve(static_cast<std::size_t>(total));
    for (auto& part : local) {
        const auto mid = merged.insert(merged.end(), part.begin(), part.end());
        std::inplace_merge(merged.begin(), mid, merged.end(), candidate_less);
        part = {};
    }
    return cluster(merged, tol, n);
}

int count_distinct_roots(const DistanceMatrix& dm, double tol) {
    std::vector<double> full(dm.entries().begin(), dm.entries().end());
    std::vector<double> scratch;
    return count_roots(full.data(), dm.order(), tol, scratch);
}

CountSweep max_count_parallel(int n, double tol, int jobs) {
    const int workers = resolve_jobs(jobs);
    const int bits = n * (n - 1) / 2;
    const std::int64_t masks = std::int64_t{1} << bits;
    std::vector<CountSweep> local(workers);

#pragma omp parallel num_threads(workers)
    {
        auto& mine = local[worker_id()];
        std::vector<double> d(static_cast<std::size_t>(n) * n);
        std::vector<double> scratch;
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t m = 0; m < masks; ++m) {
            ++mine.masks_scanned;
            const auto mask = static_cast<std::uint64_t>(m);
            if (!mask_connected(n, mask)) continue;
            ++mine.connected_graphs;
            mask_distances(n, mask, d.data());
            const int count = count_roots(d.data(), n, tol, scratch);
            if (count > mine.max_count) {
                mine.max_count = count;
                mine.witness_masks.clear();
            }
            if (count == mine.max_count) mine.witness_masks.push_back(mask);
        }
    }

    CountSweep out;
    for (const auto& part : local) {
        out.masks_scanned += part.masks_scanned;
        out.connected_graphs += part.connected_graphs;
        if (part.max_count > out.max_count) {
            out.max_count = part.max_count;
            out.witness_masks.clear();
        }
        if (part.max_count == out.max_count)
            out.witness_masks.insert(out.witness_masks.end(), part.witness_masks.begin(), part.witness_masks.end());
    }
    std::sort(out.witness_masks.begin(), out.witness_masks.end());
    return out;
}

std::vector<Graph> unique_trees_parallel(int n, int jobs) {
    if (n <= 2) return unique_trees_serial(n);
    const int workers = resolve_jobs(jobs);
    std::int64_t sequences = 1;
    for (int i = 0; i < n - 2; ++i) sequences *= n;
    std::vector<std::map<std::string, Graph>> local(workers);

#pragma omp parallel num_threads(workers)
    {
        auto& mine = local[worker_id()];
        std::vector<int> seq(n - 2);
#pragma omp for schedule(static)
        for (std::int64_t s = 0; s < sequences; ++s) {
            std::int64_t x = s;
            for (int i = n - 3; i >= 0; --i, x /= n) seq[i] = static_cast<int>(x % n);
            Graph t = tree_from_pruefer(n, seq);
            auto code = tree_code(t);
            if (!mine.contains(code)) mine.emplace(std::move(code), std::move(t));
        }
    }

    // Keep, for each class, the representative from the smallest sequence index
    // seen by any worker: with a static schedule worker w covers a contiguous
    // block, so taking the first occurrence in worker order does this.
    std::map<std::string, Graph> merged;
    for (auto& part : local)
        for (auto& [code, t] : part) merged.try_emplace(code, std::move(t));
    std::vector<Graph> out;
    for (auto& [code, t] : merged) out.push_back(std::move(t));
    return out;
}

} // namespace dpe::kernels
