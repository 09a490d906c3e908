// Serial reference kernels. Kept simple and independent of the parallel
// versions so the two can be compared in tests and benchmarks.

#include "dpe/canonical.hpp"
#include "dpe/kernels.hpp"
#include "dpe/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dpe::kernels {

ParetoSpectrum enumerate_serial(const DistanceMatrix& dm, double tol) {
    const int n = dm.order();
    const std::vector<double> full(dm.entries().begin(), dm.entries().end());
    ParetoSpectrum out;
    out.dedup_tolerance = tol;
    out.graph_order = n;

    std::vector<int> idx;
    for (int card = 1; card <= n; ++card) {
        // Combinations of `card` vertices in lexicographic order.
        idx.resize(card);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexMask mask = 0;
            for (int v : idx) mask |= VertexMask{1} << v;
            const double value = kernel::perron_root(full.data(), n, mask);

            const auto pos = std::lower_bound(out.values.begin(), out.values.end(), value);
            const bool seen = (pos != out.values.end() && same_eigenvalue(value, *pos, tol)) ||
                              (pos != out.values.begin() && same_eigenvalue(value, *std::prev(pos), tol));
            if (!seen) {
                const auto at = pos - out.values.begin();
                out.values.insert(pos, value);
                out.witnesses.insert(out.witnesses.begin() + at, mask);
            }

            int i = card - 1;
            while (i >= 0 && idx[i] == n - card + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

CountSweep max_count_serial(int n, double tol) {
    CountSweep sweep;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        ++sweep.masks_scanned;
        const Graph g = graph_from_mask(n, mask);
        if (!is_connected(g)) continue;
        ++sweep.connected_graphs;
        const int count = static_cast<int>(enumerate_serial(distance_matrix(g), tol).size());
        if (count > sweep.max_count) {
            sweep.max_count = count;
            sweep.witness_masks.clear();
        }
        if (count == sweep.max_count) sweep.witness_masks.push_back(mask);
    }
    return sweep;
}

std::vector<Graph> unique_trees_serial(int n) {
    if (n == 1) return {Graph(1, {})};
    std::map<std::string, Graph> seen;
    std::vector<int> seq(std::max(n - 2, 0), 0);
    while (true) {
        Graph t = tree_from_pruefer(n, seq);
        auto code = tree_code(t);
        seen.try_emplace(std::move(code), std::move(t));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    std::vector<Graph> out;
    for (auto& [code, t] : seen) out.push_back(std::move(t));
    return out;
}

} // namespace dpe::kernels
