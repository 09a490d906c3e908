#include "dpe/error.hpp"
#include "dpe/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dpe::kernels {

int resolve_jobs(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

std::vector<Edge> edge_pairs(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return e;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    const auto pairs = edge_pairs(n);
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1U) edges.push_back(pairs[b]);
    return Graph(n, edges);
}

bool mask_connected(int n, std::uint64_t mask) {
    if (n <= 1) return true;
    std::array<int, 16> parent{};
    std::iota(parent.begin(), parent.begin() + n, 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b) {
            if (!((mask >> b) & 1U)) continue;
            const int ri = find(i), rj = find(j);
            if (ri != rj) {
                parent[ri] = rj;
                --components;
            }
        }
    return components == 1;
}

Graph tree_from_pruefer(int n, std::span<const int> seq) {
    if (n < 2 || static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("Pruefer sequence length must be n - 2 with n >= 2");
    std::vector<int> degree(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw std::invalid_argument("Pruefer entry out of range");
        ++degree[x];
    }
    std::vector<Edge> edges;
    for (int x : seq) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) {
            if (u < 0) u = v;
            else edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

} // namespace dpe::kernels
