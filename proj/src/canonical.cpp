#include "dpe/canonical.hpp"

#include "dpe/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dpe {

std::vector<int> canonical_matrix_form(const std::vector<int>& m, int k) {
    if (k > kMaxCanonicalOrder) throw CapExceeded("canonical_matrix_form: order above 8");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best(m);
    std::vector<int> cur(m.size());
    do {
        // Abandon a permutation as soon as its prefix exceeds the best one.
        bool smaller = false, larger = false;
        for (int i = 0; i < k && !larger; ++i)
            for (int j = 0; j < k; ++j) {
                const int x = m[perm[i] * k + perm[j]];
                cur[i * k + j] = x;
                if (!smaller) {
                    if (x < best[i * k + j]) smaller = true;
                    else if (x > best[i * k + j]) {
                        larger = true;
                        break;
                    }
                }
            }
        if (smaller) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
    // perm[new] = old
    std::uint64_t code = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
    return code;
}

std::vector<int> best_permutation(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) throw CapExceeded("canonical_graph_code: order above 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Search only orderings that list vertices by non-increasing degree. Any
    // isomorphism maps this set of orderings onto the other graph's, so the
    // maximum over it is still an invariant.
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
    std::vector<int> best = perm;
    std::uint64_t best_code = code_under(g, perm);
    // Permute within blocks of equal degree.
    std::vector<std::pair<int, int>> blocks;
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && deg[perm[e]] == deg[perm[s]]) ++e;
        blocks.emplace_back(s, e);
        s = e;
    }
    // Odometer over per-block permutations.
    auto advance = [&]() {
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
            if (std::next_permutation(perm.begin() + it->first, perm.begin() + it->second)) return true;
        }
        return false;
    };
    while (advance()) {
        const auto c = code_under(g, perm);
        if (c > best_code) {
            best_code = c;
            best = perm;
        }
    }
    return best;
}

} // namespace

std::uint64_t canonical_graph_code(const Graph& g) { return code_under(g, best_permutation(g)); }

Graph canonical_graph(const Graph& g) {
    const auto perm = best_permutation(g);
    std::vector<int> inv(g.order());
    for (int i = 0; i < g.order(); ++i) inv[perm[i]] = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(inv[e.u], inv[e.v]);
    return Graph(g.order(), edges, g.name());
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_graph_code(a) == canonical_graph_code(b);
}

namespace {

std::string rooted_code(const Graph& t, int v, int parent) {
    std::vector<std::string> kids;
    for (std::uint64_t m = t.neighbours(v); m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (w != parent) kids.push_back(rooted_code(t, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ')';
    return s;
}

} // namespace

std::string tree_code(const Graph& t) {
    const int n = t.order();
    if (n == 0) return {};
    if (n == 1) return "()";
    // Strip leaves layer by layer until one or two centres remain.
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (std::uint64_t m = t.neighbours(v); m; m &= m - 1) {
                const int w = std::countr_zero(m);
                if (--deg[w] == 1) next.push_back(w);
            }
        layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
        auto code = rooted_code(t, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

} // namespace dpe
