#include "dpe/spectral.hpp"

#include "dpe/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dpe {

SymMatrix::SymMatrix(int k) : k_(k), a_(static_cast<std::size_t>(k) * k, 0.0) {
    if (k < 0) throw std::invalid_argument("negative matrix order");
}

SymMatrix::SymMatrix(int k, std::vector<double> entries) : k_(k), a_(std::move(entries)) {
    if (k < 0 || a_.size() != static_cast<std::size_t>(k) * k)
        throw std::invalid_argument("SymMatrix: entry count does not match order");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                throw std::invalid_argument("SymMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") and its transpose differ");
}

SymMatrix SymMatrix::from_distances(const DistanceMatrix& dm) {
    const auto& d = dm.entries();
    return SymMatrix(dm.order(), std::vector<double>(d.begin(), d.end()));
}

namespace kernel {

int jacobi(double* a, int k, double* v) {
    if (v) {
        std::fill(v, v + static_cast<std::ptrdiff_t>(k) * k, 0.0);
        for (int i = 0; i < k; ++i) v[i * k + i] = 1.0;
    }
    if (k <= 1) return 0;

    double scale = 0.0;
    for (int i = 0; i < k * k; ++i) scale += a[i] * a[i];
    if (scale == 0.0) return 0;
    const double stop = 1e-30 * scale;  // (1e-15 * frobenius)^2

    for (int sweep = 1; sweep <= kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q) off += a[p * k + q] * a[p * k + q];
        if (off <= stop) return sweep - 1;

        for (int p = 0; p < k - 1; ++p) {
            for (int q = p + 1; q < k; ++q) {
                const double apq = a[p * k + q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q * k + q] - a[p * k + p]) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * k + p] -= t * apq;
                a[q * k + q] += t * apq;
                a[p * k + q] = a[q * k + p] = 0.0;
                for (int r = 0; r < k; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * k + p];
                    const double arq = a[r * k + q];
                    const double np = arp - s * (arq + tau * arp);
                    const double nq = arq + s * (arp - tau * arq);
                    a[r * k + p] = a[p * k + r] = np;
                    a[r * k + q] = a[q * k + r] = nq;
                }
                if (v) {
                    for (int r = 0; r < k; ++r) {
                        const double vrp = v[r * k + p];
                        const double vrq = v[r * k + q];
                        v[r * k + p] = vrp - s * (vrq + tau * vrp);
                        v[r * k + q] = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
}

double perron_root(const double* full, int n, std::uint32_t keep) {
    std::array<int, kMaxOrder> idx{};
    int k = 0;
    for (std::uint32_t m = keep; m; m &= m - 1) idx[k++] = std::countr_zero(m);
    if (k == 1) return full[idx[0] * n + idx[0]];
    if (k == 2) {
        // Closed form for [[a, b], [b, c]].
        const double a = full[idx[0] * n + idx[0]];
        const double c = full[idx[1] * n + idx[1]];
        const double b = full[idx[0] * n + idx[1]];
        const double h = 0.5 * (a - c);
        return 0.5 * (a + c) + std::sqrt(h * h + b * b);
    }
    std::array<double, kMaxOrder * kMaxOrder> a;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i * k + j] = full[idx[i] * n + idx[j]];
    jacobi(a.data(), k, nullptr);
    double best = a[0];
    for (int i = 1; i < k; ++i) best = std::max(best, a[i * k + i]);
    return best;
}

} // namespace kernel

double residual_norm(const SymMatrix& m, double value, std::span<const double> x) {
    const int k = m.order();
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
        double s = -value * x[i];
        for (int j = 0; j < k; ++j) s += m(i, j) * x[j];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

Eigensystem eigensystem(const SymMatrix& m) {
    const int k = m.order();
    if (k < 1) throw std::invalid_argument("eigensystem of an empty matrix");
    std::vector<double> a(m.entries().begin(), m.entries().end());
    std::vector<double> v(static_cast<std::size_t>(k) * k);
    kernel::jacobi(a.data(), k, v.data());

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x * k + x] < a[y * k + y]; });

    Eigensystem es;
    for (int c : order) {
        std::vector<double> vec(k);
        for (int r = 0; r < k; ++r) vec[r] = v[r * k + c];
        const double value = a[c * k + c];
        const double res = residual_norm(m, value, vec);
        if (res > kResidualTolerance * std::max(1.0, std::abs(value)))
            throw NumericalError("eigenpair residual " + std::to_string(res) + " exceeds tolerance");
        es.values.push_back(value);
        es.vectors.push_back(std::move(vec));
    }
    return es;
}

bool irreducible(const SymMatrix& m) {
    const int k = m.order();
    if (k <= 1) return true;
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < k; ++j)
            if (!seen[j] && m(i, j) != 0.0) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
    }
    return count == k;
}

EigenResult spectral_radius(const SymMatrix& m) {
    const int k = m.order();
    if (k < 1) throw std::invalid_argument("spectral_radius of an empty matrix");
    if (k == 1) return {m(0, 0), {1.0}, 0.0};

    auto es = eigensystem(m);
    EigenResult r{es.values.back(), std::move(es.vectors.back()), 0.0};
    const double sum = std::accumulate(r.vector.begin(), r.vector.end(), 0.0);
    if (sum < 0.0)
        for (double& x : r.vector) x = -x;
    r.residual = residual_norm(m, r.value, r.vector);

    const bool nonnegative = std::all_of(m.entries().begin(), m.entries().end(), [](double x) { return x >= 0.0; });
    if (nonnegative && irreducible(m)) {
        for (double x : r.vector)
            if (x <= 1e-12) throw NumericalError("Perron vector of an irreducible matrix is not positive");
    }
    return r;
}

std::vector<double> full_spectrum(const SymMatrix& m) {
    if (m.order() == 1) return {m(0, 0)};
    return eigensystem(m).values;
}

SymMatrix principal_submatrix(const SymMatrix& m, std::span<const int> keep) {
    if (keep.empty()) throw std::invalid_argument("principal_submatrix: empty index set");
    std::vector<int> idx(keep.begin(), keep.end());
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("principal_submatrix: repeated index");
    if (idx.front() < 0 || idx.back() >= m.order())
        throw std::invalid_argument("principal_submatrix: index out of range");
    const int k = static_cast<int>(idx.size());
    SymMatrix s(k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) s.set(i, j, m(idx[i], idx[j]));
    return s;
}

namespace {

constexpr double kEntryTol = 1e-12;

// Case 1: maps row i of a to row perm[i] of b, requiring a >= P b P^T.
bool search_entrywise(const SymMatrix& a, const SymMatrix& b, std::vector<int>& perm, std::vector<char>& used,
                      int depth) {
    const int k = a.order();
    if (depth == k) {
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                if (a(i, j) > b(perm[i], perm[j]) + kEntryTol) return true;
        return false;
    }
    for (int c = 0; c < k; ++c) {
        if (used[c]) continue;
        bool ok = a(depth, depth) + kEntryTol >= b(c, c);
        for (int i = 0; ok && i < depth; ++i) ok = a(i, depth) + kEntryTol >= b(perm[i], c);
        if (!ok) continue;
        used[c] = 1;
        perm[depth] = c;
        if (search_entrywise(a, b, perm, used, depth + 1)) return true;
        used[c] = 0;
    }
    return false;
}

// Case 2: maps row r of b to row image[r] of a, requiring an exact principal block.
bool search_embedding(const SymMatrix& a, const SymMatrix& b, std::vector<int>& image, std::vector<char>& used,
                      int depth) {
    const int ka = a.order();
    const int kb = b.order();
    if (depth == kb) {
        // Complement blocks C (= D^T) and E must not all vanish.
        for (int i = 0; i < ka; ++i) {
            if (used[i]) continue;
            for (int j = 0; j < ka; ++j)
                if (std::abs(a(i, j)) > kEntryTol) return true;
        }
        return false;
    }
    for (int c = 0; c < ka; ++c) {
        if (used[c]) continue;
        bool ok = std::abs(a(c, c) - b(depth, depth)) <= kEntryTol;
        for (int r = 0; ok && r < depth; ++r) ok = std::abs(a(image[r], c) - b(r, depth)) <= kEntryTol;
        if (!ok) continue;
        used[c] = 1;
        image[depth] = c;
        if (search_embedding(a, b, image, used, depth + 1)) return true;
        used[c] = 0;
    }
    return false;
}

} // namespace

bool dominates(const SymMatrix& a, const SymMatrix& b) {
    if (b.order() > 8) throw CapExceeded("dominates: permutation search limited to order 8");
    if (a.order() < b.order() || b.order() == 0) return false;
    if (a.order() == b.order()) {
        std::vector<int> perm(a.order());
        std::vector<char> used(a.order(), 0);
        return search_entrywise(a, b, perm, used, 0);
    }
    std::vector<int> image(b.order());
    std::vector<char> used(a.order(), 0);
    return search_embedding(a, b, image, used, 0);
}

double rayleigh(const SymMatrix& m, std::span<const double> x) {
    if (static_cast<int>(x.size()) != m.order()) throw std::invalid_argument("rayleigh: dimension mismatch");
    double xx = 0.0, xmx = 0.0;
    for (int i = 0; i < m.order(); ++i) {
        xx += x[i] * x[i];
        double row = 0.0;
        for (int j = 0; j < m.order(); ++j) row += m(i, j) * x[j];
        xmx += x[i] * row;
    }
    if (xx == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    return xmx / xx;
}

} // namespace dpe
