#pragma once

#include "dpe/graph.hpp"

#include <span>
#include <vector>

namespace dpe {

/// Dense real symmetric matrix. Writes go through set(), which mirrors, so
/// symmetry holds exactly.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int k);
    /// Row-major k*k entries; throws std::invalid_argument unless exactly symmetric.
    SymMatrix(int k, std::vector<double> entries);
    static SymMatrix from_distances(const DistanceMatrix& dm);

    int order() const noexcept { return k_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * k_ + j]; }
    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * k_ + j] = v;
        a_[static_cast<std::size_t>(j) * k_ + i] = v;
    }
    std::span<const double> entries() const noexcept { return a_; }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    int k_ = 0;
    std::vector<double> a_;
};

struct EigenResult {
    double value = 0.0;
    std::vector<double> vector;  ///< unit norm
    double residual = 0.0;       ///< max |(M x - value x)_i|
};

/// All eigenpairs, values ascending; vectors[i] belongs to values[i].
struct Eigensystem {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Residual acceptance: residual <= kResidualTolerance * max(1, |value|).
inline constexpr double kResidualTolerance = 1e-10;

/// Cyclic Jacobi diagonalisation. Throws NumericalError after kJacobiMaxSweeps
/// sweeps or when an eigenpair misses the residual contract.
Eigensystem eigensystem(const SymMatrix& m);

/// Largest eigenvalue with a unit eigenvector signed so that its entries are
/// nonnegative. For irreducible nonnegative input the vector is checked to be
/// strictly positive.
EigenResult spectral_radius(const SymMatrix& m);

std::vector<double> full_spectrum(const SymMatrix& m);

/// Rows/columns in `keep`, taken in ascending order. Throws on empty or
/// out-of-range selections.
SymMatrix principal_submatrix(const SymMatrix& m, std::span<const int> keep);

/// a dominates b: either equal orders and P b P^T <= a, != a for some
/// permutation P, or b equals a principal block of a whose complement blocks
/// are not all zero. Throws CapExceeded when b has order > 8.
bool dominates(const SymMatrix& a, const SymMatrix& b);

/// x^T M x / x^T x. Throws std::invalid_argument for a zero vector.
double rayleigh(const SymMatrix& m, std::span<const double> x);

/// max_i |(M x)_i - value x_i|.
double residual_norm(const SymMatrix& m, double value, std::span<const double> x);

/// True when the off-diagonal nonzero pattern is connected.
bool irreducible(const SymMatrix& m);

namespace kernel {

/// Largest order accepted by the allocation-free kernels.
inline constexpr int kMaxOrder = 32;

/// Diagonalises the row-major k*k symmetric matrix `a` in place (it ends up
/// diagonal). When `v` is non-null it must hold k*k doubles and receives the
/// eigenvectors as columns. Returns the number of sweeps used.
int jacobi(double* a, int k, double* v);

/// Largest eigenvalue of the principal submatrix of the n*n row-major matrix
/// `full` selected by the bit mask `keep` (bit i = row i). Values only, no
/// allocation.
double perron_root(const double* full, int n, std::uint32_t keep);

} // namespace kernel

} // namespace dpe
