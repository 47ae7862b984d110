#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "netcent/graph.hpp"

namespace netcent {

inline constexpr std::size_t kDenseCap = 5000;

/// Throws ComputeError when n exceeds the dense cap.
void require_dense_size(std::size_t n, const char* what, std::size_t cap = kDenseCap);

/// Row-major square-or-rectangular dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }

    std::vector<double> multiply(std::span<const double> x) const;
    DenseMatrix multiply(const DenseMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// y = op(x); both spans have the operator's dimension.
using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct PowerIterationOptions {
    double tol = 1e-10;
    std::size_t max_iter = 100000;
    /// Iterates op + shift*I. A positive shift keeps periodic (e.g. bipartite)
    /// non-negative matrices from oscillating; it does not change eigenvectors.
    double shift = 1.0;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector; ///< unit L2 norm
    std::size_t iterations = 0;
};

/// Principal eigenpair of a non-negative operator. Throws ComputeError
/// (carrying the last iterate gap) when max_iter is exhausted.
EigenPair power_iteration(const LinearOperator& op, std::vector<double> init,
                          const PowerIterationOptions& options = {});

/// Solves M x = b by LU with partial pivoting.
std::vector<double> solve_linear(const DenseMatrix& m, std::span<const double> b);
/// Inverse via the same factorization.
DenseMatrix inverse(const DenseMatrix& m);

struct SymmetricEigen {
    std::vector<double> values;  ///< ascending
    DenseMatrix vectors;         ///< column j pairs with values[j]
};
SymmetricEigen symmetric_eigen(const DenseMatrix& m);

/// Weighted adjacency matrix (a_uv = w for u->v; symmetric when undirected).
DenseMatrix adjacency_matrix(const Graph& g);

/// y[v] = sum over arcs u->v of w*x[u]  (A^T x, aggregates in-neighbours).
void apply_in(const Graph& g, std::span<const double> x, std::span<double> y);
/// y[v] = sum over arcs v->u of w*x[u]  (A x, aggregates out-neighbours).
void apply_out(const Graph& g, std::span<const double> x, std::span<double> y);

/// Largest eigenvalue of the weighted adjacency matrix (0 for acyclic digraphs).
double spectral_radius(const Graph& g, const PowerIterationOptions& options = {});

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double cosine_similarity(std::span<const double> a, std::span<const double> b);

} // namespace netcent
