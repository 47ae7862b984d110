#include "netcent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "netcent/errors.hpp"
#include "netcent/paths.hpp"

namespace netcent {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMatrix> view(const DenseMatrix& m) {
    return {m.data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

Eigen::PartialPivLU<RowMatrix> factor(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw_input("linear solve needs a square matrix");
    require_dense_size(m.rows(), "linear solve");
    Eigen::PartialPivLU<RowMatrix> lu(view(m));
    const auto& packed = lu.matrixLU();
    double scale = 0.0;
    for (Eigen::Index i = 0; i < packed.rows(); ++i) scale = std::max(scale, std::abs(packed(i, i)));
    for (Eigen::Index i = 0; i < packed.rows(); ++i) {
        if (!(std::abs(packed(i, i)) > 1e-13 * std::max(scale, 1e-300)))
            throw_compute("matrix is singular to working precision (pivot " + std::to_string(i) +
                          " = " + std::to_string(packed(i, i)) + ")");
    }
    return lu;
}

} // namespace

void require_dense_size(std::size_t n, const char* what, std::size_t cap) {
    if (n > cap)
        throw_compute(std::string(what) + ": " + std::to_string(n) + " nodes exceeds the dense cap of " +
                      std::to_string(cap));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
    DenseMatrix out(rows_, other.cols_);
    Eigen::Map<RowMatrix>(out.data(), static_cast<Eigen::Index>(rows_),
                          static_cast<Eigen::Index>(other.cols_)) = view(*this) * view(other);
    return out;
}

EigenPair power_iteration(const LinearOperator& op, std::vector<double> init,
                          const PowerIterationOptions& options) {
    const std::size_t n = init.size();
    EigenPair out;
    if (n == 0) return out;
    for (double v : init)
        if (!(v > 0.0)) throw_input("power iteration needs a strictly positive initial vector");
    if (!(options.tol > 0.0) || options.max_iter < 1) throw_input("invalid iteration settings");

    std::vector<double> x = std::move(init);
    const double n0 = norm2(x);
    for (double& v : x) v /= n0;
    std::vector<double> y(n);
    double gap = 0.0;
    for (std::size_t it = 1; it <= options.max_iter; ++it) {
        op(x, y);
        for (std::size_t i = 0; i < n; ++i) y[i] += options.shift * x[i];
        const double len = norm2(y);
        if (len == 0.0) throw_compute("power iteration collapsed to the zero vector");
        gap = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= len;
            gap = std::max(gap, std::abs(y[i] - x[i]));
        }
        x.swap(y);
        if (gap < options.tol) {
            op(x, y);
            out.value = dot(x, y);
            out.vector = std::move(x);
            out.iterations = it;
            return out;
        }
    }
    throw_compute("power iteration did not converge in " + std::to_string(options.max_iter) +
                  " iterations (last gap " + std::to_string(gap) + ")");
}

std::vector<double> solve_linear(const DenseMatrix& m, std::span<const double> b) {
    if (b.size() != m.rows()) throw_input("right-hand side has the wrong length");
    auto lu = factor(m);
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
    Eigen::VectorXd x = lu.solve(rhs);
    const double resid = (view(m) * x - rhs).cwiseAbs().maxCoeff();
    const double bnorm = rhs.cwiseAbs().maxCoeff();
    if (resid > 1e-8 * std::max(bnorm, 1e-300) && bnorm > 0.0)
        throw_compute("linear solve residual " + std::to_string(resid) + " too large");
    return {x.data(), x.data() + x.size()};
}

DenseMatrix inverse(const DenseMatrix& m) {
    auto lu = factor(m);
    const auto n = static_cast<Eigen::Index>(m.rows());
    DenseMatrix out(m.rows(), m.cols());
    Eigen::Map<RowMatrix>(out.data(), n, n) = lu.inverse();
    return out;
}

SymmetricEigen symmetric_eigen(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw_input("eigendecomposition needs a square matrix");
    require_dense_size(m.rows(), "eigendecomposition");
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXd a = view(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw_compute("symmetric eigendecomposition failed");
    SymmetricEigen out;
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    out.vectors = DenseMatrix(m.rows(), m.cols());
    Eigen::Map<RowMatrix>(out.vectors.data(), n, n) = solver.eigenvectors();
    return out;
}

DenseMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = g.node_count();
    DenseMatrix a(n, n);
    for (NodeId u = 0; u < n; ++u)
        for (const Arc& arc : g.out(u)) a(u, arc.node) = arc.weight;
    return a;
}

void apply_in(const Graph& g, std::span<const double> x, std::span<double> y) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double s = 0.0;
        for (const Arc& a : g.in(v)) s += a.weight * x[a.node];
        y[v] = s;
    }
}

void apply_out(const Graph& g, std::span<const double> x, std::span<double> y) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double s = 0.0;
        for (const Arc& a : g.out(v)) s += a.weight * x[a.node];
        y[v] = s;
    }
}

double spectral_radius(const Graph& g, const PowerIterationOptions& options) {
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) return 0.0;
    auto radius_of = [&](const Graph& h) {
        EigenPair p = power_iteration(
            [&](std::span<const double> x, std::span<double> y) { apply_out(h, x, y); },
            std::vector<double>(h.node_count(), 1.0), options);
        return p.value;
    };
    if (!g.directed()) {
        // each component separately: the principal vector of a disconnected
        // graph depends on the start vector
        ComponentLabeling comp = components(g);
        if (comp.sizes.size() == 1) return radius_of(g);
        double best = 0.0;
        std::vector<std::vector<NodeId>> members(comp.sizes.size());
        for (NodeId v = 0; v < n; ++v) members[comp.component[v]].push_back(v);
        for (const auto& m : members)
            if (m.size() > 1) best = std::max(best, radius_of(induced_subgraph(g, m)));
        return best;
    }
    ComponentLabeling scc = components(g, Connectivity::strong);
    std::vector<std::vector<NodeId>> members(scc.sizes.size());
    for (NodeId v = 0; v < n; ++v) members[scc.component[v]].push_back(v);
    double best = 0.0;
    for (const auto& m : members)
        if (m.size() > 1) best = std::max(best, radius_of(induced_subgraph(g, m)));
    return best;
}

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    const double na = norm2(a), nb = norm2(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b) / (na * nb);
}

} // namespace netcent
