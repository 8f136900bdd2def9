#ifndef HAARGAP_COTLAR_STEIN_HPP
#define HAARGAP_COTLAR_STEIN_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "validation_config.hpp"

namespace haargap {

using ComplexMatrix = Eigen::MatrixXcd;

/// Finite family of operators A_alpha : C^cols -> C^rows.
struct MatrixFamily {
    std::vector<ComplexMatrix> members;
    std::uint64_t seed = 0;

    void validate() const
    {
        if (members.empty())
            throw InvalidArgument("matrix family must be nonempty");
        for (const auto& m : members)
            if (m.rows() != members.front().rows() || m.cols() != members.front().cols())
                throw InvalidArgument("matrix family members must share one shape; got " +
                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " and " +
                                      std::to_string(members.front().rows()) + "x" +
                                      std::to_string(members.front().cols()));
    }
};

namespace detail {

inline double dense_top_eigenvalue(const ComplexMatrix& gram)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
    return std::max(0.0, solver.eigenvalues().maxCoeff());
}

} // namespace detail

/// Spectral norm: square root of the top eigenvalue of the smaller Gram matrix,
/// found by power iteration from a fixed start vector. Small matrices whose
/// iteration stalls or leaves a large residual fall back to a dense eigensolver.
inline double operator_norm(const ComplexMatrix& m, const ValidationTolerances& tol = kTolerances)
{
    if (!m.allFinite())
        throw InvalidArgument("operator_norm: matrix has non-finite entries");
    if (m.size() == 0)
        return 0.0;
    const ComplexMatrix gram = m.rows() < m.cols() ? ComplexMatrix(m * m.adjoint()) : ComplexMatrix(m.adjoint() * m);
    const auto dim = gram.rows();

    Eigen::VectorXcd v(dim);
    for (Eigen::Index k = 0; k < dim; ++k)
        v(k) = std::complex<double>(1.0 + 1.0 / static_cast<double>(k + 2), 0.25 / static_cast<double>(k + 1));
    v.normalize();

    // For Hermitian G and unit v, some eigenvalue lies within |Gv - lambda v| of lambda.
    double lambda = 0.0;
    bool converged = false;
    for (std::size_t it = 0; it < tol.max_power_iterations; ++it) {
        const Eigen::VectorXcd w = gram * v;
        lambda = v.dot(w).real();
        const double w_norm = w.norm();
        if (w_norm == 0.0) {
            lambda = 0.0;
            converged = true;
            break;
        }
        if ((w - lambda * v).norm() <= tol.norm_relative * std::abs(lambda)) {
            converged = true;
            break;
        }
        v = w / w_norm;
    }
    if (!converged) {
        if (static_cast<std::size_t>(dim) > tol.dense_fallback_dim)
            throw std::runtime_error("operator_norm: power iteration did not converge on a " + std::to_string(dim) +
                                     "-dimensional Gram matrix");
        lambda = detail::dense_top_eigenvalue(gram);
    }
    return std::sqrt(std::max(0.0, lambda));
}

struct CotlarSteinCheck {
    double r1 = 0.0;            ///< max_a sum_b ||A_a^* A_b||^{1/2}
    double r2 = 0.0;            ///< max_a sum_b ||A_a A_b^*||^{1/2}
    double lhs = 0.0;           ///< ||sum_a A_a||
    double trivial_bound = 0.0; ///< sum_a ||A_a||
    bool holds = false;
};

inline CotlarSteinCheck cotlar_bound_check(const MatrixFamily& f, const ValidationTolerances& tol = kTolerances)
{
    f.validate();
    CotlarSteinCheck out;
    ComplexMatrix total = ComplexMatrix::Zero(f.members.front().rows(), f.members.front().cols());
    for (const auto& a : f.members) {
        total += a;
        out.trivial_bound += operator_norm(a, tol);
    }
    for (const auto& a : f.members) {
        double s1 = 0.0, s2 = 0.0;
        for (const auto& b : f.members) {
            s1 += std::sqrt(operator_norm(a.adjoint() * b, tol));
            s2 += std::sqrt(operator_norm(a * b.adjoint(), tol));
        }
        out.r1 = std::max(out.r1, s1);
        out.r2 = std::max(out.r2, s2);
    }
    out.lhs = operator_norm(total, tol);
    out.holds = out.lhs <= std::max(out.r1, out.r2) * (1.0 + tol.bound_slack);
    return out;
}

/// Family of `members` i.i.d. complex Gaussian matrices, reproducible from `seed`.
inline MatrixFamily random_gaussian_family(std::uint64_t seed, std::size_t members, Eigen::Index rows,
                                           Eigen::Index cols)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    MatrixFamily f{{}, seed};
    for (std::size_t k = 0; k < members; ++k) {
        ComplexMatrix m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) {
                const double re = normal(rng);
                const double im = normal(rng);
                m(i, j) = {re, im};
            }
        f.members.push_back(std::move(m));
    }
    return f;
}

/// Coordinate projectors onto consecutive diagonal blocks of the given sizes.
/// Pairwise products vanish, so the family is exactly orthogonal.
inline MatrixFamily orthogonal_projector_family(const std::vector<Eigen::Index>& block_sizes)
{
    Eigen::Index dim = 0;
    for (auto b : block_sizes)
        dim += b;
    MatrixFamily f;
    Eigen::Index offset = 0;
    for (auto b : block_sizes) {
        ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
        for (Eigen::Index k = 0; k < b; ++k)
            p(offset + k, offset + k) = 1.0;
        offset += b;
        f.members.push_back(std::move(p));
    }
    return f;
}

} // namespace haargap

#endif // HAARGAP_COTLAR_STEIN_HPP
