#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace corepalg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Scalar field over which a family of complex matrices is treated as a vector space.
enum class Field { Real, Complex };

/// Default relative tolerance for numerical rank decisions (relative to the largest singular value).
inline constexpr double kRankTolerance = 1e-9;

/// Throws ShapeError unless every entry of `a` is finite.
void require_finite(const CMatrix& a, const char* what);

/// Entrywise complex conjugate (not the adjoint).
inline CMatrix conj(const CMatrix& a) { return a.conjugate(); }

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
CMatrix mat_exp(const CMatrix& a);

/// Frobenius distance sqrt(sum |a_jk - b_jk|^2).
double frobenius_dist(const CMatrix& a, const CMatrix& b);

/// Real vectorization: [Re entries row-major, then Im entries row-major].
Eigen::VectorXd real_vectorize(const CMatrix& a);

/// Complex vectorization, row-major.
Eigen::VectorXcd complex_vectorize(const CMatrix& a);

/// Result of expanding a matrix in a (possibly dependent) matrix basis.
struct Expansion {
    /// One coefficient per basis element; purely real when expanded over Field::Real.
    Eigen::VectorXcd coefficients;
    /// ||target - sum_i coefficients_i basis_i||_F
    double residual = 0.0;
    /// Numerical rank of the basis family.
    int basisRank = 0;
    /// False when the basis is rank deficient and the minimum-norm solution was taken.
    bool unique = true;
};

/// Least-squares expansion of `target` in span(basis) over the chosen field.
///
/// Rank-deficient bases give the minimum-norm coefficient vector. Throws DomainError
/// for an empty basis and ShapeError for mismatched shapes.
Expansion lstsq_expand(const CMatrix& target, std::span<const CMatrix> basis, Field field,
                       double tol = kRankTolerance);

/// Singular values of the vectorized family, descending.
Eigen::VectorXd family_singular_values(std::span<const CMatrix> vectors, Field field);

/// Numerical rank of a matrix family: count of singular values above tol * sigma_max.
/// The empty family has rank 0.
int family_rank(std::span<const CMatrix> vectors, Field field, double tol = kRankTolerance);

}  // namespace corepalg
