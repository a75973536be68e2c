#include "corepalg/linalg.hpp"

#include <cmath>
#include <string>

#include "corepalg/errors.hpp"

namespace corepalg {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

// Columns are the vectorized family members.
Eigen::MatrixXd real_family_matrix(std::span<const CMatrix> vectors) {
    const Eigen::Index len = 2 * vectors.front().size();
    Eigen::MatrixXd out(len, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        require_same_shape(vectors.front(), vectors[i], "family");
        out.col(static_cast<Eigen::Index>(i)) = real_vectorize(vectors[i]);
    }
    return out;
}

Eigen::MatrixXcd complex_family_matrix(std::span<const CMatrix> vectors) {
    Eigen::MatrixXcd out(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        require_same_shape(vectors.front(), vectors[i], "family");
        out.col(static_cast<Eigen::Index>(i)) = complex_vectorize(vectors[i]);
    }
    return out;
}

int count_above(const Eigen::VectorXd& sigma, double tol) {
    if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
    const double cutoff = tol * sigma(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > cutoff) ++rank;
    return rank;
}

}  // namespace

void require_finite(const CMatrix& a, const char* what) {
    if (!a.allFinite()) throw ShapeError(std::string(what) + ": matrix has non-finite entries");
}

CMatrix mat_exp(const CMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("mat_exp: matrix must be square");
    require_finite(a, "mat_exp");
    const Eigen::Index n = a.rows();
    if (n == 0) return a;

    // Scale so that ||A/2^s||_1 <= 1/2, where 18 Taylor terms leave a remainder far below 1e-16.
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    const CMatrix scaled = a / std::ldexp(1.0, squarings);

    constexpr int kOrder = 18;
    CMatrix result = CMatrix::Identity(n, n);
    CMatrix term = CMatrix::Identity(n, n);
    for (int k = 1; k <= kOrder; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        result += term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

double frobenius_dist(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "frobenius_dist");
    return (a - b).norm();
}

Eigen::VectorXd real_vectorize(const CMatrix& a) {
    const Eigen::Index size = a.size();
    Eigen::VectorXd v(2 * size);
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c, ++k) {
            v(k) = a(r, c).real();
            v(size + k) = a(r, c).imag();
        }
    return v;
}

Eigen::VectorXcd complex_vectorize(const CMatrix& a) {
    Eigen::VectorXcd v(a.size());
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c) v(k++) = a(r, c);
    return v;
}

Expansion lstsq_expand(const CMatrix& target, std::span<const CMatrix> basis, Field field,
                       double tol) {
    if (basis.empty()) throw DomainError("lstsq_expand: empty basis");
    require_same_shape(target, basis.front(), "lstsq_expand");

    Expansion out;
    const auto k = static_cast<Eigen::Index>(basis.size());
    if (field == Field::Real) {
        const Eigen::MatrixXd a = real_family_matrix(basis);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(tol);
        out.basisRank = static_cast<int>(svd.rank());
        out.coefficients = svd.solve(real_vectorize(target)).cast<Complex>();
    } else {
        const Eigen::MatrixXcd a = complex_family_matrix(basis);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(tol);
        out.basisRank = static_cast<int>(svd.rank());
        out.coefficients = svd.solve(complex_vectorize(target));
    }
    out.unique = out.basisRank == k;

    CMatrix remainder = target;
    for (Eigen::Index i = 0; i < k; ++i) remainder -= out.coefficients(i) * basis[i];
    out.residual = remainder.norm();
    return out;
}

Eigen::VectorXd family_singular_values(std::span<const CMatrix> vectors, Field field) {
    if (vectors.empty()) return {};
    if (field == Field::Real) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_family_matrix(vectors));
        return svd.singularValues();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_family_matrix(vectors));
    return svd.singularValues();
}

int family_rank(std::span<const CMatrix> vectors, Field field, double tol) {
    return count_above(family_singular_values(vectors, field), tol);
}

}  // namespace corepalg
