#pragma once

#include <array>
#include <string>
#include <vector>

#include "corepalg/tangent.hpp"

namespace corepalg {

/// [A, B] = AB - BA
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Dense rank-3 tensor, row-major in (i, j, k).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int n0, int n1, int n2)
        : dims_{n0, n1, n2}, data_(static_cast<std::size_t>(n0) * n1 * n2, Complex{}) {}

    Complex& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    const Complex& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    int dim(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
    const std::vector<Complex>& data() const { return data_; }

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k;
    }

    std::array<int, 3> dims_{0, 0, 0};
    std::vector<Complex> data_;
};

/// Dense matrix of per-pair least-squares residuals.
using ResidualTable = Eigen::MatrixXd;

/// Default tolerance for calling an expansion exact (grading closed).
inline constexpr double kClosureTolerance = 1e-8;
/// Default tolerance on the Jacobi defects.
inline constexpr double kJacobiTolerance = 1e-6;

/// Graded structure constants in report-position indexing.
///
/// Subgroup positions 0..n-1 stand for X_1..X_n; coset positions 0..n stand for
/// X'_0, X'_{n+1}..X'_{2n}.
///   c(p, q, r):  [X_p, X_q]   = sum_r c(p,q,r) X_r,   p, q, r subgroup
///   d(p, q, r):  [X'_p, X'_q] = sum_r d(p,q,r) X_r,   p, q coset, r subgroup
///   e(p, q, r):  [X_p, X'_q]  = sum_r e(p,q,r) X'_r,  p subgroup, q, r coset
struct StructureConstants {
    int n = 0;
    Field field = Field::Real;
    double tol = kClosureTolerance;
    Tensor3 c, d, e;
    ResidualTable cResidual, dResidual, eResidual;
    /// True when the target span was rank deficient and a minimum-norm expansion was used.
    bool cNonUnique = false;
    bool dNonUnique = false;
    bool eNonUnique = false;
};

/// Expands every graded commutator in its prescribed target span (least squares over `field`).
/// Commutators outside their span keep the minimum-norm projection; the residual records the miss.
StructureConstants compute_structure_constants(const TangentBasis& basis,
                                               double tol = kClosureTolerance,
                                               Field field = Field::Real);

enum class JacobiRelation { Lie, First, Second, Third };

std::string_view to_string(JacobiRelation relation);

/// Max-norm defects of the four contracted Jacobi identities:
///   Lie:    c^s_pq c^t_sr + c^s_qr c^t_sp + c^s_rp c^t_sq
///   First:  c^s_pq e^t_sr - e^s_qr e^t_ps + e^s_pr e^t_qs
///   Second: e^s_pq d^t_sr + d^s_qr c^t_sp - e^s_pr d^t_sq
///   Third:  d^s_pq e^t_sr + d^s_qr e^t_sp + d^s_rp e^t_sq
struct JacobiReport {
    double lieDefect = 0.0;
    double defect1 = 0.0;
    double defect2 = 0.0;
    double defect3 = 0.0;
    /// Relation and (p, q, r, t) positions of the worst violation.
    JacobiRelation witnessRelation = JacobiRelation::Lie;
    std::array<int, 4> witness{0, 0, 0, 0};

    double max_defect() const;
};

JacobiReport jacobi_check(const StructureConstants& constants);

/// Which commutator class a residual belongs to.
enum class PairClass { SubgroupSubgroup, CosetCoset, SubgroupCoset };

struct GradingReport {
    bool closed = true;
    double worstResidual = 0.0;
    PairClass worstClass = PairClass::SubgroupSubgroup;
    int worstP = 0;
    int worstQ = 0;
    /// X'_0 commutes with every other basis element (within tol).
    bool centralX0 = false;
    double x0CommutatorNorm = 0.0;
};

std::string_view to_string(PairClass pairClass);

GradingReport grading_report(const TangentBasis& basis, const StructureConstants& constants);

}  // namespace corepalg
