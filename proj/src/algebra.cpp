#include "corepalg/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "corepalg/errors.hpp"

namespace corepalg {

namespace {

struct Projection {
    Eigen::VectorXcd coefficients;
    double residual = 0.0;
    bool unique = true;
};

Projection project(const CMatrix& target, const std::vector<CMatrix>& span, Field field) {
    if (span.empty()) return {Eigen::VectorXcd(), target.norm(), true};
    const Expansion ex = lstsq_expand(target, span, field);
    return {ex.coefficients, ex.residual, ex.unique};
}

// Tracks the largest |value| seen and where it occurred.
struct Worst {
    double value = 0.0;
    JacobiRelation relation = JacobiRelation::Lie;
    std::array<int, 4> at{0, 0, 0, 0};

    void offer(double v, JacobiRelation rel, int p, int q, int r, int t) {
        if (v > value) {
            value = v;
            relation = rel;
            at = {p, q, r, t};
        }
    }
};

}  // namespace

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols())
        throw ShapeError("commutator: operands must be square matrices of the same size");
    return a * b - b * a;
}

StructureConstants compute_structure_constants(const TangentBasis& basis, double tol, Field field) {
    const int n = basis.n();
    const int m = n + 1;
    const std::vector<CMatrix>& xs = basis.subgroup;
    const std::vector<CMatrix> ys = basis.coset_with_phase();

    StructureConstants s;
    s.n = n;
    s.field = field;
    s.tol = tol;
    s.c = Tensor3(n, n, n);
    s.d = Tensor3(m, m, n);
    s.e = Tensor3(n, m, m);
    s.cResidual = ResidualTable::Zero(n, n);
    s.dResidual = ResidualTable::Zero(m, m);
    s.eResidual = ResidualTable::Zero(n, m);

    // Antisymmetric classes: expand p < q only and reflect.
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const Projection pr = project(commutator(xs[p], xs[q]), xs, field);
            for (int r = 0; r < n; ++r) {
                s.c(p, q, r) = pr.coefficients(r);
                s.c(q, p, r) = -pr.coefficients(r);
            }
            s.cResidual(p, q) = s.cResidual(q, p) = pr.residual;
            s.cNonUnique = s.cNonUnique || !pr.unique;
        }

    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) {
            const Projection pr = project(commutator(ys[p], ys[q]), xs, field);
            for (int r = 0; r < n; ++r) {
                s.d(p, q, r) = pr.coefficients(r);
                s.d(q, p, r) = -pr.coefficients(r);
            }
            s.dResidual(p, q) = s.dResidual(q, p) = pr.residual;
            s.dNonUnique = s.dNonUnique || !pr.unique;
        }

    for (int p = 0; p < n; ++p)
        for (int q = 0; q < m; ++q) {
            const Projection pr = project(commutator(xs[p], ys[q]), ys, field);
            for (int r = 0; r < m; ++r) s.e(p, q, r) = pr.coefficients(r);
            s.eResidual(p, q) = pr.residual;
            s.eNonUnique = s.eNonUnique || !pr.unique;
        }
    return s;
}

std::string_view to_string(JacobiRelation relation) {
    switch (relation) {
        case JacobiRelation::Lie: return "lie";
        case JacobiRelation::First: return "relation1";
        case JacobiRelation::Second: return "relation2";
        case JacobiRelation::Third: return "relation3";
    }
    return "lie";
}

double JacobiReport::max_defect() const {
    return std::max({lieDefect, defect1, defect2, defect3});
}

JacobiReport jacobi_check(const StructureConstants& k) {
    const int n = k.n;
    const int m = n + 1;
    const Tensor3& c = k.c;
    const Tensor3& d = k.d;
    const Tensor3& e = k.e;

    Worst lie, first, second, third;

    // [[X_p, X_q], X_r] + cyclic, component t in span{X}.
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int t = 0; t < n; ++t) {
                    Complex sum{};
                    for (int s = 0; s < n; ++s)
                        sum += c(p, q, s) * c(s, r, t) + c(q, r, s) * c(s, p, t) +
                               c(r, p, s) * c(s, q, t);
                    lie.offer(std::abs(sum), JacobiRelation::Lie, p, q, r, t);
                }

    // [[X_p, X_q], X'_r] + cyclic, component t in span{X'}.
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < m; ++t) {
                    Complex sum{};
                    for (int s = 0; s < n; ++s) sum += c(p, q, s) * e(s, r, t);
                    for (int s = 0; s < m; ++s)
                        sum += -e(q, r, s) * e(p, s, t) + e(p, r, s) * e(q, s, t);
                    first.offer(std::abs(sum), JacobiRelation::First, p, q, r, t);
                }

    // [[X_p, X'_q], X'_r] + cyclic, component t in span{X}.
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < n; ++t) {
                    Complex sum{};
                    for (int s = 0; s < m; ++s)
                        sum += e(p, q, s) * d(s, r, t) - e(p, r, s) * d(s, q, t);
                    for (int s = 0; s < n; ++s) sum += d(q, r, s) * c(s, p, t);
                    second.offer(std::abs(sum), JacobiRelation::Second, p, q, r, t);
                }

    // [[X'_p, X'_q], X'_r] + cyclic, component t in span{X'}.
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < m; ++t) {
                    Complex sum{};
                    for (int s = 0; s < n; ++s)
                        sum += d(p, q, s) * e(s, r, t) + d(q, r, s) * e(s, p, t) +
                               d(r, p, s) * e(s, q, t);
                    third.offer(std::abs(sum), JacobiRelation::Third, p, q, r, t);
                }

    JacobiReport out;
    out.lieDefect = lie.value;
    out.defect1 = first.value;
    out.defect2 = second.value;
    out.defect3 = third.value;
    Worst overall = lie;
    for (const Worst* w : {&first, &second, &third})
        if (w->value > overall.value) overall = *w;
    out.witnessRelation = overall.relation;
    out.witness = overall.at;
    return out;
}

std::string_view to_string(PairClass pairClass) {
    switch (pairClass) {
        case PairClass::SubgroupSubgroup: return "subgroup-subgroup";
        case PairClass::CosetCoset: return "coset-coset";
        case PairClass::SubgroupCoset: return "subgroup-coset";
    }
    return "subgroup-subgroup";
}

GradingReport grading_report(const TangentBasis& basis, const StructureConstants& k) {
    GradingReport g;
    const auto scan = [&](const ResidualTable& table, PairClass cls) {
        for (Eigen::Index p = 0; p < table.rows(); ++p)
            for (Eigen::Index q = 0; q < table.cols(); ++q)
                if (table(p, q) > g.worstResidual) {
                    g.worstResidual = table(p, q);
                    g.worstClass = cls;
                    g.worstP = static_cast<int>(p);
                    g.worstQ = static_cast<int>(q);
                }
    };
    scan(k.cResidual, PairClass::SubgroupSubgroup);
    scan(k.dResidual, PairClass::CosetCoset);
    scan(k.eResidual, PairClass::SubgroupCoset);
    g.closed = g.worstResidual <= k.tol;

    double x0 = 0.0;
    for (const CMatrix& x : basis.subgroup) x0 = std::max(x0, commutator(basis.phase, x).norm());
    for (const CMatrix& x : basis.coset) x0 = std::max(x0, commutator(basis.phase, x).norm());
    g.x0CommutatorNorm = x0;
    g.centralX0 = x0 <= k.tol;
    return g;
}

}  // namespace corepalg
