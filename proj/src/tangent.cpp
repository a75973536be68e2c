#include "corepalg/tangent.hpp"

#include <algorithm>
#include <string>

#include "corepalg/errors.hpp"

namespace corepalg {

namespace {

void check_step(DiffMethod method, double h) {
    if (method != DiffMethod::FiniteDifference) return;
    if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
    if (h > kMaxFdStep) throw DomainError("finite-difference step too large (> 0.5)");
}

std::vector<double> unit_direction(int n, int p, double t) {
    std::vector<double> alphas(static_cast<std::size_t>(n), 0.0);
    alphas[static_cast<std::size_t>(p)] = t;
    return alphas;
}

}  // namespace

std::string_view to_string(DiffMethod method) {
    return method == DiffMethod::Analytic ? "analytic" : "fd";
}

std::vector<CMatrix> TangentBasis::coset_with_phase() const {
    std::vector<CMatrix> out;
    out.reserve(coset.size() + 1);
    out.push_back(phase);
    out.insert(out.end(), coset.begin(), coset.end());
    return out;
}

std::string subgroup_label(int p) { return "X_" + std::to_string(p); }

int coset_index(int pos, int n) { return pos == 0 ? 0 : n + pos; }

std::string coset_label(int pos, int n) { return "X'_" + std::to_string(coset_index(pos, n)); }

CMatrix central_difference(const std::function<CMatrix(double)>& f, double h) {
    return (f(h) - f(-h)) / (2.0 * h);
}

CMatrix richardson_derivative(const std::function<CMatrix(double)>& f, double h) {
    const CMatrix coarse = central_difference(f, h);
    const CMatrix fine = central_difference(f, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

std::vector<CMatrix> extract_subgroup_generators(const Corep& corep, DiffMethod method,
                                                 double h) {
    check_step(method, h);
    const int n = corep.parameter_count();
    std::vector<CMatrix> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        if (method == DiffMethod::Analytic) {
            out.push_back(corep.represent_subgroup(corep.group.generators[static_cast<std::size_t>(p)]));
        } else {
            out.push_back(richardson_derivative(
                [&](double t) { return corep.subgroup_matrix(unit_direction(n, p, t)); }, h));
        }
    }
    return out;
}

CosetGenerators extract_coset_generators(const Corep& corep, DiffMethod method, double h) {
    check_step(method, h);
    const int n = corep.parameter_count();
    CosetGenerators out;
    if (method == DiffMethod::Analytic) {
        out.phase = Complex{0.0, 1.0} * corep.Da0;
        for (const CMatrix& x : extract_subgroup_generators(corep, method, h))
            out.coset.push_back(corep.Da0 * x.conjugate());
        return out;
    }
    const std::vector<double> origin(static_cast<std::size_t>(n), 0.0);
    out.phase = richardson_derivative([&](double t) { return coset_matrix_at(corep, t, origin); }, h);
    for (int q = 0; q < n; ++q) {
        out.coset.push_back(richardson_derivative(
            [&](double t) { return coset_matrix_at(corep, 0.0, unit_direction(n, q, t)); }, h));
    }
    return out;
}

TangentBasis extract_basis(const Corep& corep, DiffMethod method, double h) {
    TangentBasis b;
    b.subgroup = extract_subgroup_generators(corep, method, h);
    CosetGenerators c = extract_coset_generators(corep, method, h);
    b.phase = std::move(c.phase);
    b.coset = std::move(c.coset);
    b.method = method;
    b.fdStep = method == DiffMethod::Analytic ? 0.0 : h;
    return b;
}

double max_generator_difference(const TangentBasis& a, const TangentBasis& b) {
    if (a.n() != b.n() || a.block_dim() != b.block_dim())
        throw ShapeError("max_generator_difference: bases of different shape");
    double worst = (a.phase - b.phase).cwiseAbs().maxCoeff();
    for (int p = 0; p < a.n(); ++p) {
        const auto i = static_cast<std::size_t>(p);
        worst = std::max(worst, (a.subgroup[i] - b.subgroup[i]).cwiseAbs().maxCoeff());
        worst = std::max(worst, (a.coset[i] - b.coset[i]).cwiseAbs().maxCoeff());
    }
    return worst;
}

std::string_view to_string(SpanPattern pattern) {
    switch (pattern) {
        case SpanPattern::CosetDependent: return "cosetDependent";
        case SpanPattern::FullGraded: return "fullGraded";
        case SpanPattern::Trivial: return "trivial";
        case SpanPattern::Irregular: break;
    }
    return "irregular";
}

SpanReport span_report(const TangentBasis& basis, double tol) {
    SpanReport r;
    r.n = basis.n();
    r.tol = tol;

    const std::vector<CMatrix> coset = basis.coset_with_phase();
    std::vector<CMatrix> all = basis.subgroup;
    all.insert(all.end(), coset.begin(), coset.end());

    r.subgroupRealRank = family_rank(basis.subgroup, Field::Real, tol);
    r.cosetRealRank = family_rank(coset, Field::Real, tol);
    r.unionRealRank = family_rank(all, Field::Real, tol);

    std::vector<CMatrix> withPhase = basis.subgroup;
    withPhase.push_back(basis.phase);
    r.subgroupPhaseComplexRank = family_rank(withPhase, Field::Complex, tol);

    r.cosetDependsOnSubgroup = true;
    for (const CMatrix& x : basis.coset) {
        std::vector<CMatrix> extended = basis.subgroup;
        extended.push_back(x);
        if (family_rank(extended, Field::Real, tol) != r.subgroupRealRank) {
            r.cosetDependsOnSubgroup = false;
            break;
        }
    }

    if (r.n == 0)
        r.pattern = SpanPattern::Trivial;
    else if (r.unionRealRank == 2 * r.n + 1)
        r.pattern = SpanPattern::FullGraded;
    else if (r.cosetDependsOnSubgroup && r.unionRealRank == r.n + 1)
        r.pattern = SpanPattern::CosetDependent;
    else
        r.pattern = SpanPattern::Irregular;
    return r;
}

}  // namespace corepalg
