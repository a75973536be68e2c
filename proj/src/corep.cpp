#include "corepalg/corep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corepalg/errors.hpp"
#include "corepalg/random.hpp"

namespace corepalg {

namespace {

constexpr double kSampleRadius = 2.0;

void require_square(const CMatrix& m, int dim, const char* what) {
    if (m.rows() != dim || m.cols() != dim)
        throw ShapeError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

CMatrix identity_action(int dim) { return CMatrix::Identity(dim, dim); }

// Multiplies n by a unit phase so that the first entry of (near-)maximal modulus is real positive.
CMatrix fix_phase(const CMatrix& n) {
    const double largest = n.cwiseAbs().maxCoeff();
    if (largest == 0.0) return n;
    for (Eigen::Index r = 0; r < n.rows(); ++r)
        for (Eigen::Index c = 0; c < n.cols(); ++c)
            if (std::abs(n(r, c)) >= largest * (1.0 - 1e-9)) {
                const Complex z = n(r, c);
                return n * (std::conj(z) / std::abs(z));
            }
    return n;
}

std::vector<CMatrix> sample_irreps(const GroupPresentation& group, int samples,
                                   std::uint64_t seed) {
    std::vector<CMatrix> out;
    if (group.parameter_count() == 0) {
        out.assign(static_cast<std::size_t>(samples), CMatrix::Identity(group.dim, group.dim));
        return out;
    }
    for (const auto& p : sample_neighborhood(group, kSampleRadius, samples, seed))
        out.push_back(evaluate(group, p.alphas()));
    return out;
}

CMatrix type_b_da0(int dim, int signature) {
    CMatrix da0 = CMatrix::Zero(2 * dim, 2 * dim);
    da0.topRightCorner(dim, dim) = static_cast<double>(signature) * CMatrix::Identity(dim, dim);
    da0.bottomLeftCorner(dim, dim) = CMatrix::Identity(dim, dim);
    return da0;
}

}  // namespace

std::string_view to_string(AntilinearKind kind) { return kind == AntilinearKind::K ? "K" : "Theta"; }

std::string_view to_string(CorepType type) { return type == CorepType::A ? "a" : "b"; }

double signature_defect(const CMatrix& n, int signature) {
    const CMatrix e = CMatrix::Identity(n.rows(), n.cols());
    return (n * n.conjugate() - static_cast<double>(signature) * e).norm();
}

AntilinearElement make_antilinear(CMatrix n, int signature, AntilinearKind kind,
                                  std::optional<CMatrix> action) {
    if (n.rows() != n.cols() || n.rows() == 0) throw ShapeError("a0: N must be square");
    require_finite(n, "a0.N");
    if (signature != 1 && signature != -1)
        throw SignatureError("a0: signature must be +1 or -1, got " + std::to_string(signature));
    const double defect = signature_defect(n, signature);
    if (!(defect <= kSignatureTolerance))
        throw SignatureError("signature violation: ||N N* - (" + std::to_string(signature) +
                             ")E||_F = " + std::to_string(defect));

    const int dim = static_cast<int>(n.rows());
    CMatrix t = action ? *action : identity_action(dim);
    require_square(t, dim, "a0.action");
    require_finite(t, "a0.action");
    if (Eigen::FullPivLU<CMatrix>(t).rank() < dim) throw ShapeError("a0.action: singular matrix");
    return AntilinearElement{std::move(n), signature, kind, std::move(t)};
}

CMatrix conjugate_action(const CMatrix& action, const CMatrix& delta) {
    if (action.isIdentity(0.0)) return delta;
    return action.fullPivLu().solve(delta * action);
}

int default_intertwiner_samples(const GroupPresentation& group) {
    return 4 * group.parameter_count() + 4;
}

IntertwinerSolution solve_intertwiner(const GroupPresentation& group, AntilinearKind kind,
                                      int samples, std::uint64_t seed,
                                      std::optional<CMatrix> action) {
    const int n = group.parameter_count();
    if (samples < 2 * n + 2)
        throw DomainError("solve_intertwiner: need at least " + std::to_string(2 * n + 2) +
                          " samples");
    const int d = group.dim;
    const CMatrix t = action ? *action : identity_action(d);
    require_square(t, d, "solve_intertwiner action");
    (void)kind;  // K uses g' = g; Theta's g' is carried entirely by `action`.

    const std::vector<CMatrix> deltas = sample_irreps(group, samples, seed);

    // Column (j,k) holds the operator N -> N Delta*(g') - Delta(g) N applied to the unit matrix E_jk.
    const Eigen::Index unknowns = static_cast<Eigen::Index>(d) * d;
    CMatrix system(static_cast<Eigen::Index>(samples) * unknowns, unknowns);
    for (int s = 0; s < samples; ++s) {
        const CMatrix& delta = deltas[static_cast<std::size_t>(s)];
        const CMatrix partner = conjugate_action(t, delta).conjugate();
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                CMatrix unit = CMatrix::Zero(d, d);
                unit(j, k) = 1.0;
                system.block(s * unknowns, j * d + k, unknowns, 1) =
                    complex_vectorize(unit * partner - delta * unit);
            }
    }

    Eigen::JacobiSVD<CMatrix> svd(system, Eigen::ComputeFullV);
    const Eigen::VectorXd sigma = svd.singularValues();
    const double cutoff = kRankTolerance * std::max(sigma(0), 1.0);
    int nullity = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) <= cutoff) ++nullity;
    if (nullity == 0)
        throw NoIntertwinerError("no intertwiner: N Delta*(g') = Delta(g) N forces N = 0 for group '" +
                                 group.name + "'");

    // With nullity > 1 (reducible over C) the null space holds intertwiners of both signs,
    // e.g. aE + bJ for the SO(2) rotation rep.  Prefer E when it qualifies, then any null
    // vector with NN* = +lambda E, then any with a real scalar NN*.
    const CMatrix nullBasis = svd.matrixV().rightCols(nullity);
    std::vector<CMatrix> candidates;
    {
        const Eigen::VectorXcd e = complex_vectorize(CMatrix::Identity(d, d));
        const Eigen::VectorXcd proj = nullBasis * (nullBasis.adjoint() * e);
        if ((e - proj).norm() <= kIntertwinerTolerance * e.norm())
            candidates.push_back(CMatrix::Identity(d, d));
    }
    for (Eigen::Index c = nullity - 1; c >= 0; --c) {
        CMatrix m(d, d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) m(j, k) = nullBasis(j * d + k, c);
        candidates.push_back(m);
    }

    IntertwinerSolution out;
    out.nullity = nullity;

    std::optional<std::pair<CMatrix, int>> chosen;
    for (const CMatrix& candidate : candidates) {
        const CMatrix nn = candidate * candidate.conjugate();
        const Complex lambda = nn.trace() / static_cast<double>(d);
        const double scalarDefect =
            (nn - lambda * CMatrix::Identity(d, d)).norm() / std::max(nn.norm(), 1e-300);
        const bool realScalar = std::abs(lambda) > 0.0 && scalarDefect <= 1e-6 &&
                                std::abs(lambda.imag()) <= 1e-6 * std::abs(lambda);
        if (!realScalar) continue;
        const int sign = lambda.real() > 0.0 ? 1 : -1;
        if (!chosen || (chosen->second < 0 && sign > 0))
            chosen = {candidate / std::sqrt(std::abs(lambda)), sign};
        if (sign > 0) break;
    }
    CMatrix nmat;
    if (chosen) {
        nmat = chosen->first;
        out.sign = chosen->second;
    } else {
        nmat = candidates[candidates.size() - static_cast<std::size_t>(nullity)];
        nmat /= nmat.norm() / std::sqrt(static_cast<double>(d));
    }
    out.N = fix_phase(nmat);

    for (const CMatrix& delta : deltas) {
        const CMatrix partner = conjugate_action(t, delta).conjugate();
        out.residual = std::max(out.residual, (out.N * partner - delta * out.N).norm());
    }
    return out;
}

double intertwining_residual(const GroupPresentation& group, const AntilinearElement& a0,
                             int samples, std::uint64_t seed) {
    double worst = 0.0;
    for (const CMatrix& delta : sample_irreps(group, samples, seed)) {
        const CMatrix partner = conjugate_action(a0.action, delta).conjugate();
        worst = std::max(worst, (a0.N * partner - delta * a0.N).norm());
    }
    return worst;
}

CMatrix Corep::subgroup_matrix(std::span<const double> alphas) const {
    return represent_subgroup(evaluate(group, alphas));
}

CMatrix Corep::represent_subgroup(const CMatrix& delta) const {
    if (type == CorepType::A) return delta;
    const int d = group.dim;
    CMatrix out = CMatrix::Zero(2 * d, 2 * d);
    out.topLeftCorner(d, d) = delta;
    out.bottomRightCorner(d, d) = conjugate_action(a0.action, delta).conjugate();
    return out;
}

Corep build_corep(const GroupPresentation& group, const AntilinearElement& a0, CorepType type,
                  std::uint64_t seed) {
    require_square(a0.N, group.dim, "build_corep: a0.N");
    require_square(a0.action, group.dim, "build_corep: a0.action");

    Corep c;
    c.group = group;
    c.a0 = a0;
    c.type = type;
    if (type == CorepType::A) {
        const int samples = default_intertwiner_samples(group);
        const double residual = intertwining_residual(group, a0, samples, seed);
        if (!(residual <= kIntertwinerTolerance))
            throw ConstructionError("type a: N does not intertwine Delta* and Delta (residual " +
                                        std::to_string(residual) + ")",
                                    residual);
        c.blockDim = group.dim;
        c.Da0 = a0.N;
    } else {
        c.blockDim = 2 * group.dim;
        c.Da0 = type_b_da0(group.dim, a0.signature);
    }

    const double defect = signature_defect(c.Da0, a0.signature);
    if (!(defect <= kSignatureTolerance))
        throw ConstructionError("D(a0) D(a0)* != sE (defect " + std::to_string(defect) + ")",
                                defect);
    return c;
}

CMatrix coset_matrix_at(const Corep& corep, double alpha0, std::span<const double> alphas) {
    const Complex phase{std::cos(alpha0), std::sin(alpha0)};
    return phase * (corep.Da0 * corep.subgroup_matrix(alphas).conjugate());
}

CMatrix coset_matrix(const Corep& corep, const ParameterPoint& point) {
    if (static_cast<int>(point.alphas().size()) != corep.parameter_count())
        throw ShapeError("coset_matrix: expected " + std::to_string(corep.parameter_count()) +
                         " parameters");
    const CMatrix base = corep.Da0 * corep.subgroup_matrix(point.alphas()).conjugate();
    if (point.alpha0() == 0.0) return base;
    return point.phase() * base;
}

CorepOperator corep_product(const Corep& corep, const CorepOperator& x, const CorepOperator& y) {
    require_square(x.matrix, corep.blockDim, "corep_product: left operand");
    require_square(y.matrix, corep.blockDim, "corep_product: right operand");
    CorepOperator out;
    out.matrix = x.antilinear ? CMatrix(x.matrix * y.matrix.conjugate())
                              : CMatrix(x.matrix * y.matrix);
    out.antilinear = x.antilinear != y.antilinear;
    return out;
}

GroupElement group_product(const Corep& corep, const GroupElement& x, const GroupElement& y) {
    const auto primed = [&](const CMatrix& delta) {
        return conjugate_action(corep.a0.action, delta);
    };
    if (!x.coset && !y.coset) return {x.irrep * y.irrep, false};
    if (!x.coset && y.coset) return {primed(x.irrep) * y.irrep, true};
    if (x.coset && !y.coset) return {x.irrep * y.irrep, true};
    return {static_cast<double>(corep.a0.signature) * (primed(x.irrep) * y.irrep), false};
}

CorepOperator represent(const Corep& corep, const GroupElement& element) {
    const CMatrix sub = corep.represent_subgroup(element.irrep);
    if (!element.coset) return {sub, false};
    return {corep.Da0 * sub.conjugate(), true};
}

double verify_corep_law(const Corep& corep, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("verify_corep_law: trials must be >= 1");
    const std::vector<CMatrix> gs = sample_irreps(corep.group, trials, seed);
    const std::vector<CMatrix> hs = sample_irreps(corep.group, trials, seed ^ 0x9e3779b97f4a7c15ULL);

    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        for (int mask = 0; mask < 4; ++mask) {
            const GroupElement x{gs[static_cast<std::size_t>(t)], (mask & 2) != 0};
            const GroupElement y{hs[static_cast<std::size_t>(t)], (mask & 1) != 0};
            const CorepOperator viaLaw = corep_product(corep, represent(corep, x), represent(corep, y));
            const CorepOperator direct = represent(corep, group_product(corep, x, y));
            worst = std::max(worst, (viaLaw.matrix - direct.matrix).norm());
        }
    }
    return worst;
}

}  // namespace corepalg
