#pragma once

#include <functional>
#include <string>
#include <vector>

#include "corepalg/corep.hpp"

namespace corepalg {

enum class DiffMethod { Analytic, FiniteDifference };

std::string_view to_string(DiffMethod method);

/// Default finite-difference step (one Richardson level on top).
inline constexpr double kDefaultFdStep = 1e-5;
/// Steps above this are rejected.
inline constexpr double kMaxFdStep = 0.5;

/// Tangent matrices at the two convergence points E and D(a0).
///
/// Coset generators are stored by direction q = 1..n; externally they carry the labels
/// X'_{n+1}..X'_{2n}, and the phase generator is X'_0.
struct TangentBasis {
    std::vector<CMatrix> subgroup;  // X_1..X_n
    std::vector<CMatrix> coset;     // X'_{n+1}..X'_{2n}
    CMatrix phase;                  // X'_0
    DiffMethod method = DiffMethod::Analytic;
    double fdStep = 0.0;

    int n() const { return static_cast<int>(subgroup.size()); }
    int block_dim() const { return static_cast<int>(phase.rows()); }

    /// Coset generators in report order: X'_0, X'_{n+1}, ..., X'_{2n}.
    std::vector<CMatrix> coset_with_phase() const;
};

/// Label of a subgroup generator, "X_p" (p = 1..n).
std::string subgroup_label(int p);
/// Label of the coset generator at report position `pos` (0 -> "X'_0", pos -> "X'_{n+pos}").
std::string coset_label(int pos, int n);
/// Coset generator index at report position `pos`: 0, n+1, ..., 2n.
int coset_index(int pos, int n);

/// Plain central difference (f(h) - f(-h)) / 2h.
CMatrix central_difference(const std::function<CMatrix(double)>& f, double h);

/// Central differences at h and h/2 combined by one Richardson step: (4 D(h/2) - D(h)) / 3.
CMatrix richardson_derivative(const std::function<CMatrix(double)>& f, double h);

/// X_p = dD(g)/dalpha_p at the origin. Throws DomainError for h <= 0 or h > 0.5 on the
/// finite-difference path.
std::vector<CMatrix> extract_subgroup_generators(const Corep& corep, DiffMethod method,
                                                 double h = kDefaultFdStep);

struct CosetGenerators {
    CMatrix phase;               // X'_0
    std::vector<CMatrix> coset;  // X'_{n+1}..X'_{2n}
};

/// X'_q = d(e^{i alpha0} D(a0 g))/dalpha_q at alpha0 = alpha = 0; analytically X'_0 = i D(a0)
/// and X'_{n+q} = D(a0) X_q*.
CosetGenerators extract_coset_generators(const Corep& corep, DiffMethod method,
                                         double h = kDefaultFdStep);

TangentBasis extract_basis(const Corep& corep, DiffMethod method, double h = kDefaultFdStep);

/// Largest entrywise |difference| between two bases of the same corep.
double max_generator_difference(const TangentBasis& a, const TangentBasis& b);

enum class SpanPattern {
    CosetDependent,  // every X'_q (q >= 1) depends on {X_p} and the union has real rank n + 1
    FullGraded,      // the union has real rank 2n + 1
    Irregular,
    Trivial,         // n = 0: only X'_0
};

std::string_view to_string(SpanPattern pattern);

struct SpanReport {
    int n = 0;
    int subgroupRealRank = 0;
    int cosetRealRank = 0;  // {X'_0, X'_{n+1}..X'_{2n}}
    int unionRealRank = 0;
    /// Complex rank of {X_1..X_n, X'_0}.
    int subgroupPhaseComplexRank = 0;
    /// Every X'_q, q = 1..n, lies in the real span of {X_p}.
    bool cosetDependsOnSubgroup = false;
    SpanPattern pattern = SpanPattern::Irregular;
    double tol = kRankTolerance;
};

SpanReport span_report(const TangentBasis& basis, double tol = kRankTolerance);

}  // namespace corepalg
