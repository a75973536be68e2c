#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "corepalg/groups.hpp"
#include "corepalg/linalg.hpp"

namespace corepalg {

enum class AntilinearKind { K, Theta };
enum class CorepType { A, B };

std::string_view to_string(AntilinearKind kind);
std::string_view to_string(CorepType type);

/// Tolerance on ||N N* - s E||_F accepted for an antilinear element.
inline constexpr double kSignatureTolerance = 1e-9;

/// The antilinear element a0 = N followed by complex conjugation, with a0^2 = s.
///
/// `action` is the matrix T of the inner automorphism g -> g' on the irrep:
/// Delta(g') = T^-1 Delta(g) T. For kind K g' is g itself; for kind Theta it should be
/// supplied, and defaults to the identity when omitted.
struct AntilinearElement {
    CMatrix N;
    int signature = 1;
    AntilinearKind kind = AntilinearKind::K;
    CMatrix action;
};

/// ||N N* - s E||_F
double signature_defect(const CMatrix& n, int signature);

/// Validating constructor; throws SignatureError when N N* != s E within kSignatureTolerance.
AntilinearElement make_antilinear(CMatrix n, int signature, AntilinearKind kind,
                                  std::optional<CMatrix> action = std::nullopt);

/// Delta(g') for the irrep matrix Delta(g).
CMatrix conjugate_action(const CMatrix& action, const CMatrix& delta);

struct IntertwinerSolution {
    CMatrix N;
    /// Sign of the scalar N N* = lambda E; empty when N N* is not a real scalar matrix.
    std::optional<int> sign;
    /// Largest ||N Delta*(g_i') - Delta(g_i) N||_F over the sample set.
    double residual = 0.0;
    /// Dimension of the numerical null space.
    int nullity = 0;
};

/// Default sample count 4n + 4.
int default_intertwiner_samples(const GroupPresentation& group);

/// Solves N Delta*(g') = Delta(g) N over random group samples through an SVD null space.
///
/// N is scaled so that N N* = +-E and its phase is fixed so that the first largest entry is
/// real positive. Throws NoIntertwinerError when the null space is trivial and DomainError
/// when samples < 2n + 2.
IntertwinerSolution solve_intertwiner(const GroupPresentation& group, AntilinearKind kind,
                                      int samples, std::uint64_t seed,
                                      std::optional<CMatrix> action = std::nullopt);

/// max_i ||N Delta*(g_i') - Delta(g_i) N||_F over seeded samples.
double intertwining_residual(const GroupPresentation& group, const AntilinearElement& a0,
                             int samples, std::uint64_t seed);

/// Full corepresentation of G + a0 G.
///
/// Type a: D(g) = Delta(g), D(a0) = N, block dimension d.
/// Type b: D(g) = diag(Delta(g), Delta*(g')), D(a0) = [[0, sE], [E, 0]], block dimension 2d.
/// Antilinear operators are stored as (matrix, conjugate-after) with the product law
/// D(a g) = D(a) D(g)*, D(g a) = D(g) D(a), D(a b) = D(a) D(b)*.
struct Corep {
    GroupPresentation group;
    AntilinearElement a0;
    CorepType type = CorepType::A;
    int blockDim = 0;
    CMatrix Da0;

    int parameter_count() const { return group.parameter_count(); }

    /// D(g(alpha)). There is deliberately no alpha0 argument: the phase lives on the coset only.
    CMatrix subgroup_matrix(std::span<const double> alphas) const;

    /// D(g) for the element whose irrep matrix is `delta`.
    CMatrix represent_subgroup(const CMatrix& delta) const;
};

/// Tolerance on the intertwining residual required for a type-a build.
inline constexpr double kIntertwinerTolerance = 1e-8;

/// Throws ConstructionError (with the residual) when a type-a N fails the intertwining
/// equation, or when D(a0) D(a0)* != s E.
Corep build_corep(const GroupPresentation& group, const AntilinearElement& a0, CorepType type,
                  std::uint64_t seed = 1);

/// e^{i alpha0} D(a0) D(g(alpha))*, the matrix of the element a0 g with its phase attached.
CMatrix coset_matrix(const Corep& corep, const ParameterPoint& point);

/// Same as coset_matrix with an unreduced alpha0, for differentiation in alpha0.
CMatrix coset_matrix_at(const Corep& corep, double alpha0, std::span<const double> alphas);

/// A corepresentation operator: matrix M acting as v -> M v (linear) or v -> M v* (antilinear).
struct CorepOperator {
    CMatrix matrix;
    bool antilinear = false;
};

/// (M1, f1)(M2, f2) = (f1 ? M1 M2* : M1 M2, f1 xor f2).
CorepOperator corep_product(const Corep& corep, const CorepOperator& x, const CorepOperator& y);

/// Abstract element of G + a0 G: g (coset = false) or a0 g (coset = true), with g given by
/// its irrep matrix.
struct GroupElement {
    CMatrix irrep;
    bool coset = false;
};

/// Multiplication in G + a0 G from g a0 = a0 g' and a0^2 = s:
///   g (a0 h) = a0 (g' h), (a0 g) h = a0 (g h), (a0 g)(a0 h) = s g' h.
/// Closure needs g -> g' to be an involution on the irrep.
GroupElement group_product(const Corep& corep, const GroupElement& x, const GroupElement& y);

/// Corepresentation operator of an abstract element (phase-free).
CorepOperator represent(const Corep& corep, const GroupElement& element);

/// Largest Frobenius defect ||D(x) D(y) - D(x y)|| over random g, h and the four products
/// g h, g a, a g, a b.
double verify_corep_law(const Corep& corep, int trials, std::uint64_t seed);

}  // namespace corepalg
