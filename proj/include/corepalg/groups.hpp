#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corepalg/linalg.hpp"

namespace corepalg {

/// A matrix Lie group given by n one-parameter generators of size d x d.
///
/// Elements are evaluated in canonical coordinates of the second kind,
/// D(alpha) = exp(alpha_1 A_1) exp(alpha_2 A_2) ... exp(alpha_n A_n), so D is analytic
/// in every parameter, D(0) = E, and dD/dalpha_p at the origin is exactly A_p.
/// Faithfulness of the presentation is the caller's responsibility.
struct GroupPresentation {
    std::string name;
    int dim = 0;
    std::vector<CMatrix> generators;

    int parameter_count() const { return static_cast<int>(generators.size()); }
};

/// Validating constructor: every generator must be dim x dim with finite entries.
GroupPresentation make_group(std::string name, int dim, std::vector<CMatrix> generators);

/// D(alphas); alphas.size() must equal the parameter count.
CMatrix evaluate(const GroupPresentation& group, std::span<const double> alphas);

/// Names accepted by catalog(): U1, SO2, SO3, SU2, SL2R.
std::span<const std::string_view> catalog_names();

/// Built-in presentation with its conventional generators. Throws NotFoundError.
GroupPresentation catalog(std::string_view name);

/// Parameters (alpha_0; alpha_1..alpha_n) of one group element.
///
/// alpha_0 is the coset phase, identified modulo 2 pi and stored reduced to [0, 2 pi).
/// The phase factor exp(i alpha_0) is evaluated on a grid of 2^-36 turns so that alpha_0 and
/// alpha_0 + 2 pi produce bit-identical factors despite the rounding of the addition.
class ParameterPoint {
public:
    ParameterPoint() = default;
    explicit ParameterPoint(std::vector<double> alphas, double alpha0 = 0.0);

    double alpha0() const { return alpha0_; }
    const std::vector<double>& alphas() const { return alphas_; }
    double norm() const;

    /// exp(i alpha_0) on the 2^-36-turn grid.
    Complex phase() const;

    static double normalize_phase(double alpha0);

private:
    double alpha0_ = 0.0;
    std::vector<double> alphas_;
};

/// Seeded samples uniform in the open n-ball of radius epsilon. When `alpha0` is given it is
/// attached to every point (the (n+1)-parameter coset case); otherwise alpha0 = 0.
std::vector<ParameterPoint> sample_neighborhood(const GroupPresentation& group, double epsilon,
                                                int count, std::uint64_t seed,
                                                std::optional<double> alpha0 = std::nullopt);

}  // namespace corepalg
