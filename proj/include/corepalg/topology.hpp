#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "corepalg/corep.hpp"

namespace corepalg {

/// d1(g, g') = ||D(g) - D(g')||_F on the subgroup; alpha0 of both points is ignored.
double distance_d1(const Corep& corep, const ParameterPoint& p, const ParameterPoint& q);

/// d2(a, a') = ||D(a) - D(a')||_F on the coset with the phase e^{i alpha0} stripped from both.
double distance_d2(const Corep& corep, const ParameterPoint& p, const ParameterPoint& q);

/// Parameter points closer than this are not used for positivity checks.
inline constexpr double kPositivitySeparation = 1e-3;
/// A distance at or below this between separated points counts as zero.
inline constexpr double kPositivityFloor = 1e-12;

/// Largest observed violations of the metric axioms for d1 and d2 on random triples.
///
/// Four axiom groups are checked: symmetry, self-distance, positivity and the triangle
/// inequality. Positivity failures are faithfulness warnings: a zero distance between
/// distinct parameter points means the corepresentation does not separate them.
struct MetricAxiomReport {
    int trials = 0;
    double symmetry = 0.0;
    double selfDistance = 0.0;
    double triangle = 0.0;
    /// max d2 over pairs that differ only in alpha0 (must be exactly 0).
    double alpha0Only = 0.0;
    int positivityChecks = 0;
    int faithfulnessWarnings = 0;
    double minSeparatedDistance = 0.0;

    /// max(symmetry, selfDistance, triangle); positivity is reported separately.
    double max_violation() const;
};

MetricAxiomReport verify_metric_axioms(const Corep& corep, int trials, std::uint64_t seed);

enum class Connectivity { Connected, NotConnected };
enum class ConnectivityReason { TypeANEqualsE, TypeANNotE, TypeB };

std::string_view to_string(Connectivity verdict);
std::string_view to_string(ConnectivityReason reason);

struct ConnectivityVerdict {
    Connectivity verdict = Connectivity::NotConnected;
    ConnectivityReason reason = ConnectivityReason::TypeB;
    /// ||D(a0) - E||_F, the separation of the coset limit point from the identity.
    double numericEvidence = 0.0;
};

/// Tolerance for N = E in the connectedness rule.
inline constexpr double kIdentityTolerance = 1e-9;

/// Rule-based verdict, assuming G itself is connected: only type a with N = E is connected.
ConnectivityVerdict classify_connectedness(const Corep& corep);

struct ConvergenceSample {
    double scale = 0.0;
    double subgroupDistance = 0.0;  // ||D(t u) - E||
    double cosetDistance = 0.0;     // ||D(a0 g(t u)) - D(a0)|| at alpha0 = 0
};

/// Distances from the two limit points E and D(a0) along the ray t * direction.
std::vector<ConvergenceSample> probe_convergence(const Corep& corep,
                                                 std::span<const double> direction,
                                                 std::span<const double> scales);

}  // namespace corepalg
