#include "corepalg/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "corepalg/errors.hpp"
#include "corepalg/random.hpp"

namespace corepalg {

namespace {

constexpr double kTrialRadius = 1.5;

double parameter_distance(const ParameterPoint& p, const ParameterPoint& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.alphas().size(); ++i) {
        const double diff = p.alphas()[i] - q.alphas()[i];
        s += diff * diff;
    }
    return std::sqrt(s);
}

ParameterPoint with_alpha0(const ParameterPoint& p, double alpha0) {
    return ParameterPoint(p.alphas(), alpha0);
}

}  // namespace

double distance_d1(const Corep& corep, const ParameterPoint& p, const ParameterPoint& q) {
    return frobenius_dist(corep.subgroup_matrix(p.alphas()), corep.subgroup_matrix(q.alphas()));
}

double distance_d2(const Corep& corep, const ParameterPoint& p, const ParameterPoint& q) {
    return frobenius_dist(coset_matrix(corep, with_alpha0(p, 0.0)),
                          coset_matrix(corep, with_alpha0(q, 0.0)));
}

double MetricAxiomReport::max_violation() const {
    return std::max({symmetry, selfDistance, triangle});
}

MetricAxiomReport verify_metric_axioms(const Corep& corep, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("verify_metric_axioms: trials must be >= 1");
    MetricAxiomReport r;
    r.trials = trials;
    r.minSeparatedDistance = std::numeric_limits<double>::infinity();

    const int n = corep.parameter_count();
    Rng master(seed);
    for (int t = 0; t < trials; ++t) {
        Rng local(master.split());
        std::vector<ParameterPoint> pts;
        for (int k = 0; k < 3; ++k) {
            std::vector<double> alphas(static_cast<std::size_t>(n), 0.0);
            if (n > 0)
                alphas = sample_neighborhood(corep.group, kTrialRadius, 1, local.split())[0].alphas();
            pts.emplace_back(std::move(alphas), local.uniform(0.0, 2.0 * std::numbers::pi));
        }

        for (const auto& dist : {&distance_d1, &distance_d2}) {
            const double ab = dist(corep, pts[0], pts[1]);
            const double ba = dist(corep, pts[1], pts[0]);
            const double bc = dist(corep, pts[1], pts[2]);
            const double ac = dist(corep, pts[0], pts[2]);
            r.symmetry = std::max(r.symmetry, std::abs(ab - ba));
            for (const auto& p : pts) r.selfDistance = std::max(r.selfDistance, dist(corep, p, p));
            r.triangle = std::max({r.triangle, ac - (ab + bc), ab - (ac + bc), bc - (ab + ac)});

            const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
            for (const auto& [i, j] : pairs) {
                if (parameter_distance(pts[i], pts[j]) < kPositivitySeparation) continue;
                const double dij = dist(corep, pts[i], pts[j]);
                ++r.positivityChecks;
                r.minSeparatedDistance = std::min(r.minSeparatedDistance, dij);
                if (dij <= kPositivityFloor) ++r.faithfulnessWarnings;
            }
        }

        const ParameterPoint shifted = with_alpha0(pts[0], local.uniform(0.0, 2.0 * std::numbers::pi));
        r.alpha0Only = std::max(r.alpha0Only, distance_d2(corep, pts[0], shifted));
    }
    r.triangle = std::max(r.triangle, 0.0);
    if (r.positivityChecks == 0) r.minSeparatedDistance = 0.0;
    return r;
}

std::string_view to_string(Connectivity verdict) {
    return verdict == Connectivity::Connected ? "connected" : "notConnected";
}

std::string_view to_string(ConnectivityReason reason) {
    switch (reason) {
        case ConnectivityReason::TypeANEqualsE: return "typeA_N_equals_E";
        case ConnectivityReason::TypeANNotE: return "typeA_N_not_E";
        case ConnectivityReason::TypeB: return "typeB";
    }
    return "typeB";
}

ConnectivityVerdict classify_connectedness(const Corep& corep) {
    ConnectivityVerdict v;
    const CMatrix e = CMatrix::Identity(corep.blockDim, corep.blockDim);
    v.numericEvidence = frobenius_dist(corep.Da0, e);
    if (corep.type == CorepType::B) {
        v.verdict = Connectivity::NotConnected;
        v.reason = ConnectivityReason::TypeB;
    } else if (frobenius_dist(corep.a0.N, e) <= kIdentityTolerance) {
        v.verdict = Connectivity::Connected;
        v.reason = ConnectivityReason::TypeANEqualsE;
    } else {
        v.verdict = Connectivity::NotConnected;
        v.reason = ConnectivityReason::TypeANNotE;
    }
    return v;
}

std::vector<ConvergenceSample> probe_convergence(const Corep& corep,
                                                 std::span<const double> direction,
                                                 std::span<const double> scales) {
    if (static_cast<int>(direction.size()) != corep.parameter_count())
        throw ShapeError("probe_convergence: direction length must equal the parameter count");
    const CMatrix e = CMatrix::Identity(corep.blockDim, corep.blockDim);
    std::vector<ConvergenceSample> out;
    for (double t : scales) {
        std::vector<double> alphas(direction.begin(), direction.end());
        for (double& a : alphas) a *= t;
        const ParameterPoint p(alphas);
        out.push_back({t, frobenius_dist(corep.subgroup_matrix(alphas), e),
                       frobenius_dist(coset_matrix(corep, p), corep.Da0)});
    }
    return out;
}

}  // namespace corepalg
