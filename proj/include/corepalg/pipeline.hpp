#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corepalg/algebra.hpp"
#include "corepalg/spec_io.hpp"
#include "corepalg/topology.hpp"

namespace corepalg {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// Thresholds the pipeline holds each check to.
inline constexpr double kCorepLawTolerance = 1e-9;
inline constexpr double kPhaseGeneratorTolerance = 1e-9;
inline constexpr double kMetricTolerance = 1e-12;
inline constexpr double kMethodAgreementTolerance = 1e-8;

enum class MethodChoice { Analytic, FiniteDifference, Both };

std::string_view to_string(MethodChoice method);
MethodChoice parse_method(std::string_view text);

struct RunOptions {
    std::optional<TypeRequest> typeOverride;
    MethodChoice method = MethodChoice::Both;
    double tolClosure = kClosureTolerance;
    double tolJacobi = kJacobiTolerance;
    std::uint64_t seed = 1;
    int trials = 100;
    double fdStep = kDefaultFdStep;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    double value = 0.0;
    double threshold = 0.0;
    /// Advisory checks are reported but never fail a run.
    bool advisory = false;
};

struct Analysis {
    Corep corep;
    TypeRequest requested = TypeRequest::Auto;
    std::optional<IntertwinerSolution> intertwiner;
    TangentBasis basis;
    /// Finite-difference basis in MethodChoice::Both mode.
    std::optional<TangentBasis> crossBasis;
    double crossDifference = 0.0;
    SpanReport span;
    StructureConstants constants;
    GradingReport grading;
    JacobiReport jacobi;
    MetricAxiomReport metric;
    ConnectivityVerdict connectivity;
    double corepLawDefect = 0.0;
    double phaseGeneratorDefect = 0.0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Builds the corepresentation requested by the spec. Input problems (no intertwiner,
/// signature violations, failed type-a preconditions) surface as SpecError.
Corep resolve_corep(const ExtensionSpec& spec, const RunOptions& options,
                    std::optional<IntertwinerSolution>* intertwiner = nullptr);

/// Runs build -> extract -> constants -> Jacobi -> topology.
Analysis analyze(const ExtensionSpec& spec, const RunOptions& options);

/// Machine-readable report; byte-identical for identical spec, options and tool version.
Json report_json(const ExtensionSpec& spec, const RunOptions& options, const Analysis& analysis);

/// Human-readable report using X_p / X'_q labels; `timingsMs` lists stage durations.
std::string report_text(const ExtensionSpec& spec, const RunOptions& options,
                        const Analysis& analysis,
                        const std::vector<std::pair<std::string, double>>& timingsMs);

struct DiffWitness {
    std::string path;
    std::string a;
    std::string b;
    double difference = 0.0;
};

struct CompareResult {
    bool schemaMismatch = false;
    std::string mismatch;
    double maxDifference = 0.0;
    std::vector<DiffWitness> witnesses;

    bool equal() const { return !schemaMismatch && witnesses.empty(); }
};

/// Fieldwise comparison of two reports. Numbers differing by more than `tol` and unequal
/// strings or booleans are listed as witnesses; structural differences are a schema
/// mismatch. Run metadata ("tool", "run") is not compared.
CompareResult compare_reports(const Json& a, const Json& b, double tol);

}  // namespace corepalg
