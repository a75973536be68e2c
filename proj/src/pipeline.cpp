#include "corepalg/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "corepalg/errors.hpp"

namespace corepalg {

namespace {

SpecError spec_error(const ExtensionSpec& spec, std::string_view key, const std::string& message) {
    return SpecError(spec.source, line_of_key(spec.text, key), message);
}

int infer_signature(const ExtensionSpec& spec, const CMatrix& n) {
    for (int s : {1, -1})
        if (signature_defect(n, s) <= kSignatureTolerance) return s;
    throw spec_error(spec, "N", "signature violation: N N* is neither +E nor -E");
}

AntilinearElement antilinear_from(const ExtensionSpec& spec, const CMatrix& n,
                                  std::optional<int> signature) {
    const int s = signature ? *signature : infer_signature(spec, n);
    try {
        return make_antilinear(n, s, spec.kind, spec.action);
    } catch (const SignatureError& e) {
        throw spec_error(spec, "N", e.what());
    } catch (const ShapeError& e) {
        throw spec_error(spec, "action", e.what());
    }
}

IntertwinerSolution solve_for(const ExtensionSpec& spec, const RunOptions& options) {
    try {
        return solve_intertwiner(spec.group, spec.kind, default_intertwiner_samples(spec.group),
                                 options.seed, spec.action);
    } catch (const NoIntertwinerError& e) {
        throw spec_error(spec, "type",
                         std::string(e.what()) +
                             " (Wigner type c is not supported; request type \"b\" explicitly)");
    }
}

CheckResult upper_bound_check(std::string name, double value, double threshold, bool advisory = false) {
    return {std::move(name), value <= threshold, value, threshold, advisory};
}

Json tensor_to_json(const Tensor3& t, Field field) {
    Json out = Json::array();
    for (int i = 0; i < t.dim(0); ++i) {
        Json plane = Json::array();
        for (int j = 0; j < t.dim(1); ++j) {
            Json row = Json::array();
            for (int k = 0; k < t.dim(2); ++k) {
                const Complex v = t(i, j, k);
                if (field == Field::Real)
                    row.push_back(v.real());
                else
                    row.push_back({v.real(), v.imag()});
            }
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

Json table_to_json(const ResidualTable& t) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < t.cols(); ++j) row.push_back(t(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

Json int_list(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x);
    return out;
}

std::vector<int> subgroup_indices(int n) {
    std::vector<int> v;
    for (int p = 0; p < n; ++p) v.push_back(p + 1);
    return v;
}

std::vector<int> coset_indices(int n) {
    std::vector<int> v;
    for (int p = 0; p <= n; ++p) v.push_back(coset_index(p, n));
    return v;
}

// Generator label of position `pos` in an index slot of the given kind.
int slot_label(bool cosetSlot, int pos, int n) { return cosetSlot ? coset_index(pos, n) : pos + 1; }

// Which slots (p, q, r, t) of each Jacobi relation range over coset indices.
std::array<bool, 4> jacobi_slots(JacobiRelation rel) {
    switch (rel) {
        case JacobiRelation::Lie: return {false, false, false, false};
        case JacobiRelation::First: return {false, false, true, true};
        case JacobiRelation::Second: return {false, true, true, false};
        case JacobiRelation::Third: return {true, true, true, true};
    }
    return {false, false, false, false};
}

std::string set_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "}";
    return os.str();
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os << std::setprecision(6) << std::fixed;
    os << (z.real() < 0 ? "" : " ") << z.real() << (z.imag() < 0 ? " - " : " + ")
       << std::abs(z.imag()) << "i";
    return os.str();
}

void write_matrix(std::ostringstream& os, const std::string& label, const CMatrix& m) {
    os << "  " << label << " =\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        os << "    [";
        for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << format_complex(m(r, c));
        os << "]\n";
    }
}

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

std::string dump_leaf(const Json& v) { return v.dump(); }

void compare_nodes(const Json& a, const Json& b, const std::string& path, double tol,
                   CompareResult& out) {
    if (out.schemaMismatch) return;
    if (a.is_number() && b.is_number()) {
        const double x = a.get<double>();
        const double y = b.get<double>();
        const double diff = std::abs(x - y);
        if (std::isnan(diff) || diff > tol) out.witnesses.push_back({path, dump_leaf(a), dump_leaf(b), diff});
        if (!std::isnan(diff)) out.maxDifference = std::max(out.maxDifference, diff);
        return;
    }
    if (a.is_null() != b.is_null()) {  // optional sections present in only one report
        out.witnesses.push_back({path, dump_leaf(a), dump_leaf(b), 0.0});
        return;
    }
    if (a.type() != b.type()) {
        out.schemaMismatch = true;
        out.mismatch = path + ": value kinds differ (" + a.type_name() + " vs " + b.type_name() + ")";
        return;
    }
    if (a.is_object()) {
        if (a.size() != b.size()) {
            out.schemaMismatch = true;
            out.mismatch = path + ": objects have different fields";
            return;
        }
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) {
                out.schemaMismatch = true;
                out.mismatch = path + ": field '" + it.key() + "' missing in second report";
                return;
            }
            const std::string child = path.empty() ? it.key() : path + "." + it.key();
            compare_nodes(it.value(), b.at(it.key()), child, tol, out);
        }
        return;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            out.schemaMismatch = true;
            out.mismatch = path + ": arrays have different lengths";
            return;
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            compare_nodes(a[i], b[i], path + "[" + std::to_string(i) + "]", tol, out);
        return;
    }
    if (a != b) out.witnesses.push_back({path, dump_leaf(a), dump_leaf(b), 0.0});
}

}  // namespace

std::string_view to_string(MethodChoice method) {
    switch (method) {
        case MethodChoice::Analytic: return "analytic";
        case MethodChoice::FiniteDifference: return "fd";
        case MethodChoice::Both: return "both";
    }
    return "both";
}

MethodChoice parse_method(std::string_view text) {
    if (text == "analytic") return MethodChoice::Analytic;
    if (text == "fd") return MethodChoice::FiniteDifference;
    if (text == "both") return MethodChoice::Both;
    throw std::invalid_argument("method must be one of analytic, fd, both");
}

bool Analysis::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.advisory || c.passed; });
}

Corep resolve_corep(const ExtensionSpec& spec, const RunOptions& options,
                    std::optional<IntertwinerSolution>* intertwiner) {
    const TypeRequest request = options.typeOverride.value_or(spec.type);
    const int d = spec.group.dim;

    AntilinearElement a0;
    CorepType type = CorepType::A;
    if (request == TypeRequest::Auto) {
        IntertwinerSolution sol = solve_for(spec, options);
        if (!sol.sign)
            throw spec_error(spec, "type", "intertwiner found but N N* is not a real multiple of E");
        a0 = antilinear_from(spec, sol.N, *sol.sign);
        type = *sol.sign > 0 ? CorepType::A : CorepType::B;
        if (intertwiner) *intertwiner = std::move(sol);
    } else {
        CMatrix n;
        if (spec.N) {
            n = *spec.N;
        } else if (request == TypeRequest::A && spec.kind == AntilinearKind::Theta) {
            IntertwinerSolution sol = solve_for(spec, options);
            n = sol.N;
            if (intertwiner) *intertwiner = std::move(sol);
        } else {
            n = CMatrix::Identity(d, d);
        }
        a0 = antilinear_from(spec, n, spec.signature);
        type = request == TypeRequest::A ? CorepType::A : CorepType::B;
    }

    try {
        return build_corep(spec.group, a0, type, options.seed);
    } catch (const ConstructionError& e) {
        throw spec_error(spec, "N", e.what());
    }
}

Analysis analyze(const ExtensionSpec& spec, const RunOptions& options) {
    Analysis a;
    a.requested = options.typeOverride.value_or(spec.type);
    a.corep = resolve_corep(spec, options, &a.intertwiner);
    const Corep& c = a.corep;
    const int n = c.parameter_count();

    const DiffMethod primary = options.method == MethodChoice::FiniteDifference
                                   ? DiffMethod::FiniteDifference
                                   : DiffMethod::Analytic;
    a.basis = extract_basis(c, primary, options.fdStep);
    if (options.method == MethodChoice::Both) {
        a.crossBasis = extract_basis(c, DiffMethod::FiniteDifference, options.fdStep);
        a.crossDifference = max_generator_difference(a.basis, *a.crossBasis);
    }

    a.span = span_report(a.basis);
    a.constants = compute_structure_constants(a.basis, options.tolClosure);
    a.grading = grading_report(a.basis, a.constants);
    a.jacobi = jacobi_check(a.constants);
    a.corepLawDefect = verify_corep_law(c, options.trials, options.seed);
    a.metric = verify_metric_axioms(c, options.trials, options.seed);
    a.connectivity = classify_connectedness(c);
    a.phaseGeneratorDefect = frobenius_dist(a.basis.phase, Complex{0.0, 1.0} * c.Da0);

    auto& checks = a.checks;
    checks.push_back(upper_bound_check("corepLaw", a.corepLawDefect, kCorepLawTolerance));
    checks.push_back(upper_bound_check("phaseGenerator", a.phaseGeneratorDefect, kPhaseGeneratorTolerance));
    checks.push_back(upper_bound_check("metricSymmetry", a.metric.symmetry, kMetricTolerance));
    checks.push_back(upper_bound_check("metricSelfDistance", a.metric.selfDistance, kMetricTolerance));
    checks.push_back(upper_bound_check("metricTriangle", a.metric.triangle, kMetricTolerance));
    checks.push_back(upper_bound_check("d2Alpha0Excluded", a.metric.alpha0Only, 0.0));
    checks.push_back({"faithfulness", a.metric.faithfulnessWarnings == 0,
                      static_cast<double>(a.metric.faithfulnessWarnings), 0.0, true});
    if (c.type == CorepType::B) {
        checks.push_back({"typeBRealRank", a.span.unionRealRank == 2 * n + 1,
                          static_cast<double>(a.span.unionRealRank), static_cast<double>(2 * n + 1),
                          false});
    }
    if (a.crossBasis)
        checks.push_back(upper_bound_check("methodAgreement", a.crossDifference, kMethodAgreementTolerance));
    checks.push_back(upper_bound_check("gradingClosed", a.grading.worstResidual, options.tolClosure, true));
    checks.push_back(upper_bound_check("jacobi", a.jacobi.max_defect(), options.tolJacobi,
                                       !a.grading.closed));
    return a;
}

Json report_json(const ExtensionSpec& spec, const RunOptions& options, const Analysis& a) {
    const Corep& c = a.corep;
    const int n = c.parameter_count();
    const std::vector<int> sub = subgroup_indices(n);
    const std::vector<int> cos = coset_indices(n);

    Json r;
    r["schemaVersion"] = kSchemaVersion;
    r["tool"] = {{"name", "corepalg"}, {"version", kToolVersion}};
    r["run"] = {{"seed", options.seed},
                {"method", to_string(options.method)},
                {"primaryMethod", to_string(a.basis.method)},
                {"fdStep", options.fdStep},
                {"trials", options.trials},
                {"tolClosure", options.tolClosure},
                {"tolJacobi", options.tolJacobi}};
    r["specEcho"] = spec.echo;

    Json corep;
    corep["group"] = c.group.name;
    corep["d"] = c.group.dim;
    corep["n"] = n;
    corep["requestedType"] = to_string(a.requested);
    corep["type"] = to_string(c.type);
    corep["m"] = c.blockDim;
    corep["signature"] = c.a0.signature;
    corep["kind"] = to_string(c.a0.kind);
    corep["N"] = matrix_to_json(c.a0.N);
    corep["action"] = matrix_to_json(c.a0.action);
    corep["Da0"] = matrix_to_json(c.Da0);
    if (a.intertwiner) {
        corep["intertwiner"] = {{"sign", a.intertwiner->sign ? Json(*a.intertwiner->sign) : Json()},
                                {"residual", a.intertwiner->residual},
                                {"nullity", a.intertwiner->nullity}};
    } else {
        corep["intertwiner"] = nullptr;
    }
    r["corep"] = std::move(corep);

    Json basis;
    Json subgroup = Json::array();
    for (int p = 0; p < n; ++p)
        subgroup.push_back({{"label", subgroup_label(p + 1)},
                            {"matrix", matrix_to_json(a.basis.subgroup[static_cast<std::size_t>(p)])}});
    Json coset = Json::array();
    const std::vector<CMatrix> ys = a.basis.coset_with_phase();
    for (int q = 0; q <= n; ++q)
        coset.push_back({{"label", coset_label(q, n)},
                         {"matrix", matrix_to_json(ys[static_cast<std::size_t>(q)])}});
    basis["subgroup"] = std::move(subgroup);
    basis["coset"] = std::move(coset);
    basis["span"] = {{"subgroupRealRank", a.span.subgroupRealRank},
                     {"cosetRealRank", a.span.cosetRealRank},
                     {"unionRealRank", a.span.unionRealRank},
                     {"subgroupPhaseComplexRank", a.span.subgroupPhaseComplexRank},
                     {"cosetDependsOnSubgroup", a.span.cosetDependsOnSubgroup},
                     {"pattern", to_string(a.span.pattern)},
                     {"tol", a.span.tol}};
    r["basis"] = std::move(basis);

    Json k;
    k["field"] = a.constants.field == Field::Real ? "real" : "complex";
    k["indexLegend"] = {
        {"subgroupIndices", int_list(sub)},
        {"cosetIndices", int_list(cos)},
        {"c", "c[p][q][r]: [X_p, X_q] = sum_r c X_r; p, q, r over subgroupIndices"},
        {"d", "d[p][q][r]: [X'_p, X'_q] = sum_r d X_r; p, q over cosetIndices, r over subgroupIndices"},
        {"e", "e[p][q][r]: [X_p, X'_q] = sum_r e X'_r; p over subgroupIndices, q, r over cosetIndices"},
        {"residuals", "residual of the least-squares expansion for each (p, q) pair, same index sets"}};
    k["c"] = tensor_to_json(a.constants.c, a.constants.field);
    k["d"] = tensor_to_json(a.constants.d, a.constants.field);
    k["e"] = tensor_to_json(a.constants.e, a.constants.field);
    k["residuals"] = {{"c", table_to_json(a.constants.cResidual)},
                      {"d", table_to_json(a.constants.dResidual)},
                      {"e", table_to_json(a.constants.eResidual)}};
    k["nonUnique"] = {{"c", a.constants.cNonUnique},
                      {"d", a.constants.dNonUnique},
                      {"e", a.constants.eNonUnique}};
    r["constants"] = std::move(k);

    const bool worstCosetP = a.grading.worstClass == PairClass::CosetCoset;
    const bool worstCosetQ = a.grading.worstClass != PairClass::SubgroupSubgroup;
    r["grading"] = {{"closed", a.grading.closed},
                    {"worstResidual", a.grading.worstResidual},
                    {"worstPair",
                     a.grading.closed
                         ? Json()
                         : Json{{"class", to_string(a.grading.worstClass)},
                                {"p", slot_label(worstCosetP, a.grading.worstP, n)},
                                {"q", slot_label(worstCosetQ, a.grading.worstQ, n)}}},
                    {"centralX0", a.grading.centralX0},
                    {"x0CommutatorNorm", a.grading.x0CommutatorNorm}};

    const auto slots = jacobi_slots(a.jacobi.witnessRelation);
    Json witness = {{"relation", to_string(a.jacobi.witnessRelation)}};
    const char* names[4] = {"p", "q", "r", "t"};
    for (int i = 0; i < 4; ++i)
        witness[names[i]] = slot_label(slots[static_cast<std::size_t>(i)],
                                       a.jacobi.witness[static_cast<std::size_t>(i)], n);
    r["jacobi"] = {{"lie", a.jacobi.lieDefect},
                   {"relation1", a.jacobi.defect1},
                   {"relation2", a.jacobi.defect2},
                   {"relation3", a.jacobi.defect3},
                   // Below tolerance the arg-max is rounding noise, so no witness is named.
                   {"witness", a.jacobi.max_defect() > options.tolJacobi ? std::move(witness) : Json()},
                   {"advisory", !a.grading.closed}};

    r["topology"] = {
        {"metric",
         {{"trials", a.metric.trials},
          {"axiomGroups", {"symmetry", "selfDistance", "positivity", "triangle"}},
          {"maxViolation", a.metric.max_violation()},
          {"symmetry", a.metric.symmetry},
          {"selfDistance", a.metric.selfDistance},
          {"triangle", a.metric.triangle},
          {"alpha0Only", a.metric.alpha0Only},
          {"positivityChecks", a.metric.positivityChecks},
          {"faithfulnessWarnings", a.metric.faithfulnessWarnings},
          {"minSeparatedDistance", a.metric.minSeparatedDistance}}},
        {"connectivity",
         {{"verdict", to_string(a.connectivity.verdict)},
          {"reason", to_string(a.connectivity.reason)},
          {"numericEvidence", a.connectivity.numericEvidence}}},
        {"corepLawDefect", a.corepLawDefect}};

    if (a.crossBasis)
        r["crossCheck"] = {{"maxGeneratorDifference", a.crossDifference},
                           {"threshold", kMethodAgreementTolerance}};
    else
        r["crossCheck"] = nullptr;

    Json checks = Json::array();
    for (const CheckResult& ch : a.checks)
        checks.push_back({{"name", ch.name},
                          {"passed", ch.passed},
                          {"value", ch.value},
                          {"threshold", ch.threshold},
                          {"advisory", ch.advisory}});
    r["checks"] = std::move(checks);
    r["passed"] = a.passed();
    return r;
}

std::string report_text(const ExtensionSpec& spec, const RunOptions& options, const Analysis& a,
                        const std::vector<std::pair<std::string, double>>& timingsMs) {
    const Corep& c = a.corep;
    const int n = c.parameter_count();
    std::ostringstream os;
    os << "corepalg " << kToolVersion << " analysis report\n";
    os << "source: " << spec.source << "   seed: " << options.seed
       << "   method: " << to_string(options.method) << "\n\n";

    os << "Corepresentation\n";
    os << "  group " << c.group.name << " (d = " << c.group.dim << ", n = " << n << "), a0 kind "
       << to_string(c.a0.kind) << ", a0^2 = " << (c.a0.signature > 0 ? "+1" : "-1") << "\n";
    os << "  type " << to_string(c.type) << " (requested " << to_string(a.requested)
       << "), block dimension m = " << c.blockDim << "\n";
    if (a.intertwiner) {
        os << "  intertwiner: sign "
           << (a.intertwiner->sign ? std::to_string(*a.intertwiner->sign) : std::string("none"))
           << ", residual " << sci(a.intertwiner->residual) << ", null-space dimension "
           << a.intertwiner->nullity << "\n";
    }
    write_matrix(os, "N", c.a0.N);
    write_matrix(os, "D(a0)", c.Da0);

    os << "\nIndex conventions\n";
    os << "  subgroup generators X_p,  p in " << set_string(subgroup_indices(n)) << "\n";
    os << "  coset generators    X'_q, q in {0, n+1, ..., 2n} = " << set_string(coset_indices(n))
       << "\n";

    os << "\nTangent basis (" << to_string(a.basis.method) << ")\n";
    for (int p = 0; p < n; ++p)
        write_matrix(os, subgroup_label(p + 1), a.basis.subgroup[static_cast<std::size_t>(p)]);
    const std::vector<CMatrix> ys = a.basis.coset_with_phase();
    for (int q = 0; q <= n; ++q) write_matrix(os, coset_label(q, n), ys[static_cast<std::size_t>(q)]);

    os << "\nSpans (rank tolerance " << sci(a.span.tol) << ")\n";
    os << "  real rank {X_p}                 = " << a.span.subgroupRealRank << "\n";
    os << "  real rank {X'_q}                = " << a.span.cosetRealRank << "\n";
    os << "  real rank of the union          = " << a.span.unionRealRank << "  (n+1 = " << n + 1
       << ", 2n+1 = " << 2 * n + 1 << ")\n";
    os << "  complex rank {X_p, X'_0}        = " << a.span.subgroupPhaseComplexRank << "\n";
    os << "  X'_q (q >= n+1) depend on {X_p}: " << (a.span.cosetDependsOnSubgroup ? "yes" : "no")
       << "\n";
    os << "  pattern: " << to_string(a.span.pattern) << "\n";

    os << "\nStructure constants (real coefficients, closure tolerance " << sci(options.tolClosure)
       << ")\n";
    const auto& k = a.constants;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            os << "  [X_" << p + 1 << ", X_" << q + 1 << "] =";
            for (int r = 0; r < n; ++r) os << " " << std::showpos << std::setprecision(6) << k.c(p, q, r).real() << std::noshowpos << " X_" << r + 1;
            os << "   (residual " << sci(k.cResidual(p, q)) << ")\n";
        }
    for (int p = 0; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            os << "  [" << coset_label(p, n) << ", " << coset_label(q, n) << "] =";
            for (int r = 0; r < n; ++r) os << " " << std::showpos << std::setprecision(6) << k.d(p, q, r).real() << std::noshowpos << " X_" << r + 1;
            os << "   (residual " << sci(k.dResidual(p, q)) << ")\n";
        }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= n; ++q) {
            os << "  [X_" << p + 1 << ", " << coset_label(q, n) << "] =";
            for (int r = 0; r <= n; ++r) os << " " << std::showpos << std::setprecision(6) << k.e(p, q, r).real() << std::noshowpos << " " << coset_label(r, n);
            os << "   (residual " << sci(k.eResidual(p, q)) << ")\n";
        }

    os << "\nGrading\n";
    os << "  closed: " << (a.grading.closed ? "yes" : "no") << ", worst residual "
       << sci(a.grading.worstResidual) << " (" << to_string(a.grading.worstClass) << ")\n";
    os << "  X'_0 central: " << (a.grading.centralX0 ? "yes" : "no") << " (max commutator norm "
       << sci(a.grading.x0CommutatorNorm) << ")\n";

    os << "\nJacobi defects" << (a.grading.closed ? "" : " (advisory: grading not closed)") << "\n";
    os << "  classic   " << sci(a.jacobi.lieDefect) << "\n";
    os << "  relation1 " << sci(a.jacobi.defect1) << "   [[X_p,X_q],X'_r]\n";
    os << "  relation2 " << sci(a.jacobi.defect2) << "   [[X_p,X'_q],X'_r]\n";
    os << "  relation3 " << sci(a.jacobi.defect3) << "   [[X'_p,X'_q],X'_r]\n";

    os << "\nTopology\n";
    os << "  corep law defect " << sci(a.corepLawDefect) << "\n";
    os << "  metric axioms over " << a.metric.trials << " triples: symmetry " << sci(a.metric.symmetry)
       << ", self-distance " << sci(a.metric.selfDistance) << ", triangle " << sci(a.metric.triangle)
       << "\n";
    os << "  positivity: " << a.metric.positivityChecks << " separated pairs, "
       << a.metric.faithfulnessWarnings << " faithfulness warnings\n";
    os << "  d2 over alpha0-only pairs: " << sci(a.metric.alpha0Only) << "\n";
    os << "  connectivity: " << to_string(a.connectivity.verdict) << " ("
       << to_string(a.connectivity.reason) << "), ||D(a0) - E||_F = "
       << sci(a.connectivity.numericEvidence) << "\n";

    if (a.crossBasis)
        os << "\nAnalytic vs finite-difference generators: max |diff| " << sci(a.crossDifference)
           << "\n";

    os << "\nChecks\n";
    for (const CheckResult& ch : a.checks)
        os << "  " << (ch.passed ? "PASS" : (ch.advisory ? "NOTE" : "FAIL")) << "  " << std::left
           << std::setw(20) << ch.name << std::right << " value " << sci(ch.value) << "  threshold "
           << sci(ch.threshold) << (ch.advisory ? "  (advisory)" : "") << "\n";
    os << "overall: " << (a.passed() ? "PASS" : "FAIL") << "\n";

    if (!timingsMs.empty()) {
        os << "\nTimings\n";
        for (const auto& [stage, ms] : timingsMs)
            os << "  " << std::left << std::setw(12) << stage << std::right << std::fixed
               << std::setprecision(2) << ms << " ms\n";
    }
    return os.str();
}

CompareResult compare_reports(const Json& a, const Json& b, double tol) {
    CompareResult out;
    if (!a.is_object() || !b.is_object() || !a.contains("schemaVersion") ||
        !b.contains("schemaVersion")) {
        out.schemaMismatch = true;
        out.mismatch = "not a report (missing schemaVersion)";
        return out;
    }
    if (a["schemaVersion"] != b["schemaVersion"]) {
        out.schemaMismatch = true;
        out.mismatch = "schemaVersion differs";
        return out;
    }
    Json x = a;
    Json y = b;
    for (const char* key : {"tool", "run"}) {
        x.erase(key);
        y.erase(key);
    }
    compare_nodes(x, y, "", tol, out);
    return out;
}

}  // namespace corepalg
