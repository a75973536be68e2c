// Acceptance suite: one PASS/FAIL line per criterion; exit status is the number of failures.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corepalg/pipeline.hpp"
#include "../test_support.hpp"

namespace fs = std::filesystem;
using namespace corepalg;
using namespace corepalg::testing;

namespace {

struct Case {
    std::string name;
    ExtensionSpec spec;
    Corep corep;
};

std::vector<Case> load_catalog() {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(fs::path(COREPALG_DATA_DIR) / "extensions"))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<Case> cases;
    for (const fs::path& f : files) {
        ExtensionSpec spec = load_extension_spec(f.string());
        Corep c = resolve_corep(spec, RunOptions{});
        cases.push_back({f.stem().string(), std::move(spec), std::move(c)});
    }
    return cases;
}

int failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << what << "\n";
    if (!ok) ++failures;
}

std::string sci(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << v;
    return os.str();
}

const Case& find(const std::vector<Case>& cases, const std::string& name) {
    for (const Case& c : cases)
        if (c.name == name) return c;
    throw std::runtime_error("missing extension " + name);
}

void lie_baseline(const std::vector<Case>& cases) {
    const Corep& so3 = find(cases, "so3_k").corep;
    double errA = 0, errF = 0, lie = 0;
    for (DiffMethod m : {DiffMethod::Analytic, DiffMethod::FiniteDifference}) {
        const StructureConstants s = compute_structure_constants(extract_basis(so3, m));
        double err = 0;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                for (int r = 0; r < 3; ++r) err = std::max(err, std::abs(s.c(p, q, r) - levi_civita(p, q, r)));
        (m == DiffMethod::Analytic ? errA : errF) = err;
        lie = std::max(lie, jacobi_check(s).lieDefect);
    }
    report(1, errA <= 1e-8 && errF <= 1e-6 && lie <= 1e-9,
           "SO3 c = epsilon (analytic " + sci(errA) + ", fd " + sci(errF) + "), classic Jacobi " + sci(lie));
}

void phase_generator(const std::vector<Case>& cases) {
    double worst = 0;
    for (const Case& c : cases)
        for (DiffMethod m : {DiffMethod::Analytic, DiffMethod::FiniteDifference})
            worst = std::max(worst, (extract_coset_generators(c.corep, m).phase - kI * c.corep.Da0).norm());
    report(2, worst <= 1e-9, "||X'_0 - i Da0||_F <= 1e-9 for all extensions (max " + sci(worst) + ")");
}

void type_b_rank(const std::vector<Case>& cases) {
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const Case& c : cases) {
        if (c.corep.type != CorepType::B) continue;
        ++count;
        const int n = c.corep.parameter_count();
        for (DiffMethod m : {DiffMethod::Analytic, DiffMethod::FiniteDifference}) {
            const int rank = span_report(extract_basis(c.corep, m), 1e-9).unionRealRank;
            ok = ok && rank == 2 * n + 1;
            if (m == DiffMethod::Analytic) detail += " " + c.name + "=" + std::to_string(rank);
        }
    }
    report(3, ok && count > 0, "type-b union real rank 2n+1:" + detail);
}

void coset_dependent(const std::vector<Case>& cases) {
    const SpanReport r = span_report(extract_basis(find(cases, "so2_k").corep, DiffMethod::Analytic));
    report(4, r.cosetDependsOnSubgroup && r.unionRealRank == 2 && r.pattern == SpanPattern::CosetDependent,
           "SO2+K N=E: X'_1 depends on X_1, union rank " + std::to_string(r.unionRealRank));
}

void intertwiners() {
    const GroupPresentation su2 = catalog("SU2"), so2 = catalog("SO2");
    const IntertwinerSolution a = solve_intertwiner(su2, AntilinearKind::K, default_intertwiner_samples(su2), 1);
    const M is2 = kI * sigma2();
    const bool proportional =
        std::abs(std::abs(complex_inner(a.N, is2)) - a.N.norm() * is2.norm()) <= 1e-9;
    const bool okSu2 = a.sign == -1 && a.residual <= 1e-9 && proportional &&
                       max_abs_diff(a.N * a.N.conjugate(), -M::Identity(2, 2)) <= 1e-9;
    const IntertwinerSolution b = solve_intertwiner(so2, AntilinearKind::K, default_intertwiner_samples(so2), 1);
    const bool okSo2 = b.sign == 1 && max_abs_diff(b.N, M::Identity(2, 2)) <= 1e-9;
    report(5, okSu2 && okSo2,
           "SU2+K: N ~ i sigma_2, sign -1, residual " + sci(a.residual) + "; SO2+K: N = E, sign +1");
}

void corep_law(const std::vector<Case>& cases) {
    double worst = 0, weakestControl = 1e300;
    for (const Case& c : cases) {
        worst = std::max(worst, verify_corep_law(c.corep, 100, 1));
        Corep bad = c.corep;
        bad.Da0(0, 0) += 0.1;
        weakestControl = std::min(weakestControl, verify_corep_law(bad, 100, 1));
    }
    report(6, worst <= 1e-9 && weakestControl >= 0.05,
           "law defect max " + sci(worst) + " over 100 samples; corrupted Da0 min " + sci(weakestControl));
}

void grading_jacobi(const std::vector<Case>& cases) {
    double worst = 0, weakestControl = 1e300;
    std::string closed;
    for (const Case& c : cases) {
        const TangentBasis b = extract_basis(c.corep, DiffMethod::Analytic);
        const StructureConstants s = compute_structure_constants(b);
        if (!grading_report(b, s).closed) continue;
        closed += " " + c.name;
        const JacobiReport j = jacobi_check(s);
        worst = std::max({worst, j.defect1, j.defect2, j.defect3});
        // With n = 1 every term containing e is cancelled by antisymmetry or by c = d = 0,
        // so a single-entry perturbation is invisible there.
        if (s.n < 2) continue;
        StructureConstants bad = s;
        bad.e(0, 1, 1) += 0.1;
        weakestControl = std::min(weakestControl, jacobi_check(bad).max_defect());
    }
    report(7, !closed.empty() && worst <= 1e-6 && weakestControl >= 1e-2,
           "closed extensions {" + closed + " }: relation defects max " + sci(worst) +
               "; perturbed e (n >= 2) min defect " + sci(weakestControl));
}

void metric(const std::vector<Case>& cases) {
    double worst = 0, alpha0 = 0;
    for (const Case& c : cases) {
        const MetricAxiomReport r = verify_metric_axioms(c.corep, 1000, 1);
        worst = std::max({worst, r.symmetry, r.selfDistance, r.triangle});
        alpha0 = std::max(alpha0, r.alpha0Only);
    }
    report(8, worst <= 1e-12 && alpha0 == 0.0,
           "1000 triples per extension: max violation " + sci(worst) + ", alpha0-only d2 " + sci(alpha0));
}

void connectedness(const std::vector<Case>& cases) {
    const ConnectivityVerdict a = classify_connectedness(find(cases, "so2_k").corep);
    const ConnectivityVerdict b = classify_connectedness(find(cases, "so2_theta_reflection").corep);
    const ConnectivityVerdict c = classify_connectedness(find(cases, "u1_k_b").corep);
    bool allB = true;
    for (const Case& x : cases)
        if (x.corep.type == CorepType::B) allB = allB && classify_connectedness(x.corep).verdict == Connectivity::NotConnected;
    report(9,
           a.verdict == Connectivity::Connected && b.verdict == Connectivity::NotConnected &&
               b.reason == ConnectivityReason::TypeANNotE && c.verdict == Connectivity::NotConnected &&
               c.numericEvidence > 0 && allB,
           "type a/K/N=E connected; type a/N!=E and every type b notConnected");
}

void method_independence(const std::vector<Case>& cases) {
    double worst = 0;
    bool ok = true;
    for (const Case& c : cases) {
        RunOptions analytic, fd;
        analytic.method = MethodChoice::Analytic;
        fd.method = MethodChoice::FiniteDifference;
        const Json ra = report_json(c.spec, analytic, analyze(c.spec, analytic));
        const Json rf = report_json(c.spec, fd, analyze(c.spec, fd));
        const CompareResult diff = compare_reports(ra, rf, 1e-7);
        ok = ok && diff.equal();
        worst = std::max(worst, diff.maxDifference);
        if (!diff.equal())
            std::cout << "      " << c.name << ": "
                      << (diff.schemaMismatch ? diff.mismatch : diff.witnesses.front().path) << "\n";
    }
    report(10, ok, "analytic vs fd reports agree within 1e-7 (max difference " + sci(worst) + ")");
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void determinism(const std::vector<Case>& cases) {
    const fs::path root = fs::temp_directory_path() / "corepalg-acceptance";
    bool ok = true;
    for (const Case& c : cases) {
        std::string bytes[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path out = root / (c.name + "-" + std::to_string(run));
            const std::string cmd = std::string("\"") + COREPALG_CLI + "\" run \"" + c.spec.source +
                                    "\" --seed 7 --out \"" + out.string() + "\" > /dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            bytes[run] = slurp(out / "report.json");
            ok = ok && status != -1 && !bytes[run].empty();
        }
        ok = ok && bytes[0] == bytes[1];
    }
    report(11, ok, "two CLI runs with the same spec and seed give byte-identical report.json");
}

}  // namespace

int main() {
    try {
        const std::vector<Case> cases = load_catalog();
        lie_baseline(cases);
        phase_generator(cases);
        type_b_rank(cases);
        coset_dependent(cases);
        intertwiners();
        corep_law(cases);
        grading_jacobi(cases);
        metric(cases);
        connectedness(cases);
        method_independence(cases);
        determinism(cases);
    } catch (const std::exception& e) {
        std::cout << "FAIL  acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
