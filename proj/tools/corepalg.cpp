// corepalg command-line front end.
//
//   corepalg run SPEC.json [--type a|b|auto] [--method analytic|fd|both] [--tol-closure X]
//                          [--tol-jacobi X] [--seed N] [--trials N] [--fd-step H]
//                          [--out DIR] [--compare GOLDEN.json] [--compare-tol X]
//   corepalg compare A.json B.json [--tol X]
//
// Exit codes: 0 all checks pass, 1 a check failed (or reports differ), 2 input error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "corepalg/errors.hpp"
#include "corepalg/pipeline.hpp"

namespace fs = std::filesystem;
using namespace corepalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

Json read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(path, 0, "cannot open report");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SpecError(path, 0, std::string("malformed report: ") + e.what());
    }
}

int print_comparison(const CompareResult& diff, double tol) {
    if (diff.schemaMismatch) {
        std::cerr << "schema mismatch: " << diff.mismatch << "\n";
        return kExitInputError;
    }
    std::cout << "max numeric difference " << diff.maxDifference << " (tol " << tol << ")\n";
    if (diff.witnesses.empty()) {
        std::cout << "reports agree\n";
        return kExitOk;
    }
    std::cout << diff.witnesses.size() << " field(s) differ:\n";
    for (const DiffWitness& w : diff.witnesses)
        std::cout << "  " << w.path << ": " << w.a << " vs " << w.b << "\n";
    return kExitCheckFailed;
}

std::string default_out_dir() {
    if (const char* env = std::getenv("COREPALG_OUT_DIR"); env && *env) return env;
    return "corepalg-out";
}

int run_command(const std::string& specPath, const RunOptions& options, const std::string& outDir,
                const std::string& comparePath, double compareTol) {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    const ExtensionSpec spec = load_extension_spec(specPath);
    const auto t1 = Clock::now();
    const Analysis analysis = analyze(spec, options);
    const auto t2 = Clock::now();

    const Json report = report_json(spec, options, analysis);
    const auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    const std::string text =
        report_text(spec, options, analysis, {{"parse", ms(t0, t1)}, {"analysis", ms(t1, t2)}});

    fs::create_directories(outDir);
    {
        std::ofstream json(fs::path(outDir) / "report.json");
        json << report.dump(2) << "\n";
    }
    {
        std::ofstream txt(fs::path(outDir) / "report.txt");
        txt << text;
    }
    std::cout << text;

    int status = analysis.passed() ? kExitOk : kExitCheckFailed;
    if (!comparePath.empty()) {
        std::cout << "\ncomparing with " << comparePath << "\n";
        const int cmp = print_comparison(compare_reports(report, read_report(comparePath), compareTol),
                                         compareTol);
        status = std::max(status, cmp);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix algebras of continuous groups with an antilinear element"};
    app.require_subcommand(1);

    RunOptions options;
    std::string specPath;
    std::string typeText;
    std::string methodText = "both";
    std::string outDir = default_out_dir();
    std::string comparePath;
    double compareTol = 1e-9;

    CLI::App* run = app.add_subcommand("run", "Analyze an extension spec and write report.json/report.txt");
    run->add_option("spec", specPath, "Extension-spec JSON file")->required();
    run->add_option("--type", typeText, "Override the coirrep type")->check(CLI::IsMember({"a", "b", "auto"}));
    run->add_option("--method", methodText, "Tangent extraction method")
        ->check(CLI::IsMember({"analytic", "fd", "both"}));
    run->add_option("--tol-closure", options.tolClosure, "Residual tolerance for the grading");
    run->add_option("--tol-jacobi", options.tolJacobi, "Tolerance on the Jacobi defects");
    run->add_option("--seed", options.seed, "Random seed");
    run->add_option("--trials", options.trials, "Random trials for the law and metric checks")
        ->check(CLI::PositiveNumber);
    run->add_option("--fd-step", options.fdStep, "Finite-difference step")->check(CLI::Range(0.0, 0.5));
    run->add_option("--out", outDir, "Output directory (default $COREPALG_OUT_DIR or ./corepalg-out)");
    run->add_option("--compare", comparePath, "Compare the new report with this one");
    run->add_option("--compare-tol", compareTol, "Tolerance for --compare");

    std::string reportA, reportB;
    double tol = 1e-9;
    CLI::App* compare = app.add_subcommand("compare", "Fieldwise diff of two report.json files");
    compare->add_option("first", reportA, "First report")->required();
    compare->add_option("second", reportB, "Second report")->required();
    compare->add_option("--tol", tol, "Numeric tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*run) {
            if (!typeText.empty()) options.typeOverride = parse_type_request(typeText);
            options.method = parse_method(methodText);
            return run_command(specPath, options, outDir, comparePath, compareTol);
        }
        return print_comparison(compare_reports(read_report(reportA), read_report(reportB), tol), tol);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
