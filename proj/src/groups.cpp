#include "corepalg/groups.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "corepalg/errors.hpp"
#include "corepalg/random.hpp"

namespace corepalg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPhaseGrid = 0x1.0p36;  // grid points per turn

constexpr std::array<std::string_view, 5> kCatalogNames = {"U1", "SO2", "SO3", "SU2", "SL2R"};

CMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    CMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (double v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

std::vector<CMatrix> pauli() {
    const Complex i{0.0, 1.0};
    CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1 << 0.0, 1.0, 1.0, 0.0;
    s2 << 0.0, -i, i, 0.0;
    s3 << 1.0, 0.0, 0.0, -1.0;
    return {s1, s2, s3};
}

}  // namespace

GroupPresentation make_group(std::string name, int dim, std::vector<CMatrix> generators) {
    if (dim <= 0) throw ShapeError("group '" + name + "': dimension must be positive");
    for (std::size_t p = 0; p < generators.size(); ++p) {
        const CMatrix& a = generators[p];
        if (a.rows() != dim || a.cols() != dim)
            throw ShapeError("group '" + name + "': generator " + std::to_string(p + 1) +
                             " is not " + std::to_string(dim) + "x" + std::to_string(dim));
        require_finite(a, "group generator");
    }
    return GroupPresentation{std::move(name), dim, std::move(generators)};
}

CMatrix evaluate(const GroupPresentation& group, std::span<const double> alphas) {
    if (static_cast<int>(alphas.size()) != group.parameter_count())
        throw ShapeError("evaluate: expected " + std::to_string(group.parameter_count()) +
                         " parameters, got " + std::to_string(alphas.size()));
    CMatrix d = CMatrix::Identity(group.dim, group.dim);
    for (std::size_t p = 0; p < alphas.size(); ++p) {
        if (alphas[p] == 0.0) continue;  // keeps D(0) = E exact
        d = d * mat_exp(alphas[p] * group.generators[p]);
    }
    return d;
}

std::span<const std::string_view> catalog_names() { return kCatalogNames; }

GroupPresentation catalog(std::string_view name) {
    const Complex i{0.0, 1.0};
    if (name == "U1") {
        CMatrix a(1, 1);
        a(0, 0) = i;
        return make_group("U1", 1, {a});
    }
    if (name == "SO2") return make_group("SO2", 2, {real_matrix({{0, -1}, {1, 0}})});
    if (name == "SO3") {
        return make_group("SO3", 3,
                          {real_matrix({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}),
                           real_matrix({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}),
                           real_matrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}})});
    }
    if (name == "SU2") {
        std::vector<CMatrix> gens;
        for (const CMatrix& s : pauli()) gens.push_back((0.5 * i) * s);
        return make_group("SU2", 2, std::move(gens));
    }
    if (name == "SL2R") {
        return make_group("SL2R", 2,
                          {real_matrix({{1, 0}, {0, -1}}), real_matrix({{0, 1}, {0, 0}}),
                           real_matrix({{0, 0}, {1, 0}})});
    }
    std::string known;
    for (auto n : kCatalogNames) known += (known.empty() ? "" : ", ") + std::string(n);
    throw NotFoundError("unknown group '" + std::string(name) + "' (catalog: " + known + ")");
}

ParameterPoint::ParameterPoint(std::vector<double> alphas, double alpha0)
    : alpha0_(normalize_phase(alpha0)), alphas_(std::move(alphas)) {
    for (double a : alphas_)
        if (!std::isfinite(a)) throw DomainError("ParameterPoint: non-finite parameter");
}

double ParameterPoint::normalize_phase(double alpha0) {
    if (!std::isfinite(alpha0)) throw DomainError("ParameterPoint: non-finite alpha0");
    double r = std::fmod(alpha0, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double ParameterPoint::norm() const {
    double s = 0.0;
    for (double a : alphas_) s += a * a;
    return std::sqrt(s);
}

Complex ParameterPoint::phase() const {
    double q = std::nearbyint(alpha0_ / kTwoPi * kPhaseGrid);
    if (q >= kPhaseGrid) q = 0.0;
    const double angle = kTwoPi * (q / kPhaseGrid);
    return {std::cos(angle), std::sin(angle)};
}

std::vector<ParameterPoint> sample_neighborhood(const GroupPresentation& group, double epsilon,
                                                int count, std::uint64_t seed,
                                                std::optional<double> alpha0) {
    if (!(epsilon > 0.0)) throw DomainError("sample_neighborhood: epsilon must be positive");
    if (count <= 0) throw DomainError("sample_neighborhood: count must be positive");

    const int n = group.parameter_count();
    Rng rng(seed);
    std::vector<ParameterPoint> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        std::vector<double> alphas(static_cast<std::size_t>(n));
        // Radius law r ~ eps * U^(1/n) is uniform in volume. Rounding can push a draw onto
        // the sphere itself, so such draws are rejected to keep the ball open.
        while (n > 0) {
            double len = 0.0;
            for (double& a : alphas) {
                a = rng.normal();
                len += a * a;
            }
            if (len == 0.0) continue;
            const double radius = epsilon * std::pow(rng.uniform(), 1.0 / n);
            const double scale = radius / std::sqrt(len);
            double sq = 0.0;
            for (double& a : alphas) {
                a *= scale;
                sq += a * a;
            }
            if (sq < epsilon * epsilon) break;
        }
        points.emplace_back(std::move(alphas), alpha0.value_or(0.0));
    }
    return points;
}

}  // namespace corepalg
