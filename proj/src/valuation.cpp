#include "rdl/valuation.hpp"

#include <algorithm>
#include <cmath>

namespace rdl {

namespace {

std::size_t grid_lookup(const std::vector<double>& grid, double x, const char* axis) {
    auto it = std::lower_bound(grid.begin(), grid.end(), x - kValueMergeTol);
    if (it == grid.end() || std::abs(*it - x) > kValueMergeTol)
        throw GridMismatch(std::string(axis) + " value " + std::to_string(x) +
                           " is not a grid point of the valuation");
    return static_cast<std::size_t>(it - grid.begin());
}

void require_sorted(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1])
            throw InvariantViolation(std::string(what) + " must be strictly increasing");
}

} // namespace

Valuation Valuation::additive() { return Valuation(Kind::Additive); }
Valuation Valuation::hinge_realizing() { return Valuation(Kind::HingeRealizing); }
Valuation Valuation::multiplicative() { return Valuation(Kind::Multiplicative); }

Valuation Valuation::affine(std::vector<double> types, std::vector<double> a,
                            std::vector<double> b) {
    if (types.empty() || a.size() != types.size() || b.size() != types.size())
        throw InvariantViolation("affine valuation needs matching types/a/b tables");
    require_sorted(types, "affine type grid");
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (a[i] < 0.0) throw InvariantViolation("affine intercept must be >= 0");
        if (!(b[i] > 0.0)) throw InvariantViolation("affine slope must be > 0");
        if (i > 0) {
            // Monotone in type at omega = 0 and omega = 1 suffices for all omega.
            if (a[i] < a[i - 1] - kValueMergeTol)
                throw InvariantViolation("affine valuation decreasing in type at omega = 0");
            if (a[i] + b[i] < a[i - 1] + b[i - 1] - kValueMergeTol)
                throw InvariantViolation("affine valuation decreasing in type at omega = 1");
        }
    }
    Valuation v(Kind::Affine);
    v.types_ = std::move(types);
    v.a_ = std::move(a);
    v.b_ = std::move(b);
    return v;
}

Valuation Valuation::tabular(std::vector<double> types, std::vector<double> qualities,
                             std::vector<std::vector<double>> values) {
    if (types.empty() || qualities.empty() || values.size() != types.size())
        throw InvariantViolation("tabular valuation needs one row per type");
    require_sorted(types, "tabular type grid");
    require_sorted(qualities, "tabular quality grid");
    for (const auto& row : values) {
        if (row.size() != qualities.size())
            throw InvariantViolation("tabular valuation row width mismatch");
        for (double x : row)
            if (x < 0.0) throw InvariantViolation("tabular valuation entries must be >= 0");
    }
    Valuation v(Kind::Tabular);
    v.types_ = std::move(types);
    v.qualities_ = std::move(qualities);
    v.values_ = std::move(values);
    return v;
}

std::size_t Valuation::type_index(double theta) const {
    return grid_lookup(types_, theta, "type");
}

std::size_t Valuation::quality_index(double omega) const {
    return grid_lookup(qualities_, omega, "quality");
}

Valuation::Coeffs Valuation::affine_coeffs(double theta) const {
    switch (kind_) {
        case Kind::Additive: return {theta, 1.0};
        case Kind::HingeRealizing: return {theta, 1.0 - theta};
        case Kind::Multiplicative: return {theta, theta};
        case Kind::Affine: {
            std::size_t i = type_index(theta);
            return {a_[i], b_[i]};
        }
        case Kind::Tabular:
            throw InvariantViolation("tabular valuation has no affine form");
    }
    throw InvariantViolation("unreachable valuation kind");
}

double Valuation::operator()(double theta, double omega) const {
    if (kind_ == Kind::Tabular) return values_[type_index(theta)][quality_index(omega)];
    Coeffs c = affine_coeffs(theta);
    return c.a + c.b * omega;
}

double Valuation::expected_value(double theta, const AtomicDistribution& posterior) const {
    if (affine_in_quality()) {
        Coeffs c = affine_coeffs(theta);
        return c.a + c.b * mean(posterior);
    }
    const auto& row = values_[type_index(theta)];
    double e = 0.0;
    for (const auto& atom : posterior.atoms()) e += row[quality_index(atom.value)] * atom.mass;
    return e;
}

std::string to_string(Valuation::Kind kind) {
    switch (kind) {
        case Valuation::Kind::Additive: return "additive";
        case Valuation::Kind::HingeRealizing: return "hinge";
        case Valuation::Kind::Multiplicative: return "multiplicative";
        case Valuation::Kind::Affine: return "affine";
        case Valuation::Kind::Tabular: return "tabular";
    }
    return "unknown";
}

} // namespace rdl
