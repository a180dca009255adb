#pragma once

#include <string>
#include <vector>

#include "rdl/distribution.hpp"
#include "rdl/errors.hpp"

namespace rdl {

/// Consumer valuation v(theta, omega).
///
/// Affine-in-quality variants carry per-type intercept/slope (either as
/// closed-form named families or explicit tables); the tabular variant is
/// an arbitrary non-negative grid and supports no interpolation: queries
/// off the grid raise GridMismatch.
class Valuation {
public:
    enum class Kind { Additive, HingeRealizing, Multiplicative, Affine, Tabular };

    /// v = theta + omega.
    static Valuation additive();
    /// v = theta*(1 - omega) + omega; realizes the hinge revenue curve
    /// max{c, x} against a Bernoulli type distribution with mean c.
    static Valuation hinge_realizing();
    /// v = theta*omega + theta.
    static Valuation multiplicative();
    /// Explicit affine family on a type grid; requires a >= 0, b > 0,
    /// with a and a+b non-decreasing in theta.
    static Valuation affine(std::vector<double> types, std::vector<double> a,
                            std::vector<double> b);
    /// values[i][j] = v(types[i], qualities[j]); entries must be >= 0.
    static Valuation tabular(std::vector<double> types, std::vector<double> qualities,
                             std::vector<std::vector<double>> values);

    Kind kind() const noexcept { return kind_; }
    bool affine_in_quality() const noexcept { return kind_ != Kind::Tabular; }

    double operator()(double theta, double omega) const;

    /// Intercept/slope of x -> v(theta, x); only for affine-in-quality kinds.
    struct Coeffs {
        double a = 0.0;
        double b = 0.0;
    };
    Coeffs affine_coeffs(double theta) const;

    /// E_{omega ~ posterior}[v(theta, omega)].
    double expected_value(double theta, const AtomicDistribution& posterior) const;

    // Grid accessors (Affine and Tabular kinds).
    const std::vector<double>& grid_types() const noexcept { return types_; }
    const std::vector<double>& grid_qualities() const noexcept { return qualities_; }
    const std::vector<double>& affine_a() const noexcept { return a_; }
    const std::vector<double>& affine_b() const noexcept { return b_; }
    const std::vector<std::vector<double>>& table() const noexcept { return values_; }

private:
    explicit Valuation(Kind kind) : kind_(kind) {}

    std::size_t type_index(double theta) const;
    std::size_t quality_index(double omega) const;

    Kind kind_;
    std::vector<double> types_;                  // Affine, Tabular
    std::vector<double> qualities_;              // Tabular
    std::vector<double> a_, b_;                  // Affine
    std::vector<std::vector<double>> values_;    // Tabular
};

std::string to_string(Valuation::Kind kind);

} // namespace rdl
