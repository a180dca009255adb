#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdl/errors.hpp"

namespace rdl {

/// Weakly increasing quantile thresholds 0 = Q_0 <= ... <= Q_K = 1.
class QuantileProfile {
public:
    /// Validates endpoints (within 1e-12, then pinned to exactly 0 and 1)
    /// and monotonicity; throws InvariantViolation otherwise.
    explicit QuantileProfile(std::vector<double> thresholds);

    int k() const noexcept { return static_cast<int>(thresholds_.size()) - 1; }
    const std::vector<double>& thresholds() const noexcept { return thresholds_; }

    /// Q_r for r in [0, K].
    double q(int r) const { return thresholds_.at(static_cast<std::size_t>(r)); }
    /// Q_r - Q_{r-1} for r in [1, K].
    double width(int r) const { return q(r) - q(r - 1); }

private:
    std::vector<double> thresholds_;
};

/// Weakly increasing quality thresholds 0 = w_0 <= ... <= w_K = 1 with
/// split fractions xi_0 = 0, xi_K = 1 governing how atoms sitting exactly
/// on a threshold are divided between the adjacent bins.
class QualityProfile {
public:
    QualityProfile(std::vector<double> thresholds, std::vector<double> splits);

    int k() const noexcept { return static_cast<int>(thresholds_.size()) - 1; }
    const std::vector<double>& thresholds() const noexcept { return thresholds_; }
    const std::vector<double>& splits() const noexcept { return splits_; }

    double w(int r) const { return thresholds_.at(static_cast<std::size_t>(r)); }
    double xi(int r) const { return splits_.at(static_cast<std::size_t>(r)); }

private:
    std::vector<double> thresholds_;
    std::vector<double> splits_;
};

/// Q_r = r/K for r = 0..K.
QuantileProfile uniform_profile(int k);

/// Named threshold presets: "uniform:K", "upwork", "airbnb".
/// Returns nullopt when the name is not a preset.
std::optional<QuantileProfile> preset_profile(const std::string& name);

} // namespace rdl
