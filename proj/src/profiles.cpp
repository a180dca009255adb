#include "rdl/profiles.hpp"

#include <cmath>

namespace rdl {

namespace {

constexpr double kEndpointTol = 1e-12;

void validate_thresholds(std::vector<double>& t, const char* what) {
    if (t.size() < 2)
        throw InvariantViolation(std::string(what) + " needs at least two thresholds");
    if (std::abs(t.front()) > kEndpointTol)
        throw InvariantViolation(std::string(what) + " must start at 0, got " + std::to_string(t.front()));
    if (std::abs(t.back() - 1.0) > kEndpointTol)
        throw InvariantViolation(std::string(what) + " must end at 1, got " + std::to_string(t.back()));
    t.front() = 0.0;
    t.back() = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] < t[i - 1])
            throw InvariantViolation(std::string(what) + " not weakly increasing at index " + std::to_string(i));
        if (t[i] < 0.0 || t[i] > 1.0)
            throw InvariantViolation(std::string(what) + " value outside [0,1]");
    }
}

} // namespace

QuantileProfile::QuantileProfile(std::vector<double> thresholds)
    : thresholds_(std::move(thresholds)) {
    validate_thresholds(thresholds_, "quantile profile");
}

QualityProfile::QualityProfile(std::vector<double> thresholds, std::vector<double> splits)
    : thresholds_(std::move(thresholds)), splits_(std::move(splits)) {
    validate_thresholds(thresholds_, "quality profile");
    if (splits_.size() != thresholds_.size())
        throw InvariantViolation("quality profile needs one split per threshold");
    if (std::abs(splits_.front()) > kEndpointTol || std::abs(splits_.back() - 1.0) > kEndpointTol)
        throw InvariantViolation("splits must satisfy xi_0 = 0 and xi_K = 1");
    splits_.front() = 0.0;
    splits_.back() = 1.0;
    for (double x : splits_)
        if (x < 0.0 || x > 1.0) throw InvariantViolation("split fraction outside [0,1]");
}

QuantileProfile uniform_profile(int k) {
    if (k < 1) throw InvariantViolation("uniform profile requires K >= 1");
    std::vector<double> t(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) t[static_cast<std::size_t>(r)] = static_cast<double>(r) / k;
    return QuantileProfile(std::move(t));
}

std::optional<QuantileProfile> preset_profile(const std::string& name) {
    if (name == "upwork") return QuantileProfile({0.0, 0.9, 0.97, 0.99, 1.0});
    if (name == "airbnb") return QuantileProfile({0.0, 0.1, 0.9, 0.95, 0.99, 1.0});
    if (name.rfind("uniform:", 0) == 0) {
        const std::string arg = name.substr(8);
        try {
            std::size_t pos = 0;
            int k = std::stoi(arg, &pos);
            if (pos != arg.size() || k < 1)
                throw ParseError("invalid uniform preset '" + name + "'");
            return uniform_profile(k);
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid uniform preset '" + name + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("invalid uniform preset '" + name + "'");
        }
    }
    return std::nullopt;
}

} // namespace rdl
