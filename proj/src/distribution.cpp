#include "rdl/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rdl {

namespace {

constexpr double kRangeSlack = 1e-9; // values this far outside [0,1] are clamped

} // namespace

AtomicDistribution::AtomicDistribution(std::vector<Atom> atoms) {
    if (atoms.empty()) throw EmptySupport("distribution requires at least one atom");

    for (auto& a : atoms) {
        if (!(a.mass >= 0.0))
            throw InvariantViolation("atom mass must be non-negative, got " + std::to_string(a.mass));
        if (a.value < -kRangeSlack || a.value > 1.0 + kRangeSlack)
            throw OutOfRange("atom value " + std::to_string(a.value) + " outside [0,1]");
        a.value = std::clamp(a.value, 0.0, 1.0);
    }

    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return x.value < y.value; });

    // Merge near-equal values, drop zero mass.
    for (const auto& a : atoms) {
        if (a.mass == 0.0) continue;
        if (!atoms_.empty() && a.value - atoms_.back().value <= kValueMergeTol)
            atoms_.back().mass += a.mass;
        else
            atoms_.push_back(a);
    }
    if (atoms_.empty()) throw EmptySupport("all atoms have zero mass");

    double total = 0.0;
    for (const auto& a : atoms_) total += a.mass;
    if (!(total > 0.0)) throw EmptySupport("total mass is zero");
    // Only rescale when the input genuinely deviates; this keeps
    // construction idempotent, so parse(emit(d)) reproduces d exactly.
    if (std::abs(total - 1.0) > kMassTol)
        for (auto& a : atoms_) a.mass /= total;
}

AtomicDistribution AtomicDistribution::point_mass(double value) {
    return AtomicDistribution({{value, 1.0}});
}

AtomicDistribution AtomicDistribution::bernoulli(double mass_at_one) {
    if (mass_at_one <= 0.0) return point_mass(0.0);
    if (mass_at_one >= 1.0) return point_mass(1.0);
    return AtomicDistribution({{0.0, 1.0 - mass_at_one}, {1.0, mass_at_one}});
}

AtomicDistribution make_distribution(std::vector<Atom> pairs) {
    return AtomicDistribution(std::move(pairs));
}

double mean(const AtomicDistribution& d) {
    double m = 0.0;
    for (const auto& a : d.atoms()) m += a.value * a.mass;
    return m;
}

QuantileFootprint quantile_footprint(const AtomicDistribution& d) {
    QuantileFootprint fp;
    fp.entries.reserve(d.size());
    double cum = 0.0;
    for (const auto& a : d.atoms()) {
        double lo = cum;
        cum += a.mass;
        fp.entries.push_back({a.value, lo, cum});
    }
    // Masses sum to one up to rounding; pin the last edge so the
    // footprints tile [0,1] exactly.
    fp.entries.back().q_hi = 1.0;
    return fp;
}

double value_at_quantile(const AtomicDistribution& d, double q) {
    if (q < 0.0 || q > 1.0) throw OutOfRange("quantile " + std::to_string(q) + " outside [0,1]");
    double cum = 0.0;
    for (const auto& a : d.atoms()) {
        cum += a.mass;
        if (cum >= q) return a.value;
    }
    return d.atoms().back().value;
}

AtomicDistribution discretize(const std::function<double(double)>& quantile_fn, int n) {
    if (n < 1) throw InvariantViolation("discretize requires n >= 1");
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(n));
    double prev = -1.0;
    const double w = 1.0 / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        double v = quantile_fn((static_cast<double>(i) + 0.5) * w);
        if (v < prev - kValueMergeTol)
            throw NonMonotone("quantile function decreases at sample " + std::to_string(i));
        prev = v;
        atoms.push_back({v, w});
    }
    return AtomicDistribution(std::move(atoms));
}

AtomicDistribution mixture(const std::vector<std::pair<double, AtomicDistribution>>& parts) {
    if (parts.empty()) throw EmptySupport("mixture of nothing");
    double wsum = 0.0;
    for (const auto& [w, d] : parts) {
        if (w < 0.0) throw InvariantViolation("mixture weight must be non-negative");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > kMassTol)
        throw InvariantViolation("mixture weights sum to " + std::to_string(wsum) + ", expected 1");
    std::vector<Atom> atoms;
    for (const auto& [w, d] : parts) {
        if (w == 0.0) continue;
        for (const auto& a : d.atoms()) atoms.push_back({a.value, w * a.mass});
    }
    if (atoms.empty()) throw EmptySupport("mixture has no mass");
    return AtomicDistribution(std::move(atoms));
}

double expect_hinge(const AtomicDistribution& d, double c) {
    double e = 0.0;
    for (const auto& a : d.atoms()) e += std::max(c, a.value) * a.mass;
    return e;
}

} // namespace rdl
