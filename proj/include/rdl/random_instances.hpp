#pragma once

#include <cstdint>
#include <random>

#include "rdl/market.hpp"
#include "rdl/profiles.hpp"

namespace rdl {

/// Deterministic per-index RNG: sweeps seed each index independently so
/// results do not depend on evaluation order or thread count.
inline std::mt19937_64 sweep_rng(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 of (seed, index)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return std::mt19937_64(z ^ (z >> 31));
}

/// Up to max_atoms distinct values in [0,1] with normalized random masses.
AtomicDistribution random_distribution(std::mt19937_64& rng, int max_atoms);

/// Random affine valuation on a fresh type grid of up to max_types types:
/// a >= 0 and a + b both non-decreasing, b > 0.
Valuation random_affine_valuation(std::mt19937_64& rng, int max_types);

/// Full random market: affine valuation, type distribution on the
/// valuation's grid, independent random prior.
MarketInstance random_instance(std::mt19937_64& rng, int max_atoms = 6, int max_types = 6);

/// Strictly increasing thresholds, K drawn from [1, max_k].  Interior
/// thresholds can be confined to [0, interior_cap] (used where the last
/// bin must keep a minimum width).
QuantileProfile random_quantile_profile(std::mt19937_64& rng, int max_k,
                                        double interior_cap = 1.0);

QualityProfile random_quality_profile(std::mt19937_64& rng, int max_k);

/// Random separable-valuation data: per-quality tables g1, g2 >= 0 on the
/// prior support and a non-decreasing u with u(0) = 0 on the type support.
struct SeparableInstance {
    std::vector<double> g1;
    std::vector<double> g2;
    std::vector<double> u;
    AtomicDistribution prior;
    AtomicDistribution types;
};

SeparableInstance random_separable_instance(std::mt19937_64& rng, int max_atoms = 6,
                                            int max_types = 6);

} // namespace rdl
