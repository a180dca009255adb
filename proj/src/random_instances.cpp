#include "rdl/random_instances.hpp"

#include <algorithm>
#include <set>

namespace rdl {

namespace {

std::vector<double> distinct_sorted_values(std::mt19937_64& rng, int count) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::set<double> vals;
    while (static_cast<int>(vals.size()) < count) vals.insert(unif(rng));
    return {vals.begin(), vals.end()};
}

std::vector<double> random_masses(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::vector<double> m(count);
    for (auto& x : m) x = unif(rng);
    return m;
}

} // namespace

AtomicDistribution random_distribution(std::mt19937_64& rng, int max_atoms) {
    std::uniform_int_distribution<int> n_dist(1, max_atoms);
    const int n = n_dist(rng);
    std::vector<double> values = distinct_sorted_values(rng, n);
    std::vector<double> masses = random_masses(rng, values.size());
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < values.size(); ++i) atoms.push_back({values[i], masses[i]});
    return AtomicDistribution(std::move(atoms));
}

Valuation random_affine_valuation(std::mt19937_64& rng, int max_types) {
    std::uniform_int_distribution<int> n_dist(1, max_types);
    std::uniform_real_distribution<double> step(0.0, 0.5);
    std::uniform_real_distribution<double> slope0(0.05, 1.0);
    const int n = n_dist(rng);
    std::vector<double> types = distinct_sorted_values(rng, n);
    std::vector<double> a(types.size()), b(types.size());
    double intercept = step(rng);
    double total = intercept + slope0(rng); // a + b, kept non-decreasing
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i > 0) {
            intercept += step(rng);
            total = std::max(total, intercept + 0.02) + step(rng);
        }
        a[i] = intercept;
        b[i] = total - intercept;
    }
    return Valuation::affine(std::move(types), std::move(a), std::move(b));
}

MarketInstance random_instance(std::mt19937_64& rng, int max_atoms, int max_types) {
    Valuation v = random_affine_valuation(rng, max_types);
    std::vector<Atom> type_atoms;
    std::vector<double> masses = random_masses(rng, v.grid_types().size());
    for (std::size_t i = 0; i < v.grid_types().size(); ++i)
        type_atoms.push_back({v.grid_types()[i], masses[i]});
    AtomicDistribution types(std::move(type_atoms));
    AtomicDistribution prior = random_distribution(rng, max_atoms);
    return {std::move(v), std::move(types), std::move(prior)};
}

QuantileProfile random_quantile_profile(std::mt19937_64& rng, int max_k, double interior_cap) {
    std::uniform_int_distribution<int> k_dist(1, max_k);
    const int k = k_dist(rng);
    std::uniform_real_distribution<double> unif(0.01, interior_cap);
    std::set<double> interior;
    while (static_cast<int>(interior.size()) < k - 1) interior.insert(unif(rng));
    std::vector<double> t = {0.0};
    t.insert(t.end(), interior.begin(), interior.end());
    t.push_back(1.0);
    return QuantileProfile(std::move(t));
}

QualityProfile random_quality_profile(std::mt19937_64& rng, int max_k) {
    std::uniform_int_distribution<int> k_dist(1, max_k);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int k = k_dist(rng);
    std::set<double> interior;
    while (static_cast<int>(interior.size()) < k - 1) interior.insert(unif(rng));
    std::vector<double> t = {0.0};
    t.insert(t.end(), interior.begin(), interior.end());
    t.push_back(1.0);
    std::vector<double> splits(t.size());
    for (auto& x : splits) x = unif(rng);
    splits.front() = 0.0;
    splits.back() = 1.0;
    return QualityProfile(std::move(t), std::move(splits));
}

SeparableInstance random_separable_instance(std::mt19937_64& rng, int max_atoms,
                                            int max_types) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_real_distribution<double> step(0.0, 0.4);
    AtomicDistribution prior = random_distribution(rng, max_atoms);
    AtomicDistribution types = random_distribution(rng, max_types);

    SeparableInstance inst{{}, {}, {}, std::move(prior), std::move(types)};
    inst.g1.resize(inst.prior.size());
    inst.g2.resize(inst.prior.size());
    for (std::size_t j = 0; j < inst.prior.size(); ++j) {
        inst.g1[j] = unif(rng);
        inst.g2[j] = unif(rng);
    }
    inst.u.resize(inst.types.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < inst.types.size(); ++i) {
        inst.u[i] = acc;
        acc += step(rng);
    }
    return inst;
}

} // namespace rdl
