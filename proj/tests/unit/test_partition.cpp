#include <doctest.h>

#include "rdl/partition.hpp"
#include "rdl/random_instances.hpp"
#include "test_support.hpp"

using namespace rdl;

namespace {

const AtomicDistribution kUniform3 =
    make_distribution({{0.0, 1.0 / 3}, {0.5, 1.0 / 3}, {1.0, 1.0 / 3}});

} // namespace

TEST_CASE("quantile decomposition splits atoms by footprint overlap") {
    const QuantileProfile profile({0.0, 0.25, 0.5, 0.75, 1.0});
    const SignalDecomposition dec = quantile_decomposition(kUniform3, profile);
    REQUIRE(dec.signals.size() == 4);
    const double expected_means[] = {0.0, 1.0 / 3, 2.0 / 3, 1.0};
    for (int r = 0; r < 4; ++r) {
        CHECK_CLOSE(dec.signals[r].weight, 0.25, 1e-12);
        CHECK_CLOSE(mean(dec.signals[r].posterior), expected_means[r], 1e-12);
    }
    // Bin 2 pools prior mass 1/12 at 0 and 1/6 at 0.5.
    const auto& bin2 = dec.signals[1].posterior;
    REQUIRE(bin2.size() == 2);
    CHECK_CLOSE(bin2.atoms()[0].mass * dec.signals[1].weight, 1.0 / 12, 1e-12);
    CHECK_CLOSE(bin2.atoms()[1].mass * dec.signals[1].weight, 1.0 / 6, 1e-12);
}

TEST_CASE("trivial quantile profiles") {
    const QuantileProfile no_split({0.0, 1.0});
    const SignalDecomposition dec = quantile_decomposition(kUniform3, no_split);
    REQUIRE(dec.signals.size() == 1);
    CHECK(dec.signals[0].weight == 1.0);
    CHECK(dec.signals[0].posterior.size() == 3);

    const AtomicDistribution point = AtomicDistribution::point_mass(0.4);
    const SignalDecomposition pd =
        quantile_decomposition(point, QuantileProfile({0.0, 0.3, 0.6, 1.0}));
    for (const auto& s : pd.signals) {
        REQUIRE(s.posterior.size() == 1);
        CHECK(s.posterior.atoms()[0].value == 0.4);
    }
}

TEST_CASE("zero-width bins are dropped") {
    const QuantileProfile profile({0.0, 0.5, 0.5, 1.0});
    const SignalDecomposition dec = quantile_decomposition(kUniform3, profile);
    CHECK(dec.signals.size() == 2);
    double total = 0.0;
    for (const auto& s : dec.signals) total += s.weight;
    CHECK_CLOSE(total, 1.0, 1e-12);
}

TEST_CASE("posterior mean distribution") {
    const SignalDecomposition full = full_info_decomposition(kUniform3);
    const AtomicDistribution back = posterior_mean_distribution(full);
    REQUIRE(back.size() == 3);
    CHECK(back.atoms()[1].value == 0.5);

    const AtomicDistribution bern = AtomicDistribution::bernoulli(0.70711);
    const AtomicDistribution ni = posterior_mean_distribution(no_info_decomposition(bern));
    REQUIRE(ni.size() == 1);
    CHECK_CLOSE(ni.atoms()[0].value, 0.70711, 1e-12);

    const QuantileProfile profile({0.0, 0.25, 0.5, 0.75, 1.0});
    const AtomicDistribution four =
        posterior_mean_distribution(quantile_decomposition(kUniform3, profile));
    REQUIRE(four.size() == 4);
    CHECK_CLOSE(four.atoms()[1].value, 1.0 / 3, 1e-12);
    CHECK_CLOSE(four.atoms()[2].value, 2.0 / 3, 1e-12);
    CHECK(four.atoms()[3].mass == 0.25);
}

TEST_CASE("full and no information decompositions") {
    const AtomicDistribution two = make_distribution({{0.0, 0.5}, {1.0, 0.5}});
    const SignalDecomposition full = full_info_decomposition(two);
    REQUIRE(full.signals.size() == 2);
    CHECK(full.signals[0].weight == 0.5);
    CHECK(full.signals[0].posterior.atoms()[0].value == 0.0);
    CHECK(full.signals[1].posterior.atoms()[0].value == 1.0);

    const SignalDecomposition ni = no_info_decomposition(two);
    REQUIRE(ni.signals.size() == 1);
    CHECK(ni.signals[0].weight == 1.0);

    // Degenerate prior: the two coincide.
    const AtomicDistribution point = AtomicDistribution::point_mass(0.3);
    CHECK(full_info_decomposition(point).signals.size() == 1);
    CHECK(no_info_decomposition(point).signals.size() == 1);
}

TEST_CASE("quality decomposition routes mass by threshold splits") {
    // Atoms sit exactly on thresholds; xi = 1 pushes each into the bin on
    // its left, the middle bin (0.5, 0.75) stays empty and is dropped.
    const QualityProfile profile({0.0, 0.25, 0.5, 0.75, 1.0}, {0.0, 1.0, 1.0, 1.0, 1.0});
    const SignalDecomposition dec = quality_decomposition(kUniform3, profile);
    REQUIRE(dec.signals.size() == 3);
    CHECK_CLOSE(dec.signals[0].weight, 1.0 / 3, 1e-12);
    CHECK(dec.signals[0].posterior.atoms()[0].value == 0.0);
    CHECK(dec.signals[1].posterior.atoms()[0].value == 0.5);
    CHECK(dec.signals[2].posterior.atoms()[0].value == 1.0);
}

TEST_CASE("quality decomposition with interior point mass") {
    const SignalDecomposition dec = quality_decomposition(
        AtomicDistribution::point_mass(0.4), QualityProfile({0.0, 0.3, 0.6, 1.0},
                                                            {0.0, 0.5, 0.5, 1.0}));
    REQUIRE(dec.signals.size() == 1);
    CHECK(dec.signals[0].weight == 1.0);
    CHECK(dec.signals[0].posterior.atoms()[0].value == 0.4);
}

TEST_CASE("quality decomposition routes threshold atoms left when xi = 1") {
    const QualityProfile profile({0.0, 0.5, 1.0}, {0.0, 1.0, 1.0});
    const SignalDecomposition dec = quality_decomposition(kUniform3, profile);
    REQUIRE(dec.signals.size() == 2);
    // Bin 1 holds the atoms at 0 and 0.5, bin 2 the atom at 1.
    CHECK_CLOSE(dec.signals[0].weight, 2.0 / 3, 1e-12);
    CHECK(dec.signals[0].posterior.size() == 2);
    CHECK_CLOSE(dec.signals[1].weight, 1.0 / 3, 1e-12);
}

TEST_CASE("quality decomposition splits a threshold atom fractionally") {
    const QualityProfile profile({0.0, 0.5, 1.0}, {0.0, 0.25, 1.0});
    const SignalDecomposition dec = quality_decomposition(kUniform3, profile);
    REQUIRE(dec.signals.size() == 2);
    // A quarter of the 0.5 atom joins bin 1, the rest bin 2.
    CHECK_CLOSE(dec.signals[0].weight, 1.0 / 3 + 0.25 / 3, 1e-12);
    CHECK_CLOSE(dec.signals[1].weight, 1.0 / 3 + 0.75 / 3, 1e-12);
}

TEST_CASE("decompositions are Bayes plausible on random inputs") {
    for (int i = 0; i < 40; ++i) {
        auto rng = sweep_rng(11, static_cast<std::uint64_t>(i));
        const AtomicDistribution prior = random_distribution(rng, 7);
        const QuantileProfile qp = random_quantile_profile(rng, 5);
        const QualityProfile wp = random_quality_profile(rng, 5);
        for (const SignalDecomposition& dec :
             {quantile_decomposition(prior, qp), quality_decomposition(prior, wp),
              full_info_decomposition(prior), no_info_decomposition(prior)}) {
            std::vector<std::pair<double, AtomicDistribution>> parts;
            for (const auto& s : dec.signals) parts.emplace_back(s.weight, s.posterior);
            const AtomicDistribution mixed = mixture(parts);
            REQUIRE(mixed.size() == prior.size());
            for (std::size_t j = 0; j < prior.size(); ++j) {
                CHECK_CLOSE(mixed.atoms()[j].value, prior.atoms()[j].value, 1e-9);
                CHECK_CLOSE(mixed.atoms()[j].mass, prior.atoms()[j].mass, 1e-9);
            }
            CHECK_CLOSE(mean(posterior_mean_distribution(dec)), mean(prior), 1e-12);
        }
    }
}
