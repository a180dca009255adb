#include <doctest.h>

#include "rdl/json_io.hpp"
#include "rdl/random_instances.hpp"
#include "test_support.hpp"

using namespace rdl;

TEST_CASE("distribution round trip is exact") {
    for (int i = 0; i < 20; ++i) {
        auto rng = sweep_rng(53, static_cast<std::uint64_t>(i));
        const AtomicDistribution d = random_distribution(rng, 8);
        const AtomicDistribution back = distribution_from_json(to_json(d));
        REQUIRE(back.size() == d.size());
        for (std::size_t j = 0; j < d.size(); ++j) {
            CHECK(back.atoms()[j].value == d.atoms()[j].value);
            CHECK(back.atoms()[j].mass == d.atoms()[j].mass);
        }
    }
}

TEST_CASE("profile round trips") {
    const QuantileProfile qp({0.0, 0.25, 0.7, 1.0});
    const ProfileSpec back = profile_from_json(to_json(qp));
    CHECK(std::get<QuantileProfile>(back).thresholds() == qp.thresholds());

    const QualityProfile wp({0.0, 0.3, 1.0}, {0.0, 0.4, 1.0});
    const ProfileSpec wback = profile_from_json(to_json(wp));
    CHECK(std::get<QualityProfile>(wback).thresholds() == wp.thresholds());
    CHECK(std::get<QualityProfile>(wback).splits() == wp.splits());
}

TEST_CASE("instance round trips for every valuation kind") {
    auto rng = sweep_rng(59, 0);
    const MarketInstance affine_inst = random_instance(rng);
    const MarketInstance named{Valuation::additive(), AtomicDistribution::bernoulli(0.4),
                               AtomicDistribution::bernoulli(0.6)};
    const MarketInstance tabular{
        Valuation::tabular({0.0, 1.0}, {0.0, 1.0}, {{0.0, 1.0}, {0.5, 2.0}}),
        AtomicDistribution::bernoulli(0.5), AtomicDistribution::bernoulli(0.5)};
    for (const MarketInstance& inst : {affine_inst, named, tabular}) {
        const MarketInstance back = instance_from_json(to_json(inst));
        CHECK(back.valuation.kind() == inst.valuation.kind());
        CHECK(back.prior.size() == inst.prior.size());
        CHECK(to_json(back) == to_json(inst));
    }
}

TEST_CASE("certificate round trip") {
    const AdversarialCertificate cert =
        interior_bin_certificate(QuantileProfile({0.0, 0.5, 1.0}), 1);
    const AdversarialCertificate back = certificate_from_json(to_json(cert));
    CHECK(back.construction == cert.construction);
    CHECK(back.target_ratio == cert.target_ratio);
    CHECK(back.achieved_ratio == cert.achieved_ratio);
    REQUIRE(back.quantile_profile.has_value());
    CHECK(back.quantile_profile->thresholds() == cert.quantile_profile->thresholds());
    CHECK(to_json(back) == to_json(cert));
}

TEST_CASE("parse_profile presets") {
    const ProfileSpec uniform = parse_profile("uniform:4");
    CHECK(std::get<QuantileProfile>(uniform).thresholds() ==
          std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

    const ProfileSpec airbnb = parse_profile("airbnb");
    CHECK(std::get<QuantileProfile>(airbnb).thresholds() ==
          std::vector<double>{0.0, 0.1, 0.9, 0.95, 0.99, 1.0});

    CHECK_THROWS_AS(parse_profile("uniform:0"), ParseError);
}

TEST_CASE("parse_profile threshold lists and inline JSON") {
    const ProfileSpec listed = parse_profile("0, 0.25, 0.5, 1");
    CHECK(std::get<QuantileProfile>(listed).k() == 3);

    CHECK_THROWS_AS(parse_profile("0, 0.5, 0.4, 1"), InvariantViolation);
    CHECK_THROWS_AS(parse_profile("0, banana, 1"), ParseError);

    const ProfileSpec inline_json = parse_profile(R"({"quantiles": [0, 0.5, 1]})");
    CHECK(std::get<QuantileProfile>(inline_json).k() == 2);

    const ProfileSpec quality = parse_profile(R"({"qualities": [0, 0.5, 1]})");
    CHECK(std::get<QualityProfile>(quality).splits() == std::vector<double>{0.0, 1.0, 1.0});
}

TEST_CASE("continuous families discretize on parse") {
    const AtomicDistribution d = distribution_from_json(Json{{"family", "uniform"}, {"n", 4}});
    REQUIRE(d.size() == 4);
    CHECK(d.atoms()[0].value == 0.125);

    const AtomicDistribution dense = distribution_from_json(Json{{"family", "uniform"}});
    CHECK(dense.size() == 10000);
    CHECK(close(mean(dense), 0.5, 1e-12));

    CHECK_THROWS_AS(distribution_from_json(Json{{"family", "cauchy"}}), ParseError);
}

TEST_CASE("instance parse errors carry field paths") {
    CHECK_THROWS_WITH_AS(instance_from_json(Json{{"types", to_json(AtomicDistribution::bernoulli(0.5))}}),
                         doctest::Contains("valuation"), ParseError);
    Json bad = {{"valuation", {{"kind", "nonsense"}}},
                {"types", to_json(AtomicDistribution::bernoulli(0.5))},
                {"prior", to_json(AtomicDistribution::bernoulli(0.5))}};
    CHECK_THROWS_AS(instance_from_json(bad), ParseError);
}
