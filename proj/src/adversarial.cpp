#include "rdl/adversarial.hpp"

#include <cmath>
#include <string>

#include "rdl/partition.hpp"
#include "rdl/robust.hpp"

namespace rdl {

std::string construction_tag(Construction c) {
    switch (c) {
        case Construction::InteriorBin: return "Lemma44Case1";
        case Construction::LastBin: return "Lemma44Case2";
        case Construction::QualityHard: return "QualityHard";
        case Construction::SingleCrossing: return "SingleCrossing";
    }
    return "unknown";
}

Construction construction_from_tag(const std::string& tag) {
    if (tag == "Lemma44Case1") return Construction::InteriorBin;
    if (tag == "Lemma44Case2") return Construction::LastBin;
    if (tag == "QualityHard") return Construction::QualityHard;
    if (tag == "SingleCrossing") return Construction::SingleCrossing;
    throw ParseError("unknown certificate construction '" + tag + "'");
}

AdversarialCertificate interior_bin_certificate(const QuantileProfile& profile, int r) {
    const int k = profile.k();
    if (r < 1 || r >= k)
        throw InvalidBin("interior-bin construction needs r in [1, K-1], got r = " +
                         std::to_string(r));
    if (profile.width(r) <= 0.0)
        throw InvalidBin("bin " + std::to_string(r) + " has zero width");

    const double qr = profile.q(r);
    const double root = std::sqrt(1.0 - qr);
    const double s = root / (1.0 + root);
    const double omega_bar = (1.0 - qr) + profile.width(r) * s;

    AdversarialCertificate cert{
        Construction::InteriorBin,
        {Valuation::hinge_realizing(), AtomicDistribution::bernoulli(s),
         AtomicDistribution::bernoulli(omega_bar)},
        1.0 + profile.width(r) / ((1.0 + root) * (1.0 + root)),
        0.0,
        profile,
        {}};
    cert.achieved_ratio =
        opt_benchmark(cert.instance) /
        revenue(cert.instance, quantile_decomposition(cert.instance.prior, profile));
    return cert;
}

AdversarialCertificate last_bin_certificate(const QuantileProfile& profile, double eps,
                                            double t) {
    const int k = profile.k();
    const double last_width = profile.width(k);
    if (!(eps > 0.0) || eps >= last_width)
        throw EpsilonTooLarge("eps must lie in (0, Q_K - Q_{K-1}) = (0, " +
                              std::to_string(last_width) + "), got " + std::to_string(eps));
    if (!(t > 0.0) || !(t < 1.0))
        throw ThresholdViolation("t must lie in (0, 1), got " + std::to_string(t));
    const double m_k = eps * (1.0 + t) / (2.0 * last_width);
    if (m_k >= t)
        throw ThresholdViolation("last-bin mean " + std::to_string(m_k) +
                                 " must stay below t = " + std::to_string(t));

    AdversarialCertificate cert{
        Construction::LastBin,
        {Valuation::hinge_realizing(), AtomicDistribution::bernoulli(m_k),
         AtomicDistribution({{0.0, 1.0 - eps}, {t, eps / 2.0}, {1.0, eps / 2.0}})},
        1.0 + last_width - eps,
        0.0,
        profile,
        {}};
    cert.achieved_ratio =
        opt_benchmark(cert.instance) /
        revenue(cert.instance, quantile_decomposition(cert.instance.prior, profile));
    return cert;
}

AdversarialCertificate quality_partition_hard_instance(const QualityProfile& profile,
                                                       double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw OutOfRange("eps must lie in (0, 1), got " + std::to_string(eps));
    double w_j = 0.0;
    for (int r = 1; r <= profile.k(); ++r)
        if (profile.w(r) > 0.0) {
            w_j = profile.w(r);
            break;
        }

    const double lo = eps * eps * w_j / 2.0;
    const double hi = w_j / 2.0;
    const AtomicDistribution prior({{lo, 1.0 / (1.0 + eps)}, {hi, eps / (1.0 + eps)}});
    const double omega_bar = mean(prior);

    AdversarialCertificate cert{
        Construction::QualityHard,
        {Valuation::hinge_realizing(), AtomicDistribution::bernoulli(omega_bar), prior},
        2.0 / (1.0 + eps),
        0.0,
        {},
        profile};
    cert.achieved_ratio =
        opt_benchmark(cert.instance) /
        revenue(cert.instance, quality_decomposition(cert.instance.prior, profile));
    return cert;
}

AdversarialCertificate single_crossing_instance() {
    const std::vector<double> grid = {0.0, 0.5, 1.0};
    // v = 1 - A1(w) - B2(t) + A1(w)B1(t) + A2(w)B2(t) with indicator
    // steps at 1/3 and 2/3, tabulated on the support grid.
    const std::vector<std::vector<double>> values = {
        {1.0, 0.0, 0.0}, // theta = 0
        {1.0, 1.0, 1.0}, // theta = 1/2
        {0.0, 0.0, 1.0}, // theta = 1
    };

    AdversarialCertificate cert{
        Construction::SingleCrossing,
        {Valuation::tabular(grid, grid, values),
         AtomicDistribution({{0.0, 5.0 / 6.0}, {0.5, 1.0 / 60.0}, {1.0, 3.0 / 20.0}}),
         AtomicDistribution({{0.0, 1.0 / 60.0}, {0.5, 53.0 / 60.0}, {1.0, 1.0 / 10.0}})},
        41.0 / 15.0,
        0.0,
        {},
        {}};
    cert.achieved_ratio =
        opt_benchmark(cert.instance) /
        revenue(cert.instance, no_info_decomposition(cert.instance.prior));
    return cert;
}

} // namespace rdl
