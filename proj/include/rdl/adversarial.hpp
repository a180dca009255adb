#pragma once

#include <optional>
#include <string>

#include "rdl/market.hpp"
#include "rdl/profiles.hpp"

namespace rdl {

enum class Construction { InteriorBin, LastBin, QualityHard, SingleCrossing };

/// Stable wire tags for certificate JSON.
std::string construction_tag(Construction c);
Construction construction_from_tag(const std::string& tag);

/// A market instance engineered to make a given disclosure policy lose,
/// together with the ratio it is meant to achieve and the ratio it
/// actually achieves.  The achieved ratio is always recomputed end to end
/// through the partition and market oracles, never by substituting the
/// closed form.
struct AdversarialCertificate {
    Construction construction = Construction::InteriorBin;
    MarketInstance instance;
    double target_ratio = 0.0;
    double achieved_ratio = 0.0;
    std::optional<QuantileProfile> quantile_profile;
    std::optional<QualityProfile> quality_profile;
};

/// Worst case for an interior bin r < K: a Bernoulli prior positioned so
/// the policy's bin-r posterior mean equals s_r = sqrt(1-Q_r)/(1+sqrt(1-Q_r)),
/// paired with the hinge-realizing consumer with c = s_r.  The achieved
/// ratio equals the bin-r term of robust_ratio exactly.
AdversarialCertificate interior_bin_certificate(const QuantileProfile& profile, int r);

/// Worst case for the last bin: a three-point prior {0, t, 1} with masses
/// {1-eps, eps/2, eps/2} and the hinge consumer at c equal to the last
/// bin's posterior mean.  Achieves 1 + (Q_K - Q_{K-1}) - eps exactly.
/// Requires 0 < eps < Q_K - Q_{K-1} and the resulting mean below t.
AdversarialCertificate last_bin_certificate(const QuantileProfile& profile, double eps,
                                            double t = 0.5);

/// Two-point prior squeezed strictly below the lowest positive quality
/// threshold, collapsing any quality partition to no information; the
/// achieved ratio equals 2/(1+eps) for every split choice.
AdversarialCertificate quality_partition_hard_instance(const QualityProfile& profile,
                                                       double eps);

/// Fixed 3x3 tabular instance with a single-crossing (non-CMRS) valuation
/// whose no-information revenue falls a factor 41/15 > 2 short of optimal.
AdversarialCertificate single_crossing_instance();

} // namespace rdl
