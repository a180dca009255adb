#pragma once

#include <vector>

#include "rdl/distribution.hpp"
#include "rdl/partition.hpp"
#include "rdl/valuation.hpp"

namespace rdl {

/// Optimal posted-price revenue as a function of the posterior mean:
/// the upper envelope of affine pieces x -> (1 - D(theta))*v(theta, x),
/// one per cutoff type.  Non-negative, non-decreasing and convex on [0,1]
/// with h(x) >= x*h(1).
class IndirectRevenue {
public:
    struct Piece {
        double slope = 0.0;
        double intercept = 0.0;
    };

    /// Keeps only pieces that attain the envelope somewhere on [0,1].
    static IndirectRevenue from_pieces(std::vector<Piece> pieces);
    /// max{c, x}.
    static IndirectRevenue hinge(double c);

    /// Envelope value at x in [0,1]; throws OutOfRange otherwise.
    double operator()(double x) const;

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }

private:
    IndirectRevenue() = default;
    std::vector<Piece> pieces_;
};

/// A full market: the consumer valuation, type distribution D and
/// product quality prior F.
struct MarketInstance {
    Valuation valuation;
    AtomicDistribution types;
    AtomicDistribution prior;
};

/// Envelope of the cutoff-type pieces (1 - D(theta_i))*(a_i + b_i x),
/// where 1 - D(theta) is the mass of types >= theta.  Affine-in-quality
/// valuations only.
IndirectRevenue indirect_revenue(const Valuation& v, const AtomicDistribution& types);

double eval_indirect(const IndirectRevenue& h, double x);

/// Optimal posted-price revenue against the given posterior: prices are
/// enumerated over the per-type posterior expected valuations, which is
/// exact because revenue is piecewise linear in the price with kinks only
/// at those values.
double revenue_from_posterior(const Valuation& v, const AtomicDistribution& types,
                              const AtomicDistribution& posterior);

/// Expected revenue of a signaling scheme: signal weights times per-signal
/// optimal posted-price revenue.
double revenue(const MarketInstance& instance, const SignalDecomposition& dec);

/// Bayesian-optimal revenue; equals revenue under full information.
double opt_benchmark(const MarketInstance& instance);

/// max over support points p of p * (mass of types >= p).
double myerson(const AtomicDistribution& types);

/// Revenue bounds for separable valuations v = g2(omega) + g1(omega)*u(theta).
struct CmrsBounds {
    double lower = 0.0;
    double rev_no_info = 0.0;
    double opt = 0.0;
    double upper = 0.0;
};

/// g1, g2 are per-quality tables on the support of F; u is a per-type
/// table on the support of D (u >= 0, non-decreasing, u(first type) = 0).
/// Returns the chain lower <= rev_ni <= opt <= upper, where
/// lower = max(E[g1]*Myer, E[g2]) and upper = E[g1]*Myer + E[g2] with the
/// Myerson term taken over the transformed type values u(theta).
/// Throws ChainViolation if any link fails beyond 1e-9.
CmrsBounds cmrs_bounds(const std::vector<double>& g1, const std::vector<double>& g2,
                       const std::vector<double>& u, const AtomicDistribution& prior,
                       const AtomicDistribution& types);

} // namespace rdl
