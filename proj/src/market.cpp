#include "rdl/market.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rdl {

namespace {

double piece_value(const IndirectRevenue::Piece& p, double x) {
    return p.slope * x + p.intercept;
}

} // namespace

IndirectRevenue IndirectRevenue::from_pieces(std::vector<Piece> pieces) {
    if (pieces.empty()) throw InvariantViolation("indirect revenue needs at least one piece");
    for (const auto& p : pieces) {
        if (!std::isfinite(p.slope) || !std::isfinite(p.intercept))
            throw InvariantViolation("indirect revenue piece must be finite");
        if (p.slope < 0.0)
            throw InvariantViolation("indirect revenue must be non-decreasing (slope >= 0)");
        // Non-negative intercepts are exactly what keeps the envelope
        // above the chord x*h(1).
        if (p.intercept < 0.0)
            throw InvariantViolation("indirect revenue piece intercept must be >= 0");
    }
    // Sort by slope; among equal slopes only the highest intercept can win.
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
        return x.slope != y.slope ? x.slope < y.slope : x.intercept < y.intercept;
    });
    std::vector<Piece> dedup;
    for (const auto& p : pieces) {
        if (!dedup.empty() && dedup.back().slope == p.slope) dedup.back() = p;
        else dedup.push_back(p);
    }

    // Keep pieces that are strictly on top somewhere in [0,1].  With the
    // small piece counts here an O(n^2) sweep over breakpoints is plenty.
    IndirectRevenue h;
    auto env = [&dedup](double x) {
        double best = piece_value(dedup.front(), x);
        for (const auto& p : dedup) best = std::max(best, piece_value(p, x));
        return best;
    };
    std::vector<double> xs = {0.0, 1.0};
    for (std::size_t i = 0; i < dedup.size(); ++i)
        for (std::size_t j = i + 1; j < dedup.size(); ++j) {
            double dx = dedup[j].slope - dedup[i].slope;
            if (dx == 0.0) continue;
            double x = (dedup[i].intercept - dedup[j].intercept) / dx;
            if (x > 0.0 && x < 1.0) xs.push_back(x);
        }
    std::sort(xs.begin(), xs.end());
    std::vector<bool> keep(dedup.size(), false);
    auto mark_argmax = [&](double x) {
        double best = env(x);
        for (std::size_t i = 0; i < dedup.size(); ++i)
            if (piece_value(dedup[i], x) >= best) {
                keep[i] = true;
                return;
            }
    };
    mark_argmax(0.0);
    mark_argmax(1.0);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) mark_argmax(0.5 * (xs[i] + xs[i + 1]));
    for (std::size_t i = 0; i < dedup.size(); ++i)
        if (keep[i]) h.pieces_.push_back(dedup[i]);
    return h;
}

IndirectRevenue IndirectRevenue::hinge(double c) {
    if (c < 0.0 || c > 1.0) throw OutOfRange("hinge level must lie in [0,1]");
    if (c == 0.0) return from_pieces({{1.0, 0.0}});
    return from_pieces({{0.0, c}, {1.0, 0.0}});
}

double IndirectRevenue::operator()(double x) const {
    if (x < 0.0 || x > 1.0)
        throw OutOfRange("indirect revenue evaluated at " + std::to_string(x));
    double best = piece_value(pieces_.front(), x);
    for (const auto& p : pieces_) best = std::max(best, piece_value(p, x));
    return best;
}

IndirectRevenue indirect_revenue(const Valuation& v, const AtomicDistribution& types) {
    if (!v.affine_in_quality())
        throw InvariantViolation("indirect revenue requires an affine-in-quality valuation");
    std::vector<IndirectRevenue::Piece> pieces;
    pieces.reserve(types.size());
    double tail = 1.0; // mass of types >= theta_i (left-continuous CDF)
    for (const auto& t : types.atoms()) {
        Valuation::Coeffs c = v.affine_coeffs(t.value);
        pieces.push_back({tail * c.b, tail * c.a});
        tail -= t.mass;
    }
    return IndirectRevenue::from_pieces(std::move(pieces));
}

double eval_indirect(const IndirectRevenue& h, double x) { return h(x); }

double revenue_from_posterior(const Valuation& v, const AtomicDistribution& types,
                              const AtomicDistribution& posterior) {
    const auto& atoms = types.atoms();
    std::vector<double> willingness(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i)
        willingness[i] = v.expected_value(atoms[i].value, posterior);

    // The optimal price equals some buyer's expected valuation; ties buy.
    double best = 0.0;
    for (double p : willingness) {
        if (p <= 0.0) continue;
        double demand = 0.0;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (willingness[i] >= p) demand += atoms[i].mass;
        best = std::max(best, p * demand);
    }
    return best;
}

double revenue(const MarketInstance& instance, const SignalDecomposition& dec) {
    double total = 0.0;
    for (const auto& s : dec.signals)
        total += s.weight * revenue_from_posterior(instance.valuation, instance.types, s.posterior);
    return total;
}

double opt_benchmark(const MarketInstance& instance) {
    return revenue(instance, full_info_decomposition(instance.prior));
}

double myerson(const AtomicDistribution& types) {
    double best = 0.0;
    double tail = 1.0;
    for (const auto& t : types.atoms()) {
        best = std::max(best, t.value * tail);
        tail -= t.mass;
    }
    return best;
}

CmrsBounds cmrs_bounds(const std::vector<double>& g1, const std::vector<double>& g2,
                       const std::vector<double>& u, const AtomicDistribution& prior,
                       const AtomicDistribution& types) {
    if (g1.size() != prior.size() || g2.size() != prior.size())
        throw InvariantViolation("g1/g2 tables must match the prior support");
    if (u.size() != types.size())
        throw InvariantViolation("u table must match the type support");
    for (double x : g1)
        if (x < 0.0) throw InvariantViolation("g1 must be non-negative");
    for (double x : g2)
        if (x < 0.0) throw InvariantViolation("g2 must be non-negative");
    if (u.front() != 0.0) throw InvariantViolation("u must vanish at the lowest type");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0.0) throw InvariantViolation("u must be non-negative");
        if (i > 0 && u[i] < u[i - 1]) throw InvariantViolation("u must be non-decreasing");
    }

    double e_g1 = 0.0, e_g2 = 0.0;
    for (std::size_t j = 0; j < prior.size(); ++j) {
        e_g1 += g1[j] * prior.atoms()[j].mass;
        e_g2 += g2[j] * prior.atoms()[j].mass;
    }

    // Myerson revenue against the transformed type values u(theta).
    double myer = 0.0, tail = 1.0;
    for (std::size_t i = 0; i < types.size(); ++i) {
        myer = std::max(myer, u[i] * tail);
        tail -= types.atoms()[i].mass;
    }

    // Materialize the separable form as a tabular valuation and push both
    // revenue figures through the shared posted-price oracle.
    std::vector<double> type_grid, quality_grid;
    for (const auto& t : types.atoms()) type_grid.push_back(t.value);
    for (const auto& q : prior.atoms()) quality_grid.push_back(q.value);
    std::vector<std::vector<double>> table(type_grid.size(),
                                           std::vector<double>(quality_grid.size()));
    for (std::size_t i = 0; i < type_grid.size(); ++i)
        for (std::size_t j = 0; j < quality_grid.size(); ++j)
            table[i][j] = g2[j] + g1[j] * u[i];
    const Valuation v = Valuation::tabular(std::move(type_grid), std::move(quality_grid),
                                           std::move(table));
    const MarketInstance instance{v, types, prior};

    CmrsBounds b;
    b.lower = std::max(e_g1 * myer, e_g2);
    b.upper = e_g1 * myer + e_g2;
    b.rev_no_info = revenue(instance, no_info_decomposition(prior));
    b.opt = opt_benchmark(instance);

    const double slack = 1e-9;
    if (b.lower > b.rev_no_info + slack || b.rev_no_info > b.opt + slack ||
        b.opt > b.upper + slack)
        throw ChainViolation("separable revenue chain violated: lower=" +
                             std::to_string(b.lower) + " rev_ni=" + std::to_string(b.rev_no_info) +
                             " opt=" + std::to_string(b.opt) + " upper=" + std::to_string(b.upper));
    return b;
}

} // namespace rdl
