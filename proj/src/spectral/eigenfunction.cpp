#include "model.hpp"

#include "dualspec/errors.hpp"
#include "dualspec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dualspec {

namespace {

using detail::HalfLineModel;

// Tail test for the outer integration limit: the squared integrand times a
// generous length scale must be negligible against a unit norm.
constexpr double kTailBound = 1e-15;
constexpr int kMaxCutoffGrowth = 200;

void require_points(const HalfLineModel& m, std::span<const double> points) {
    for (double p : points) {
        // The origin is allowed everywhere: the Coulomb states vanish there.
        if (p != 0.0 && !m.accepts(p)) throw GridError("eigenfunction: point " + std::to_string(p) + " is outside the half-line");
    }
}

Level level_of(const Theory& theory, const Extension& zeta, int n) {
    if (n < 0) throw NotInSpectrum("eigenfunction: level index must be >= 0");
    std::vector<Level> levels;
    try {
        levels = discrete_levels(theory, zeta, n);
    } catch (const NotDiscreteRegime& e) {
        throw NotInSpectrum(std::string("eigenfunction: ") + e.what());
    }
    if (std::size_t(n) >= levels.size())
        throw NotInSpectrum("eigenfunction: level " + std::to_string(n) + " does not exist for this extension");
    return levels[std::size_t(n)];
}

}  // namespace

std::vector<double> eigenfunction(const Theory& theory, const Extension& zeta, const EigenSelector& which,
                                  std::span<const double> points) {
    const auto m = detail::make_model(theory);
    require_points(*m, points);
    std::vector<double> out(points.size());

    if (const auto* lv = std::get_if<LevelIndex>(&which)) {
        const Level level = level_of(theory, zeta, lv->n);
        const double q = std::sqrt(level.weight);
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = q * m->bound_state(level.energy, zeta, points[i]);
        return out;
    }
    if (const auto* ce = std::get_if<ContinuumEnergy>(&which)) {
        const double E = ce->energy;
        if (!std::isfinite(E) || !m->support().contains(E))
            throw NotInSpectrum("eigenfunction: E = " + std::to_string(E) + " is not in the continuous spectrum");
        const double rho2 = m->density(zeta, E);
        if (!std::isfinite(rho2)) throw NotInSpectrum("eigenfunction: the density is singular at this energy");
        const double rho = std::sqrt(rho2);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!m->accepts(points[i])) {
                out[i] = 0.0;
                continue;
            }
            out[i] = rho * m->u_zeta(E, zeta, points[i]).value.real();
        }
        return out;
    }
    const auto atom = m->atom(zeta);
    if (!atom) throw NotInSpectrum("eigenfunction: no zero-energy bound state for this extension");
    const double q = std::sqrt(atom->weight);
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = q * m->zero_energy_state(zeta, points[i]);
    return out;
}

GramResult orthonormality_matrix(const Theory& theory, const Extension& zeta, int n_max,
                                 const QuadratureConfig& config) {
    config.validate();
    const auto m = detail::make_model(theory);
    const std::vector<Level> levels = discrete_levels(theory, zeta, n_max);
    const int count = int(levels.size());
    std::vector<double> q(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) q[k] = std::sqrt(levels[k].weight);

    auto integrand = [&](double s, std::size_t k) {
        const double p = m->point_of(s);
        return q[k] * m->bound_state(levels[k].energy, zeta, p) * std::sqrt(m->jacobian(s));
    };
    auto tail = [&](double s) {
        double worst = 0.0;
        for (std::size_t k = 0; k < levels.size(); ++k) {
            const double f = integrand(s, k);
            worst = std::max(worst, f * f * std::max(1.0, m->point_of(s)));
        }
        return worst;
    };

    double cut = 0.0;
    for (const Level& lv : levels) cut = std::max(cut, m->cutoff_guess(lv.energy));
    int grow = 0;
    while (tail(cut) > kTailBound || tail(1.1 * cut) > kTailBound) {
        if (++grow > kMaxCutoffGrowth) throw QuadratureFailure("orthonormality: eigenfunctions do not decay");
        cut *= 1.25;
    }

    const SharedRule rule = build_shared_rule(
        [&](double s, std::span<double> out) {
            for (std::size_t k = 0; k < levels.size(); ++k) out[k] = integrand(s, k);
        },
        count, 0.0, cut, config);

    GramResult g;
    g.size = count;
    g.entries.assign(std::size_t(count) * std::size_t(count), 0.0);
    kernels::weighted_gram(rule.weights, rule.values, count, g.entries);
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            const double target = i == j ? 1.0 : 0.0;
            g.max_deviation = std::max(g.max_deviation, std::abs(g.at(i, j) - target));
        }
    }
    g.quadrature_error = rule.error;
    g.cutoff = m->point_of(cut);
    return g;
}

}  // namespace dualspec
