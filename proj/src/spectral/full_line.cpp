#include "model.hpp"

#include "dualspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dualspec {

namespace {

struct Tagged {
    double energy;
    Parity parity;
    int index;
};

std::vector<Level> sector_levels(const Theory& theory, const Extension& zeta, int n_max) {
    try {
        return discrete_levels(theory, zeta, n_max);
    } catch (const NotDiscreteRegime&) {
        return {};
    }
}

bool coincide(double a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)); }

}  // namespace

FullLineSpectrum assemble_full_line(const Theory& theory, const Extension& zeta_even, const Extension& zeta_odd,
                                    int n_max) {
    const auto m = detail::make_model(theory);
    FullLineSpectrum out{zeta_even, zeta_odd, {}, m->support(), 0, {}};

    const std::vector<Level> even = sector_levels(theory, zeta_even, n_max);
    const std::vector<Level> odd = sector_levels(theory, zeta_odd, n_max);
    std::vector<Tagged> all;
    for (const Level& l : even) all.push_back({l.energy, Parity::Even, l.index});
    for (const Level& l : odd) all.push_back({l.energy, Parity::Odd, l.index});
    std::stable_sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.energy < b.energy; });

    // Two towers: beyond the last level of the shorter list the other sector
    // may still have unresolved levels, so stop there.
    double limit = std::numeric_limits<double>::infinity();
    if (m->regime() == DiscreteRegime::Tower && !even.empty() && !odd.empty())
        limit = std::min(even.back().energy, odd.back().energy);

    for (const Tagged& t : all) {
        if (t.energy > limit && !coincide(t.energy, limit)) break;
        if (!out.levels.empty() && coincide(out.levels.back().energy, t.energy)) {
            FullLineLevel& last = out.levels.back();
            ++last.multiplicity;
            last.sectors.push_back(t.parity);
            last.sector_indices.push_back(t.index);
            continue;
        }
        out.levels.push_back({t.energy, 1, {t.parity}, {t.index}});
    }

    out.continuum_multiplicity = out.support.kind == SupportKind::Empty ? 0 : 2;
    if (auto a = m->atom(zeta_even)) out.atoms.push_back(*a);
    if (auto a = m->atom(zeta_odd)) out.atoms.push_back(*a);
    return out;
}

std::vector<double> full_line_eigenfunction(const Theory& theory, const Extension& zeta, Parity parity,
                                            const EigenSelector& which, std::span<const double> points) {
    std::vector<double> mirrored(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i])) throw GridError("full-line eigenfunction: non-finite point");
        mirrored[i] = std::abs(points[i]);
    }
    std::vector<double> values = eigenfunction(theory, zeta, which, mirrored);
    const double norm = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double sign = parity == Parity::Odd ? ((points[i] > 0.0) - (points[i] < 0.0)) : 1.0;
        values[i] *= norm * sign;
    }
    return values;
}

}  // namespace dualspec
