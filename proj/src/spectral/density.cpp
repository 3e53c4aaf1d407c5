#include "model.hpp"

#include "dualspec/errors.hpp"

#include <cmath>

namespace dualspec {

ContinuumSupport continuum_support(const Theory& theory) { return detail::make_model(theory)->support(); }

double continuous_density(const Theory& theory, const Extension& zeta, double E) {
    return detail::make_model(theory)->density(zeta, E);
}

std::optional<Atom> zero_energy_atom(const Theory& theory, const Extension& zeta) {
    return detail::make_model(theory)->atom(zeta);
}

SpectrumResult spectrum(const Theory& theory, const Extension& zeta, int n_max, std::span<const double> e_grid) {
    for (std::size_t i = 0; i < e_grid.size(); ++i) {
        if (!std::isfinite(e_grid[i])) throw GridError("spectrum: energy grid contains a non-finite value");
        if (i > 0 && e_grid[i] < e_grid[i - 1]) throw GridError("spectrum: energy grid is not sorted");
    }
    const auto m = detail::make_model(theory);
    SpectrumResult out;
    try {
        out.levels = discrete_levels(theory, zeta, n_max);
    } catch (const NotDiscreteRegime&) {
        // Purely continuous for this extension.
    }
    out.support = m->support();
    for (double E : e_grid) {
        if (out.support.contains(E)) out.density.push_back({E, m->density(zeta, E)});
    }
    out.atom = m->atom(zeta);
    return out;
}

}  // namespace dualspec
