#include "model.hpp"

#include "dualspec/errors.hpp"

#include <cmath>

namespace dualspec {

namespace {

void require_point(const detail::HalfLineModel& m, double p) {
    if (!m.accepts(p)) throw DomainError("green: points must be finite and inside the half-line");
}

}  // namespace

Complex omega_function(const Theory& theory, const Extension& zeta, Complex W) {
    const auto m = detail::make_model(theory);
    const double s = zeta.sin();
    const double c = zeta.cos();
    Complex omega;
    Complex omega_tilde;
    try {
        const Complex gt = m->gamma_tilde(W);
        omega = s + gt * c;
        omega_tilde = c - gt * s;
    } catch (const SpectralPole&) {
        // gamma~ = inf: divide both by it.
        omega = c;
        omega_tilde = -s;
    }
    if (omega == 0.0) throw NotResolventSet("omega: W is an eigenvalue of this extension");
    return omega_tilde / (m->wronskian() * omega);
}

Complex green_function(const Theory& theory, const Extension& zeta, double p1, double p2, Complex W) {
    if (!(W.imag() > 0.0)) throw NotResolventSet("green: needs Im W > 0");
    const auto m = detail::make_model(theory);
    require_point(*m, p1);
    require_point(*m, p2);
    const double near = std::min(p1, p2);
    const double far = std::max(p1, p2);

    const Complex gt = m->gamma_tilde(W);
    const Complex omega = zeta.sin() + gt * zeta.cos();
    const Complex regular = m->u_zeta(W, zeta, near).value;
    if (const auto rec = m->recessive(W, far)) return regular * rec->value / (m->wronskian() * omega);

    // Recessive prefactor singular: fall back to the Omega U U - U U~ / Wr form.
    const Complex omega_tilde = zeta.cos() - gt * zeta.sin();
    const ZetaPair outer = m->u_zeta(W, zeta, far);
    return regular * (omega_tilde * outer.value - omega * outer.partner) / (m->wronskian() * omega);
}

}  // namespace dualspec
