#pragma once

#include "dualspec/extension.hpp"
#include "dualspec/solutions.hpp"
#include "dualspec/specfun.hpp"

namespace dualspec {

// Half-line problem -psi'' + lambda u^2 psi = W psi with boundary scale kappa0.
struct OscillatorTheory {
    double lambda;
    double kappa0;

    // Throws DomainError unless lambda is finite and kappa0 is finite and positive.
    OscillatorTheory(double lambda, double kappa0 = 1.0);
};

struct OscKernelParams {
    Complex varkappa;     // lambda^{1/4}, rotated by -pi/4 for lambda < 0, zero at lambda = 0
    Complex varkappa_sq;  // sqrt(lambda), or -i sqrt|lambda|
    Complex w;            // W / (4 varkappa^2); unused at lambda = 0
    Complex alpha;        // 1/4 - w
    bool free_limit;      // lambda = 0: trigonometric solutions replace the Kummer ones

    Complex rho(double u) const { return varkappa_sq * (u * u); }
};

OscKernelParams osc_params(const OscillatorTheory& theory, Complex W);

// (O1, O2, O3) with O1 ~ u, O2 ~ 1 at the origin and O3 recessive
// (O3 = O2 - 2 varkappa gamma(alpha) O1). Requires u >= 0.
SolutionTriple osc_basis(const OscillatorTheory& theory, Complex W, double u, const Accuracy& acc = {});

// The recessive solution rescaled by its Gamma prefactor:
// exp(-rho/2) Psi(alpha, 1/2; rho) and its u-derivative. Defined for all alpha.
PointValue osc_recessive_unscaled(const OscillatorTheory& theory, Complex W, double u,
                                  const Accuracy& acc = {});

// gamma~ = (2 varkappa / kappa0) Gamma(alpha + 1/2) / Gamma(alpha).
// SpectralPole when alpha + 1/2 is a non-positive integer.
GammaTilde gamma_tilde_osc(const OscillatorTheory& theory, Complex W);
// Same quantity from the generic complex-gamma route, bypassing the
// real-axis closed forms used for lambda < 0.
Complex gamma_tilde_osc_generic(const OscillatorTheory& theory, Complex W);

// Real-axis helpers for the eigenvalue machinery (lambda >= 0).
Projective gamma_tilde_osc_projective(const OscillatorTheory& theory, double E);
double gamma_tilde_osc_slope(const OscillatorTheory& theory, double E);
double inverse_gamma_tilde_osc_slope(const OscillatorTheory& theory, double E);

// U = kappa0 O1 sin(zeta) + O2 cos(zeta), U~ = kappa0 O1 cos(zeta) - O2 sin(zeta).
ZetaPair u_zeta_osc(const OscillatorTheory& theory, Complex W, const Extension& zeta, double u,
                    const Accuracy& acc = {});

// kappa0 u sin(zeta) + cos(zeta): the small-u form every domain element must follow.
double osc_boundary_form(const OscillatorTheory& theory, const Extension& zeta, double u);

}  // namespace dualspec
