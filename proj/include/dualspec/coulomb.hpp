#pragma once

#include "dualspec/extension.hpp"
#include "dualspec/solutions.hpp"
#include "dualspec/specfun.hpp"

#include <optional>

namespace dualspec {

// Half-line problem -psi'' + (g/x - 3/(16 x^2)) psi = E psi with boundary scale kappa0.
struct CoulombTheory {
    double g;
    double kappa0;

    // Throws DomainError unless g is finite and kappa0 is finite and positive.
    CoulombTheory(double g, double kappa0 = 1.0);
};

struct CoulKernelParams {
    Complex K;      // sqrt(-E), Re K >= 0; -i sqrt(E) on the upper rim of E > 0
    Complex alpha;  // 1/4 + g/(2K); unused when zero_energy
    Complex w;      // -g/(2K)
    bool zero_energy;

    Complex z(double x) const { return 2.0 * K * x; }
};

CoulKernelParams coul_params(const CoulombTheory& theory, Complex E);
// Coupling continued into the complex plane; used by the duality identities.
CoulKernelParams coul_params(Complex g, double kappa0, Complex E);

// sqrt(g) on the branch reached from Im E > 0: -i sqrt|g| for g < 0.
Complex coupling_root(Complex g);

// (C1, C2, C3) with C1 ~ kappa0^{-1/2} x^{3/4}, C2 ~ x^{1/4} and C3 recessive
// (C3 = C2 - kappa0 gamma~ C1). Requires x > 0. E = 0 uses closed forms.
SolutionTriple coul_basis(const CoulombTheory& theory, Complex E, double x, const Accuracy& acc = {});
SolutionTriple coul_basis(Complex g, double kappa0, Complex E, double x, const Accuracy& acc = {});

// x^{1/4} exp(-z/2) Psi(alpha, 1/2; z) and its x-derivative (E != 0).
PointValue coul_recessive_unscaled(const CoulombTheory& theory, Complex E, double x, const Accuracy& acc = {});

// gamma~ = 2 sqrt(2K/kappa0) Gamma(alpha + 1/2)/Gamma(alpha); at E = 0 it is 2 sqrt(g/kappa0).
GammaTilde gamma_tilde_coul(const CoulombTheory& theory, Complex E);
GammaTilde gamma_tilde_coul(Complex g, double kappa0, Complex E);
// Generic complex-gamma route, bypassing the closed form used for real E > 0.
Complex gamma_tilde_coul_generic(Complex g, double kappa0, Complex E);

// Real-axis helpers for E < 0.
Projective gamma_tilde_coul_projective(const CoulombTheory& theory, double E);
double gamma_tilde_coul_slope(const CoulombTheory& theory, double E);
double inverse_gamma_tilde_coul_slope(const CoulombTheory& theory, double E);

// The extension whose domain contains the zero-energy bound state (g > 0 only).
std::optional<Extension> zeta_g(const CoulombTheory& theory);

// U = kappa0 C1 sin(zeta) + C2 cos(zeta), U~ = kappa0 C1 cos(zeta) - C2 sin(zeta).
ZetaPair u_zeta_coul(const CoulombTheory& theory, Complex E, const Extension& zeta, double x,
                     const Accuracy& acc = {});

// Coefficients of x^{1/4} and x^{5/4} in the small-x form of C2.
struct AsymptoticLeader {
    double quarter = 1.0;
    double five_quarters = 0.0;
};
AsymptoticLeader asymptotic_leader(const CoulombTheory& theory);

// kappa0^{1/2} x^{3/4} sin(zeta) + (x^{1/4} + 2 g x^{5/4}) cos(zeta).
double coul_boundary_form(const CoulombTheory& theory, const Extension& zeta, double x);

}  // namespace dualspec
