#pragma once

#include "dualspec/spectral.hpp"

#include <span>
#include <string>
#include <vector>

namespace dualspec {

// A point of the oscillator (energy, coupling) plane.
struct OscPoint {
    Complex energy{};  // W
    Complex lambda{};
};

// A point of the Coulomb (energy, coupling) plane.
struct CoulombPoint {
    Complex energy{};  // E_C
    Complex g{};
};

// E_C = -lambda / (4 kappa0^2), g = -W / (4 kappa0), and back. The optional
// `perturb` scales the coupling (g by 1 + perturb, W by the same factor on the
// way back); it exists only to build negative controls.
CoulombPoint map_osc_to_coulomb(Complex W, Complex lambda, double kappa0, double perturb = 0.0);
OscPoint map_coulomb_to_osc(Complex E, Complex g, double kappa0, double perturb = 0.0);

struct IdentityCheck {
    std::string name;
    Complex osc_side{};
    Complex coulomb_side{};
    double residual = 0.0;  // |osc_side * factor - coulomb_side| / max(1, |coulomb_side|)
};

// Evaluates the correspondences between the two theories at the image of
// (W, lambda): alpha, w, K, gamma(alpha), gamma~ and Omega (ratio 2 sqrt(kappa0)).
// IdentityViolation names the first identity whose residual exceeds tol.
std::vector<IdentityCheck> check_parameter_identities(Complex W, double lambda, double kappa0, const Extension& zeta,
                                                      double tol = 1e-10);

// Normalized-state ratio y / (x^{1/4} v) between dual eigenfunctions.
// Continuum states: sqrt2 kappa0^{1/4}, a constant.
double continuum_transport_ratio(double kappa0);
// Discrete states: Q_C / Q_O for oscillator level n at (lambda, zeta).
double discrete_transport_ratio(double lambda, double kappa0, const Extension& zeta, int n);

struct TransportedState {
    std::vector<double> x;
    std::vector<double> values;
};

// x = kappa0 u^2, value = ratio * x^{1/4} * oscillator value. GridError on u <= 0.
TransportedState transport_eigenfunction(std::span<const double> u, std::span<const double> osc_values,
                                         double kappa0, double ratio);

enum class SpectralClass { Discrete, Continuum, NonSpectral };
std::string spectral_class_name(SpectralClass c);

struct CorrespondenceEntry {
    std::string direction;  // "osc->coulomb" or "coulomb->osc"
    OscPoint osc;
    CoulombPoint coulomb;
    SpectralClass source_class = SpectralClass::NonSpectral;
    SpectralClass image_class = SpectralClass::NonSpectral;
    double residual = 0.0;  // quantitative check at the image (see verify_spectrum_correspondence)
    bool ok = false;
};

struct CorrespondenceReport {
    double lambda = 0.0;
    double kappa0 = 1.0;
    double zeta = 0.0;
    double tol = 0.0;
    double perturb = 0.0;
    std::vector<CorrespondenceEntry> entries;
    double worst_residual = 0.0;  // over entries whose residual must be small
    int mismatches = 0;
    bool passed = false;
};

// Maps the spectrum of the oscillator at (lambda, zeta) onto the Coulomb side
// and back, always judging each image with the other theory's own solver.
//  lambda > 0: levels n <= n_max (eigenvalue residual <= tol on both sides)
//              and the midpoints between them (residual >= 1e-2 on both sides).
//  lambda < 0: e_samples on the whole-line continuum; the density ratio
//              rho_C^2 / rho_O^2 must equal 2 sqrt(kappa0) to tol.
//  lambda = 0: the negative level against the zero-energy atom, and e_samples
//              (W > 0 continuum, W < 0 weightless) against E_C = 0.
CorrespondenceReport verify_spectrum_correspondence(double lambda, const Extension& zeta, int n_max,
                                                    std::span<const double> e_samples, double tol,
                                                    double kappa0 = 1.0, double perturb = 0.0);

// Throws CorrespondenceViolation describing the worst entry unless the report passed.
void enforce(const CorrespondenceReport& report);

}  // namespace dualspec
