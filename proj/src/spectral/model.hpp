#pragma once

// Internal adapter that presents either theory as a generic half-line problem
// to the level solver, the density/Green machinery and the quadrature.

#include "dualspec/spectral.hpp"

#include <memory>
#include <optional>

namespace dualspec::detail {

class HalfLineModel {
public:
    virtual ~HalfLineModel() = default;

    virtual double kappa0() const = 0;
    // Wr(U, U~); Omega = omega~ / (wronskian * omega) and Q^2 = -1/(wronskian cos^2 gamma~').
    virtual double wronskian() const = 0;

    virtual Complex gamma_tilde(Complex E) const = 0;
    virtual Projective projective(double E) const = 0;
    virtual double slope(double E) const = 0;
    virtual double inverse_slope(double E) const = 0;

    virtual DiscreteRegime regime() const = 0;
    virtual double pole(int n) const = 0;
    virtual double zero(int n) const = 0;
    virtual double threshold() const = 0;
    // A (negative) energy where gamma~ is roughly `target` (> 0), from the large-|E| asymptotics.
    virtual double left_seed(double target) const = 0;

    virtual ContinuumSupport support() const = 0;
    virtual double density(const Extension& zeta, double E) const = 0;
    virtual std::optional<Atom> atom(const Extension& zeta) const { (void)zeta; return std::nullopt; }

    virtual ZetaPair u_zeta(Complex E, const Extension& zeta, double p) const = 0;
    // Full recessive solution (O3 / C3) with derivative, or nullopt when its prefactor is singular.
    virtual std::optional<PointValue> recessive(Complex E, double p) const = 0;
    // U_zeta(p; E) at an eigenvalue E, evaluated stably far from the origin.
    virtual double bound_state(double E, const Extension& zeta, double p) const = 0;
    // The zero-energy eigenfunction of the atom (unnormalized U), Coulomb only.
    virtual double zero_energy_state(const Extension& zeta, double p) const;

    // Whether p is a valid point of the half-line (the Coulomb origin is excluded).
    virtual bool accepts(double p) const = 0;

    // Quadrature variable s -> physical point and Jacobian.
    virtual double point_of(double s) const = 0;
    virtual double jacobian(double s) const = 0;
    // Initial guess for the outer integration limit in s for a state at E.
    virtual double cutoff_guess(double E) const = 0;
};

std::unique_ptr<HalfLineModel> make_model(const Theory& theory);

// rho^2 = num * e^{L+x} / ((A + B e^{L-x})^2 + B^2 e^{2(L+x)}), evaluated in log space.
double scaled_density(double num, double log_gamma_sq, double x, double A, double B);

}  // namespace dualspec::detail
