#include "dualspec/oscillator.hpp"

#include "dualspec/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dualspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpectralTol = 1e-12;
constexpr double kDegenerateTol = 1e-8;
const Complex kI(0.0, 1.0);

void require_point(double u) {
    if (!(u >= 0.0) || !std::isfinite(u)) throw DomainError("oscillator: the coordinate must be finite and >= 0");
}

// exp(-i pi/4) |lambda|^{1/4}, |lambda|^{1/4}, or 0.
Complex varkappa_of(double lambda) {
    if (lambda > 0.0) return std::pow(lambda, 0.25);
    if (lambda < 0.0) return std::polar(std::pow(-lambda, 0.25), -kPi / 4.0);
    return 0.0;
}

SolutionTriple free_basis(Complex W, double u) {
    const Complex k = std::sqrt(W);
    const Complex ku = k * u;
    SolutionTriple t;
    if (std::abs(ku) < 1e-8) {
        const Complex k2u2 = ku * ku;
        t.v1 = u * (1.0 - k2u2 / 6.0);
        t.d1 = 1.0 - k2u2 / 2.0;
    } else {
        t.v1 = std::sin(ku) / k;
        t.d1 = std::cos(ku);
    }
    t.v2 = std::cos(ku);
    t.d2 = -k * std::sin(ku);
    t.v3 = std::exp(kI * ku);
    t.d3 = kI * k * t.v3;
    return t;
}

// Real-axis gamma~ for lambda < 0 in the scaled closed form
// 4 pi |lambda|^{1/4} / (kappa0 |Gamma(alpha)|^2 (e^{-pi w} + i e^{pi w})).
Complex inverted_closed_form(const OscillatorTheory& th, double E) {
    const double root = std::sqrt(-th.lambda);
    const double w = E / (4.0 * root);
    const Complex alpha(0.25, -w);
    const double log_g = 2.0 * log_gamma(alpha).real();
    const double x = kPi * w;
    const double m = std::abs(x);
    const Complex den(std::exp(-x - m), std::exp(x - m));
    return 4.0 * kPi * std::pow(-th.lambda, 0.25) / th.kappa0 * std::exp(-log_g - m) / den;
}

}  // namespace

OscillatorTheory::OscillatorTheory(double lambda_, double kappa0_) : lambda(lambda_), kappa0(kappa0_) {
    if (!std::isfinite(lambda)) throw DomainError("oscillator: lambda must be finite");
    if (!std::isfinite(kappa0) || !(kappa0 > 0.0)) throw DomainError("oscillator: kappa0 must be positive");
}

OscKernelParams osc_params(const OscillatorTheory& theory, Complex W) {
    OscKernelParams p;
    p.free_limit = theory.lambda == 0.0;
    p.varkappa = varkappa_of(theory.lambda);
    p.varkappa_sq = p.varkappa * p.varkappa;
    if (theory.lambda < 0.0) p.varkappa_sq = Complex(0.0, -std::sqrt(-theory.lambda));
    if (theory.lambda > 0.0) p.varkappa_sq = std::sqrt(theory.lambda);
    if (p.free_limit) {
        p.w = 0.0;
        p.alpha = 0.0;
    } else {
        p.w = W / (4.0 * p.varkappa_sq);
        p.alpha = 0.25 - p.w;
    }
    return p;
}

SolutionTriple osc_basis(const OscillatorTheory& theory, Complex W, double u, const Accuracy& acc) {
    require_point(u);
    const OscKernelParams p = osc_params(theory, W);
    if (p.free_limit) return free_basis(W, u);

    const Complex rho = p.rho(u);
    const Complex drho = 2.0 * p.varkappa_sq * u;
    const Complex e = std::exp(-0.5 * rho);
    const Complex a1 = p.alpha + 0.5;

    const Complex f1 = kummer_phi(a1, 1.5, rho, acc);
    const Complex g1 = kummer_phi_derivative(a1, 1.5, rho, acc);
    const Complex f2 = kummer_phi(p.alpha, 0.5, rho, acc);
    const Complex g2 = kummer_phi_derivative(p.alpha, 0.5, rho, acc);

    SolutionTriple t;
    t.v1 = u * e * f1;
    t.d1 = e * f1 + u * drho * e * (g1 - 0.5 * f1);
    t.v2 = e * f2;
    t.d2 = drho * e * (g2 - 0.5 * f2);

    if (distance_to_pole(a1) < kDegenerateTol) {
        t.third_defined = false;
        return t;
    }
    const Complex k = 2.0 * p.varkappa * gamma_half_ratio(p.alpha);
    const Complex v3 = t.v2 - k * t.v1;
    if (u == 0.0 || std::abs(v3) >= 1e-3 * (std::abs(t.v2) + std::abs(k * t.v1))) {
        t.v3 = v3;
        t.d3 = t.d2 - k * t.d1;
        return t;
    }
    // The combination cancels: use the Tricomi representation directly.
    const PointValue r = osc_recessive_unscaled(theory, W, u, acc);
    const Complex pref = gamma(a1) / std::sqrt(kPi);
    t.v3 = pref * r.value;
    t.d3 = pref * r.derivative;
    return t;
}

PointValue osc_recessive_unscaled(const OscillatorTheory& theory, Complex W, double u, const Accuracy& acc) {
    require_point(u);
    if (u == 0.0) throw DomainError("oscillator: the unscaled recessive solution is singular at u = 0");
    const OscKernelParams p = osc_params(theory, W);
    if (p.free_limit) {
        const SolutionTriple t = free_basis(W, u);
        return {t.v3, t.d3};
    }
    const Complex rho = p.rho(u);
    const Complex drho = 2.0 * p.varkappa_sq * u;
    const Complex e = std::exp(-0.5 * rho);
    const Complex psi = tricomi_psi(p.alpha, 0.5, rho, acc);
    const Complex dpsi = tricomi_psi_derivative(p.alpha, 0.5, rho, acc);
    return {e * psi, drho * e * (dpsi - 0.5 * psi)};
}

Complex gamma_tilde_osc_generic(const OscillatorTheory& theory, Complex W) {
    const OscKernelParams p = osc_params(theory, W);
    if (p.free_limit) return -kI * std::sqrt(W) / theory.kappa0;
    if (distance_to_pole(p.alpha + 0.5) < kSpectralTol) {
        std::ostringstream os;
        os.precision(17);
        os << "gamma~ has a pole at W = (" << W.real() << ", " << W.imag() << ")";
        throw SpectralPole(os.str());
    }
    return 2.0 * p.varkappa / theory.kappa0 * gamma_half_ratio(p.alpha);
}

GammaTilde gamma_tilde_osc(const OscillatorTheory& theory, Complex W) {
    GammaTilde out;
    if (theory.lambda == 0.0) {
        out.value = gamma_tilde_osc_generic(theory, W);
        out.spectral_zero = W == 0.0;
        return out;
    }
    if (theory.lambda < 0.0 && W.imag() == 0.0) {
        out.value = inverted_closed_form(theory, W.real());
        return out;
    }
    out.value = gamma_tilde_osc_generic(theory, W);
    out.spectral_zero = distance_to_pole(osc_params(theory, W).alpha) < kSpectralTol;
    return out;
}

Projective gamma_tilde_osc_projective(const OscillatorTheory& theory, double E) {
    if (theory.lambda < 0.0) throw DomainError("oscillator: no real-axis eigenvalue problem for lambda < 0");
    if (theory.lambda == 0.0) {
        if (!(E < 0.0)) throw DomainError("oscillator: lambda = 0 has no eigenvalues at E >= 0");
        return {std::sqrt(-E) / theory.kappa0, 1.0};
    }
    const OscKernelParams p = osc_params(theory, E);
    const double scale = 2.0 * p.varkappa.real() / theory.kappa0;
    if (distance_to_pole(p.alpha + 0.5) < 0.25) return {scale, inverse_gamma_half_ratio(p.alpha).real()};
    return {scale * gamma_half_ratio(p.alpha).real(), 1.0};
}

double gamma_tilde_osc_slope(const OscillatorTheory& theory, double E) {
    if (theory.lambda < 0.0) throw DomainError("oscillator: no real-axis eigenvalue problem for lambda < 0");
    if (theory.lambda == 0.0) {
        if (!(E < 0.0)) throw DomainError("oscillator: lambda = 0 slope needs E < 0");
        return -1.0 / (2.0 * theory.kappa0 * std::sqrt(-E));
    }
    const OscKernelParams p = osc_params(theory, E);
    const double kap = p.varkappa.real();
    return -gamma_half_ratio_derivative(p.alpha).real() / (2.0 * kap * theory.kappa0);
}

double inverse_gamma_tilde_osc_slope(const OscillatorTheory& theory, double E) {
    if (theory.lambda < 0.0) throw DomainError("oscillator: no real-axis eigenvalue problem for lambda < 0");
    if (theory.lambda == 0.0) {
        if (!(E < 0.0)) throw DomainError("oscillator: lambda = 0 slope needs E < 0");
        return theory.kappa0 / (2.0 * std::pow(-E, 1.5));
    }
    const OscKernelParams p = osc_params(theory, E);
    const double kap = p.varkappa.real();
    return -theory.kappa0 * inverse_gamma_half_ratio_derivative(p.alpha).real() / (8.0 * kap * kap * kap);
}

ZetaPair u_zeta_osc(const OscillatorTheory& theory, Complex W, const Extension& zeta, double u, const Accuracy& acc) {
    const SolutionTriple t = osc_basis(theory, W, u, acc);
    const double s = zeta.sin();
    const double c = zeta.cos();
    const double k0 = theory.kappa0;
    return {k0 * t.v1 * s + t.v2 * c, k0 * t.v1 * c - t.v2 * s, k0 * t.d1 * s + t.d2 * c, k0 * t.d1 * c - t.d2 * s};
}

double osc_boundary_form(const OscillatorTheory& theory, const Extension& zeta, double u) {
    return theory.kappa0 * u * zeta.sin() + zeta.cos();
}

}  // namespace dualspec
