#include "dualspec/coulomb.hpp"

#include "dualspec/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dualspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpectralTol = 1e-12;
constexpr double kDegenerateTol = 1e-8;

void require_point(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("coulomb: the coordinate must be finite and > 0");
}

void require_kappa(double kappa0) {
    if (!std::isfinite(kappa0) || !(kappa0 > 0.0)) throw DomainError("coulomb: kappa0 must be positive");
}

SolutionTriple zero_energy_basis(Complex g, double kappa0, double x) {
    const Complex sg = coupling_root(g);
    const double sx = std::sqrt(x);
    const double q = std::pow(x, 0.25);
    const double dq = 0.25 / (q * q * q);  // d/dx x^{1/4}
    const Complex y = 2.0 * sg * sx;
    const Complex dy = sg / sx;
    const double rk = std::sqrt(kappa0);

    // sinh(y)/y and its y-derivative, with a series near y = 0.
    Complex shc, dshc;
    if (std::abs(y) < 1e-4) {
        const Complex y2 = y * y;
        shc = 1.0 + y2 / 6.0 + y2 * y2 / 120.0;
        dshc = y / 3.0 + y2 * y / 30.0;
    } else {
        shc = std::sinh(y) / y;
        dshc = (std::cosh(y) - shc) / y;
    }
    SolutionTriple t;
    // C1 = x^{1/4} sinh(y) / (2 sqrt(kappa0) sqrt(g)) = x^{3/4} shc(y) / sqrt(kappa0)
    const double x34 = q * q * q;
    t.v1 = x34 * shc / rk;
    t.d1 = (0.75 / q * shc + x34 * dshc * dy) / rk;
    t.v2 = q * std::cosh(y);
    t.d2 = dq * std::cosh(y) + q * std::sinh(y) * dy;
    t.v3 = q * std::exp(-y);
    t.d3 = dq * std::exp(-y) - q * std::exp(-y) * dy;
    return t;
}

Complex closed_form_above_threshold(double g, double kappa0, double E) {
    // 4 sqrt2 pi E^{1/4} (e^{-pi w} - i e^{pi w}) / (kappa0^{1/2} |Gamma(alpha)|^2 (e^{2 pi w} + e^{-2 pi w}))
    const double w = -g / (2.0 * std::sqrt(E));
    const Complex alpha(0.25, -w);
    const double log_g = 2.0 * log_gamma(alpha).real();
    const double x = kPi * w;
    const double m = std::abs(x);
    const Complex num(std::exp(-x - m), -std::exp(x - m));
    const double den = std::exp(2.0 * x - 2.0 * m) + std::exp(-2.0 * x - 2.0 * m);
    const double pref = 4.0 * std::sqrt(2.0) * kPi * std::pow(E, 0.25) / std::sqrt(kappa0);
    return pref * std::exp(-log_g - m) * num / den;
}

}  // namespace

CoulombTheory::CoulombTheory(double g_, double kappa0_) : g(g_), kappa0(kappa0_) {
    if (!std::isfinite(g)) throw DomainError("coulomb: g must be finite");
    require_kappa(kappa0);
}

Complex coupling_root(Complex g) {
    if (g.imag() == 0.0 && g.real() < 0.0) return {0.0, -std::sqrt(-g.real())};
    return std::sqrt(g);
}

CoulKernelParams coul_params(Complex g, double kappa0, Complex E) {
    require_kappa(kappa0);
    CoulKernelParams p;
    p.zero_energy = E == 0.0;
    if (p.zero_energy) {
        p.K = 0.0;
        p.alpha = 0.0;
        p.w = 0.0;
        return p;
    }
    if (E.imag() == 0.0 && E.real() > 0.0) {
        p.K = Complex(0.0, -std::sqrt(E.real()));
    } else {
        p.K = std::sqrt(-E);
        if (p.K.real() < 0.0) p.K = -p.K;
    }
    p.w = -g / (2.0 * p.K);
    p.alpha = 0.25 - p.w;
    return p;
}

CoulKernelParams coul_params(const CoulombTheory& theory, Complex E) { return coul_params(theory.g, theory.kappa0, E); }

SolutionTriple coul_basis(Complex g, double kappa0, Complex E, double x, const Accuracy& acc) {
    require_point(x);
    const CoulKernelParams p = coul_params(g, kappa0, E);
    if (p.zero_energy) return zero_energy_basis(g, kappa0, x);

    const Complex z = p.z(x);
    const Complex dz = 2.0 * p.K;
    const Complex e = std::exp(-0.5 * z);
    const Complex a1 = p.alpha + 0.5;
    const double q = std::pow(x, 0.25);
    const double x34 = q * q * q;
    const double rk = std::sqrt(kappa0);

    const Complex f1 = kummer_phi(a1, 1.5, z, acc);
    const Complex g1 = kummer_phi_derivative(a1, 1.5, z, acc);
    const Complex f2 = kummer_phi(p.alpha, 0.5, z, acc);
    const Complex g2 = kummer_phi_derivative(p.alpha, 0.5, z, acc);

    SolutionTriple t;
    t.v1 = x34 * e * f1 / rk;
    t.d1 = (0.75 / q * e * f1 + x34 * dz * e * (g1 - 0.5 * f1)) / rk;
    t.v2 = q * e * f2;
    t.d2 = 0.25 / x34 * e * f2 + q * dz * e * (g2 - 0.5 * f2);

    if (distance_to_pole(a1) < kDegenerateTol) {
        t.third_defined = false;
        return t;
    }
    const Complex k = 2.0 * std::sqrt(2.0 * kappa0 * p.K) * gamma_half_ratio(p.alpha);
    const Complex v3 = t.v2 - k * t.v1;
    if (std::abs(v3) >= 1e-3 * (std::abs(t.v2) + std::abs(k * t.v1))) {
        t.v3 = v3;
        t.d3 = t.d2 - k * t.d1;
        return t;
    }
    const Complex psi = tricomi_psi(p.alpha, 0.5, z, acc);
    const Complex dpsi = tricomi_psi_derivative(p.alpha, 0.5, z, acc);
    const Complex pref = gamma(a1) / std::sqrt(kPi);
    t.v3 = pref * q * e * psi;
    t.d3 = pref * (0.25 / x34 * e * psi + q * dz * e * (dpsi - 0.5 * psi));
    return t;
}

SolutionTriple coul_basis(const CoulombTheory& theory, Complex E, double x, const Accuracy& acc) {
    return coul_basis(theory.g, theory.kappa0, E, x, acc);
}

PointValue coul_recessive_unscaled(const CoulombTheory& theory, Complex E, double x, const Accuracy& acc) {
    require_point(x);
    const CoulKernelParams p = coul_params(theory, E);
    if (p.zero_energy) {
        const SolutionTriple t = zero_energy_basis(theory.g, theory.kappa0, x);
        return {t.v3, t.d3};
    }
    const Complex z = p.z(x);
    const Complex dz = 2.0 * p.K;
    const Complex e = std::exp(-0.5 * z);
    const double q = std::pow(x, 0.25);
    const Complex psi = tricomi_psi(p.alpha, 0.5, z, acc);
    const Complex dpsi = tricomi_psi_derivative(p.alpha, 0.5, z, acc);
    return {q * e * psi, 0.25 / (q * q * q) * e * psi + q * dz * e * (dpsi - 0.5 * psi)};
}

Complex gamma_tilde_coul_generic(Complex g, double kappa0, Complex E) {
    const CoulKernelParams p = coul_params(g, kappa0, E);
    if (p.zero_energy) return 2.0 * coupling_root(g) / std::sqrt(kappa0);
    if (distance_to_pole(p.alpha + 0.5) < kSpectralTol) {
        std::ostringstream os;
        os.precision(17);
        os << "gamma~ has a pole at E = (" << E.real() << ", " << E.imag() << ")";
        throw SpectralPole(os.str());
    }
    return 2.0 * std::sqrt(2.0 * p.K / kappa0) * gamma_half_ratio(p.alpha);
}

GammaTilde gamma_tilde_coul(Complex g, double kappa0, Complex E) {
    GammaTilde out;
    if (E == 0.0) {
        out.value = gamma_tilde_coul_generic(g, kappa0, E);
        out.spectral_zero = g == 0.0;
        return out;
    }
    if (g.imag() == 0.0 && E.imag() == 0.0 && E.real() > 0.0) {
        require_kappa(kappa0);
        out.value = closed_form_above_threshold(g.real(), kappa0, E.real());
        return out;
    }
    out.value = gamma_tilde_coul_generic(g, kappa0, E);
    out.spectral_zero = distance_to_pole(coul_params(g, kappa0, E).alpha) < kSpectralTol;
    return out;
}

GammaTilde gamma_tilde_coul(const CoulombTheory& theory, Complex E) { return gamma_tilde_coul(theory.g, theory.kappa0, E); }

Projective gamma_tilde_coul_projective(const CoulombTheory& theory, double E) {
    if (!(E < 0.0)) throw DomainError("coulomb: the real-axis eigenvalue problem needs E < 0");
    const double K = std::sqrt(-E);
    const double alpha = 0.25 + theory.g / (2.0 * K);
    const double scale = 2.0 * std::sqrt(2.0 * K / theory.kappa0);
    if (distance_to_pole(alpha + 0.5) < 0.25) return {scale, inverse_gamma_half_ratio(alpha).real()};
    return {scale * gamma_half_ratio(alpha).real(), 1.0};
}

double gamma_tilde_coul_slope(const CoulombTheory& theory, double E) {
    if (!(E < 0.0)) throw DomainError("coulomb: the real-axis eigenvalue problem needs E < 0");
    const double K = std::sqrt(-E);
    const double alpha = 0.25 + theory.g / (2.0 * K);
    const double P = 2.0 * std::sqrt(2.0 * K / theory.kappa0);
    const double dP = -std::sqrt(2.0 / theory.kappa0) / (2.0 * std::pow(K, 1.5));
    const double dalpha = theory.g / (4.0 * K * K * K);
    return dP * gamma_half_ratio(alpha).real() + P * gamma_half_ratio_derivative(alpha).real() * dalpha;
}

double inverse_gamma_tilde_coul_slope(const CoulombTheory& theory, double E) {
    if (!(E < 0.0)) throw DomainError("coulomb: the real-axis eigenvalue problem needs E < 0");
    const double K = std::sqrt(-E);
    const double alpha = 0.25 + theory.g / (2.0 * K);
    const double P = 2.0 * std::sqrt(2.0 * K / theory.kappa0);
    const double dP = -std::sqrt(2.0 / theory.kappa0) / (2.0 * std::pow(K, 1.5));
    const double dalpha = theory.g / (4.0 * K * K * K);
    const double inv = inverse_gamma_half_ratio(alpha).real();
    const double dinv = inverse_gamma_half_ratio_derivative(alpha).real();
    return dinv * dalpha / P - inv * dP / (P * P);
}

std::optional<Extension> zeta_g(const CoulombTheory& theory) {
    if (!(theory.g > 0.0)) return std::nullopt;
    return Extension(std::atan(-2.0 * std::sqrt(theory.g / theory.kappa0)));
}

ZetaPair u_zeta_coul(const CoulombTheory& theory, Complex E, const Extension& zeta, double x, const Accuracy& acc) {
    const SolutionTriple t = coul_basis(theory, E, x, acc);
    const double s = zeta.sin();
    const double c = zeta.cos();
    const double k0 = theory.kappa0;
    return {k0 * t.v1 * s + t.v2 * c, k0 * t.v1 * c - t.v2 * s, k0 * t.d1 * s + t.d2 * c, k0 * t.d1 * c - t.d2 * s};
}

AsymptoticLeader asymptotic_leader(const CoulombTheory& theory) { return {1.0, 2.0 * theory.g}; }

double coul_boundary_form(const CoulombTheory& theory, const Extension& zeta, double x) {
    const double q = std::pow(x, 0.25);
    return std::sqrt(theory.kappa0) * q * q * q * zeta.sin() + (q + 2.0 * theory.g * q * q * q * q * q) * zeta.cos();
}

}  // namespace dualspec
