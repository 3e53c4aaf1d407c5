#pragma once

#include <complex>

namespace dualspec {

using Complex = std::complex<double>;

// Target accuracy for the confluent hypergeometric evaluators.
struct Accuracy {
    double rel_tol = 1e-13;
    int max_terms = 4000;

    // Throws DomainError unless 0 < rel_tol <= 1e-6 and max_terms >= 100.
    void validate() const;
};

// sin(pi x) and cos(pi x) with exact zeros at (half-)integers.
double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// Distance from z to the nearest non-positive integer (infinity when Re z > 1/2).
double distance_to_pole(Complex z);

Complex log_gamma(Complex z);  // principal-ish branch; only exp() of it is used
Complex gamma(Complex z);      // PoleError at non-positive integers
Complex rgamma(Complex z);     // 1/Gamma, entire
Complex rgamma_derivative(Complex z);
Complex digamma(Complex z);    // PoleError at non-positive integers

// The ratio Gamma(a + 1/2) / Gamma(a) that controls every boundary-value
// function in this library, together with its reciprocal and derivatives.
// Large |a| is handled by a Stirling-type expansion and reflection.
Complex gamma_half_ratio(Complex a);                    // PoleError when a + 1/2 hits a pole
Complex inverse_gamma_half_ratio(Complex a);            // PoleError when a hits a pole
Complex gamma_half_ratio_derivative(Complex a);         // d/da of the ratio
Complex inverse_gamma_half_ratio_derivative(Complex a); // d/da of the reciprocal

// Kummer's function 1F1(a; c; z).
Complex kummer_phi(Complex a, Complex c, Complex z, const Accuracy& acc = {});
// d/dz 1F1(a; c; z) = (a/c) 1F1(a+1; c+1; z)
Complex kummer_phi_derivative(Complex a, Complex c, Complex z, const Accuracy& acc = {});

// Tricomi's function U(a, c, z) for c in {1/2, 3/2}, principal branch.
Complex tricomi_psi(Complex a, double c, Complex z, const Accuracy& acc = {});
// d/dz U(a, c, z).
Complex tricomi_psi_derivative(Complex a, double c, Complex z, const Accuracy& acc = {});

}  // namespace dualspec
