#include "confluent_detail.hpp"
#include "dualspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dualspec {

namespace detail {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

ConfluentState continue_confluent(Complex a, Complex c, Complex from, ConfluentState start, Complex to,
                                  const Accuracy& acc) {
    const Complex segment = to - from;
    const double length = std::abs(segment);
    if (length == 0.0) return start;
    const Complex dir = segment / length;
    const double a_scale = std::max(1.0, std::abs(a));

    Complex w = start.value;
    Complex dw = start.derivative;
    double pos = 0.0;
    while (pos < length) {
        const Complex z0 = from + dir * pos;
        const double r = std::abs(z0);
        double h = std::min({0.5 * r, 2.0, 2.0 * std::sqrt(r / a_scale), length - pos});
        if (!(h > 0.0)) throw NoConvergence("confluent continuation: path reaches the singular point z = 0");
        // Avoid a sliver of a final step.
        if (length - pos - h < 0.1 * h) h = length - pos;
        const Complex t = dir * h;

        Complex b_prev = w;   // b_k
        Complex b_curr = dw;  // b_{k+1}
        Complex t_pow = t;    // t^{k+1}
        Complex sum = w + dw * t;
        Complex dsum = dw;
        int quiet = 0;
        int k = 0;
        for (; k < acc.max_terms; ++k) {
            const double kk = double(k);
            Complex b_next = (-(kk + 1.0) * (kk + c - z0) * b_curr + (kk + a) * b_prev) /
                             (z0 * (kk + 2.0) * (kk + 1.0));
            Complex dterm = (kk + 2.0) * b_next * t_pow;
            t_pow *= t;
            Complex term = b_next * t_pow;
            sum += term;
            dsum += dterm;
            const double scale = std::abs(sum) + std::abs(dsum) * h;
            if (std::abs(term) + std::abs(dterm) * h <= 0.25 * kEps * scale) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
            b_prev = b_curr;
            b_curr = b_next;
        }
        if (k >= acc.max_terms) throw NoConvergence("confluent continuation: Taylor step did not converge");
        w = sum;
        dw = dsum;
        pos += h;
    }
    return {w, dw};
}

SeriesResult kummer_series(Complex a, Complex c, Complex z, const Accuracy& acc) {
    Complex sum = 1.0;
    Complex term = 1.0;
    double abs_sum = 1.0;
    bool converged = false;
    for (int k = 0; k < acc.max_terms; ++k) {
        const double kk = double(k);
        const Complex ak = a + kk;
        if (ak == 0.0) {  // terminating (polynomial) case
            converged = true;
            break;
        }
        term *= ak / ((c + kk) * (kk + 1.0)) * z;
        sum += term;
        abs_sum += std::abs(term);
        const double next_ratio = std::abs((ak + 1.0) * z / ((c + kk + 1.0) * (kk + 2.0)));
        if (std::abs(term) <= kEps * std::abs(sum) && next_ratio < 0.5) {
            converged = true;
            break;
        }
    }
    const double err = 4.0 * kEps * abs_sum + (converged ? 0.0 : std::abs(term));
    return {sum, err, converged};
}

}  // namespace detail

namespace {

using detail::ConfluentState;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

void check_c(Complex c) {
    if (c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real()))
        throw DomainError("kummer_phi: c must not be a non-positive integer");
}

struct AsymptoticSum {
    Complex value;
    double error;
    bool ok;
};

// Sum_k (p)_k (q)_k / k! x^k, truncated at the smallest term.
AsymptoticSum divergent_sum(Complex p, Complex q, Complex x, int max_terms) {
    Complex sum = 1.0;
    Complex term = 1.0;
    double last = 1.0;
    for (int k = 0; k < max_terms; ++k) {
        const double kk = double(k);
        Complex next = term * (p + kk) * (q + kk) / (kk + 1.0) * x;
        const double mag = std::abs(next);
        if (mag == 0.0) return {sum, 0.0, true};
        if (mag > last && k > 2) return {sum, last, false};
        term = next;
        sum += term;
        last = mag;
        if (mag <= 0.25 * kEps * std::abs(sum)) return {sum, mag, true};
    }
    return {sum, last, false};
}

// Asymptotic expansion of 1F1 for Re z >= 0, |z| large.
AsymptoticSum kummer_asymptotic(Complex a, Complex c, Complex z, const Accuracy& acc) {
    const Complex log_z = std::log(z);
    const Complex inv_z = 1.0 / z;
    Complex value = 0.0;
    double error = 0.0;

    if (distance_to_pole(a) > 1e-14) {
        AsymptoticSum s1 = divergent_sum(c - a, 1.0 - a, inv_z, acc.max_terms);
        Complex pref = std::exp(log_gamma(c) - log_gamma(a) + z + (a - c) * log_z);
        value += pref * s1.value;
        error += std::abs(pref) * s1.error;
    }
    if (distance_to_pole(c - a) > 1e-14) {
        AsymptoticSum s2 = divergent_sum(a, a - c + 1.0, -inv_z, acc.max_terms);
        Complex log_pref = log_gamma(c) - log_gamma(c - a) - a * log_z;
        Complex pref;
        const Complex i_pi_a = Complex(0.0, kPi) * a;
        if (z.imag() > 0.0) {
            pref = std::exp(log_pref + i_pi_a);
        } else if (z.imag() < 0.0) {
            pref = std::exp(log_pref - i_pi_a);
        } else {
            pref = std::exp(log_pref) * cos_pi(a);
        }
        value += pref * s2.value;
        error += std::abs(pref) * s2.error;
    }
    const bool ok = std::isfinite(error) && error <= acc.rel_tol * std::abs(value);
    return {value, error, ok};
}

struct PsiState {
    Complex value;
    Complex derivative;
    bool ok;
};

PsiState psi_asymptotic(Complex a, double c, Complex z, const Accuracy& acc) {
    // U ~ z^{-a} sum_k (a)_k (a-c+1)_k / k! (-z)^{-k}
    const Complex inv = -1.0 / z;
    Complex sum = 1.0;
    Complex dsum = -a;  // coefficient of z^{-a-1}, before the sign of inv^k
    Complex term = 1.0;
    double last = 1.0;
    bool ok = false;
    for (int k = 0; k < acc.max_terms; ++k) {
        const double kk = double(k);
        Complex next = term * (a + kk) * (a - c + 1.0 + kk) / (kk + 1.0) * inv;
        const double mag = std::abs(next);
        if (mag == 0.0) {
            ok = true;
            break;
        }
        if (mag > last && k > 2) break;
        term = next;
        sum += term;
        // d/dz [z^{-a} (-1)^k z^{-k}] = (-a-k) z^{-a-k-1} (-1)^k; inv^k carries (-1)^k z^{-k}.
        dsum += term * (-a - kk - 1.0);
        last = mag;
        if (mag <= 0.25 * kEps * std::abs(sum)) {
            ok = true;
            break;
        }
    }
    if (!ok && last <= acc.rel_tol * std::abs(sum)) ok = true;
    const Complex za = std::exp(-a * std::log(z));
    return {za * sum, za * dsum / z, ok};
}

PsiState psi_connection(Complex a, double c, Complex z, const Accuracy& acc) {
    const Complex A = gamma(Complex(1.0 - c)) * rgamma(a - c + 1.0);
    const Complex B = gamma(Complex(c - 1.0)) * rgamma(a);
    const Complex a2 = a - c + 1.0;
    const Complex c2 = 2.0 - c;
    const Complex zp = std::pow(z, 1.0 - c);
    const Complex f1 = kummer_phi(a, c, z, acc);
    const Complex f2 = kummer_phi(a2, c2, z, acc);
    const Complex t1 = A * f1;
    const Complex t2 = B * zp * f2;
    const Complex value = t1 + t2;
    const bool ok = std::abs(t1) + std::abs(t2) <= 8.0 * std::abs(value);
    if (!ok) return {value, 0.0, false};
    const Complex df1 = kummer_phi_derivative(a, c, z, acc);
    const Complex df2 = kummer_phi_derivative(a2, c2, z, acc);
    const Complex deriv = A * df1 + B * ((1.0 - c) * zp / z * f2 + zp * df2);
    return {value, deriv, true};
}

PsiState psi_state(Complex a, double c, Complex z, const Accuracy& acc) {
    acc.validate();
    if (c != 0.5 && c != 1.5) throw DomainError("tricomi_psi: only c = 1/2 and c = 3/2 are supported");
    if (z == 0.0) throw DomainError("tricomi_psi: z = 0 is a branch point");
    const double r = std::abs(z);
    if (r >= 8.0) {
        PsiState s = psi_asymptotic(a, c, z, acc);
        if (s.ok) return s;
    }
    PsiState conn = psi_connection(a, c, z, acc);
    if (conn.ok) return conn;
    // Integrate inward from a radius where the asymptotic series is accurate;
    // the recessive solution is stable in that direction.
    const Complex dir = z / r;
    double radius = std::max(2.0 * r, 16.0);
    for (int attempt = 0; attempt < 40; ++attempt, radius *= 1.5) {
        const Complex far = dir * radius;
        PsiState s = psi_asymptotic(a, c, far, acc);
        if (!s.ok) continue;
        ConfluentState end = detail::continue_confluent(a, Complex(c), far, {s.value, s.derivative}, z, acc);
        return {end.value, end.derivative, true};
    }
    throw NoConvergence("tricomi_psi: asymptotic region not reached");
}

}  // namespace

Complex kummer_phi(Complex a, Complex c, Complex z, const Accuracy& acc) {
    acc.validate();
    check_c(c);
    if (z.real() < 0.0) return std::exp(z) * kummer_phi(c - a, c, -z, acc);

    detail::SeriesResult direct = detail::kummer_series(a, c, z, acc);
    if (direct.converged && direct.error <= acc.rel_tol * std::abs(direct.value)) return direct.value;

    const double r = std::abs(z);
    if (r >= 10.0) {
        AsymptoticSum asym = kummer_asymptotic(a, c, z, acc);
        if (asym.ok) return asym.value;
    }

    // Taylor continuation along the ray from a radius where the series is benign.
    const Complex dir = z / r;
    const double r0 = std::min({r, 2.0, 2.0 / std::max(1.0, std::abs(a) + std::abs(c))});
    const Complex z0 = dir * r0;
    detail::SeriesResult v0 = detail::kummer_series(a, c, z0, acc);
    detail::SeriesResult d0 = detail::kummer_series(a + 1.0, c + 1.0, z0, acc);
    if (!v0.converged || !d0.converged) throw NoConvergence("kummer_phi: start series did not converge");
    ConfluentState start{v0.value, a / c * d0.value};
    return detail::continue_confluent(a, c, z0, start, z, acc).value;
}

Complex kummer_phi_derivative(Complex a, Complex c, Complex z, const Accuracy& acc) {
    check_c(c);
    return a / c * kummer_phi(a + 1.0, c + 1.0, z, acc);
}

Complex tricomi_psi(Complex a, double c, Complex z, const Accuracy& acc) { return psi_state(a, c, z, acc).value; }

Complex tricomi_psi_derivative(Complex a, double c, Complex z, const Accuracy& acc) {
    return psi_state(a, c, z, acc).derivative;
}

}  // namespace dualspec
