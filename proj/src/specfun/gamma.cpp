#include "dualspec/errors.hpp"
#include "dualspec/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace dualspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

// Godfrey's Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

// Bernoulli numbers B_2 .. B_20.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,    -1.0 / 30.0,      1.0 / 42.0,  -1.0 / 30.0,   5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0,
};

// Beyond this modulus the ratio Gamma(a+1/2)/Gamma(a) uses its asymptotic series.
constexpr double kRatioAsymptotic = 10.0;

[[noreturn]] void throw_pole(const char* where, Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << where << ": pole at z = (" << z.real() << ", " << z.imag() << ")";
    throw PoleError(os.str());
}

double reduce_to_half(double r) {
    // r in [-1, 1]; fold onto [-1/2, 1/2] using sin(pi(1-r)) = sin(pi r).
    if (r > 0.5) return 1.0 - r;
    if (r < -0.5) return -1.0 - r;
    return r;
}

Complex lanczos_log_gamma(Complex z) {
    // Re z >= 1/2.
    Complex zm = z - 1.0;
    Complex sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (zm + double(k));
    Complex t = zm + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z), stable for large |Im z|; the branch is irrelevant to callers.
Complex log_sin_pi(Complex z) {
    double xr = std::remainder(z.real(), 2.0);
    Complex zr(xr, z.imag());
    if (std::abs(z.imag()) < 20.0) return std::log(sin_pi(zr));
    const Complex i(0.0, 1.0);
    if (z.imag() > 0.0) {
        Complex q = std::exp(2.0 * kPi * i * zr);
        return -i * kPi * zr + std::log((q - 1.0) / (2.0 * i));
    }
    Complex q = std::exp(-2.0 * kPi * i * zr);
    return i * kPi * zr + std::log((1.0 - q) / (2.0 * i));
}

Complex tan_pi(Complex z) {
    if (z.imag() > 20.0) return Complex(0.0, 1.0);
    if (z.imag() < -20.0) return Complex(0.0, -1.0);
    return sin_pi(z) / cos_pi(z);
}

Complex cot_pi(Complex z) {
    if (z.imag() > 20.0) return Complex(0.0, -1.0);
    if (z.imag() < -20.0) return Complex(0.0, 1.0);
    return cos_pi(z) / sin_pi(z);
}

// log of Gamma(a+1/2)/Gamma(a) for |a| large and |arg a| <= 3pi/4.
Complex log_ratio_asymptotic(Complex a) {
    Complex inv = 1.0 / a;
    Complex inv2 = inv * inv;
    Complex power = inv;
    Complex sum = 0.5 * std::log(a);
    for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
        double jj = double(j);
        double coef = (std::ldexp(1.0, 1 - 2 * int(j)) - 2.0) * kBernoulli[j - 1] /
                      (2.0 * jj * (2.0 * jj - 1.0));
        Complex term = coef * power;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        power *= inv2;
    }
    return sum;
}

bool ratio_asymptotic_ok(Complex a) { return a.real() >= -std::abs(a.imag()); }

}  // namespace

void Accuracy::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) throw DomainError("accuracy: rel_tol must lie in (0, 1e-6]");
    if (max_terms < 100) throw DomainError("accuracy: max_terms must be at least 100");
}

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    return std::sin(kPi * reduce_to_half(std::remainder(x, 2.0)));
}

double cos_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::abs(std::remainder(x, 2.0));
    return sin_pi(0.5 - r);
}

Complex sin_pi(Complex z) {
    double y = kPi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
    double y = kPi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

double distance_to_pole(Complex z) {
    if (z.real() > 0.5) return std::numeric_limits<double>::infinity();
    double n = std::min(0.0, std::round(z.real()));
    return std::abs(z - n);
}

Complex log_gamma(Complex z) {
    if (distance_to_pole(z) < kPoleTol) throw_pole("log_gamma", z);
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) {
    if (distance_to_pole(z) < kPoleTol) throw_pole("gamma", z);
    if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
    if (std::abs(z.imag()) < 20.0) return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
    return std::exp(log_gamma(z));
}

Complex rgamma(Complex z) {
    if (z.real() >= 0.5) return std::exp(-lanczos_log_gamma(z));
    if (std::abs(z.imag()) < 20.0) return sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)) / kPi;
    return std::exp(log_sin_pi(z) + lanczos_log_gamma(1.0 - z) - std::log(kPi));
}

Complex digamma(Complex z) {
    if (distance_to_pole(z) < kPoleTol) throw_pole("digamma", z);
    if (z.real() < 0.5) return digamma(1.0 - z) - kPi * cot_pi(z);
    Complex shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    Complex inv = 1.0 / z;
    Complex inv2 = inv * inv;
    Complex power = inv2;
    Complex sum = std::log(z) - 0.5 * inv;
    for (std::size_t k = 1; k <= 8; ++k) {
        sum -= kBernoulli[k - 1] / (2.0 * double(k)) * power;
        power *= inv2;
    }
    return sum + shift;
}

Complex rgamma_derivative(Complex z) {
    if (z.real() >= 0.5) return -digamma(z) * rgamma(z);
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
    Complex g1 = gamma(1.0 - z);
    return g1 * (cos_pi(z) - sin_pi(z) * digamma(1.0 - z) / kPi);
}

Complex gamma_half_ratio(Complex a) {
    if (distance_to_pole(a + 0.5) < kPoleTol) throw_pole("gamma_half_ratio", a + 0.5);
    if (std::abs(a) < kRatioAsymptotic) return gamma(a + 0.5) * rgamma(a);
    if (ratio_asymptotic_ok(a)) return std::exp(log_ratio_asymptotic(a));
    // Gamma(a+1/2)/Gamma(a) = tan(pi a) Gamma(1-a)/Gamma(1/2-a)
    return tan_pi(a) * std::exp(log_ratio_asymptotic(0.5 - a));
}

Complex inverse_gamma_half_ratio(Complex a) {
    if (distance_to_pole(a) < kPoleTol) throw_pole("inverse_gamma_half_ratio", a);
    if (std::abs(a) < kRatioAsymptotic) return gamma(a) * rgamma(a + 0.5);
    if (ratio_asymptotic_ok(a)) return std::exp(-log_ratio_asymptotic(a));
    return cot_pi(a) * std::exp(-log_ratio_asymptotic(0.5 - a));
}

Complex gamma_half_ratio_derivative(Complex a) {
    if (distance_to_pole(a + 0.5) < kPoleTol) throw_pole("gamma_half_ratio_derivative", a + 0.5);
    if (distance_to_pole(a) < 0.25) {
        // Near a zero of the ratio: differentiate Gamma(a+1/2) * rgamma(a) directly.
        Complex gh = gamma(a + 0.5);
        return gh * (digamma(a + 0.5) * rgamma(a) + rgamma_derivative(a));
    }
    return gamma_half_ratio(a) * (digamma(a + 0.5) - digamma(a));
}

Complex inverse_gamma_half_ratio_derivative(Complex a) {
    if (distance_to_pole(a) < kPoleTol) throw_pole("inverse_gamma_half_ratio_derivative", a);
    if (distance_to_pole(a + 0.5) < 0.25) {
        Complex ga = gamma(a);
        return ga * (digamma(a) * rgamma(a + 0.5) + rgamma_derivative(a + 0.5));
    }
    return inverse_gamma_half_ratio(a) * (digamma(a) - digamma(a + 0.5));
}

}  // namespace dualspec
