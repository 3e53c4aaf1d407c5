#include "model.hpp"

#include "dualspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dualspec::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
// |zeta - zeta_g| below which the zero-energy atom is present.
constexpr double kAtomAngleTol = 1e-12;

void require_energy(double E) {
    if (!std::isfinite(E)) throw DomainError("spectral: energy must be finite");
}

[[noreturn]] void out_of_support(double E) {
    throw OutOfSupport("spectral: E = " + std::to_string(E) + " lies outside the continuous spectrum");
}

class OscModel final : public HalfLineModel {
public:
    explicit OscModel(const OscillatorTheory& th) : th_(th) {}

    double kappa0() const override { return th_.kappa0; }
    double wronskian() const override { return th_.kappa0; }

    Complex gamma_tilde(Complex E) const override { return gamma_tilde_osc(th_, E).value; }
    Projective projective(double E) const override { return gamma_tilde_osc_projective(th_, E); }
    double slope(double E) const override { return gamma_tilde_osc_slope(th_, E); }
    double inverse_slope(double E) const override { return inverse_gamma_tilde_osc_slope(th_, E); }

    DiscreteRegime regime() const override {
        if (th_.lambda > 0.0) return DiscreteRegime::Tower;
        if (th_.lambda == 0.0) return DiscreteRegime::BelowThreshold;
        return DiscreteRegime::None;
    }
    double pole(int n) const override { return std::sqrt(th_.lambda) * (4.0 * n + 3.0); }
    double zero(int n) const override { return std::sqrt(th_.lambda) * (4.0 * n + 1.0); }
    double threshold() const override { return 0.0; }
    // gamma~ ~ |E|^{1/2} / kappa0 for E -> -inf.
    double left_seed(double target) const override { return -std::pow(th_.kappa0 * target, 2); }

    ContinuumSupport support() const override {
        if (th_.lambda > 0.0) return {SupportKind::Empty};
        if (th_.lambda == 0.0) return {SupportKind::HalfLine};
        return {SupportKind::WholeLine};
    }

    double density(const Extension& zeta, double E) const override {
        require_energy(E);
        const double s = zeta.sin();
        const double c = zeta.cos();
        const double k0 = th_.kappa0;
        if (th_.lambda > 0.0) out_of_support(E);
        if (th_.lambda == 0.0) {
            if (E < 0.0) out_of_support(E);
            const double den = k0 * k0 * s * s + E * c * c;
            if (den == 0.0) return kInf;
            return std::sqrt(E) / (kPi * den);
        }
        const double quarter = std::pow(-th_.lambda, 0.25);
        const double w = E / (4.0 * std::sqrt(-th_.lambda));
        const double L = 2.0 * log_gamma(Complex(0.25, -w)).real();
        return scaled_density(4.0 * quarter / (k0 * k0), L, kPi * w, 4.0 * kPi * quarter * c / k0, s);
    }

    ZetaPair u_zeta(Complex E, const Extension& zeta, double p) const override {
        return u_zeta_osc(th_, E, zeta, p);
    }

    std::optional<PointValue> recessive(Complex E, double p) const override {
        const SolutionTriple t = osc_basis(th_, E, p);
        if (!t.third_defined) return std::nullopt;
        return PointValue{t.v3, t.d3};
    }

    double bound_state(double E, const Extension& zeta, double u) const override {
        const double s = zeta.sin();
        const double c = zeta.cos();
        if (th_.lambda == 0.0) return c * std::exp(-std::sqrt(-E) * u);
        const OscKernelParams p = osc_params(th_, E);
        if (p.rho(u).real() <= 1.0) return u_zeta_osc(th_, E, zeta, u).value.real();
        // U is proportional to the recessive solution; fix the factor from
        // whichever boundary coefficient is the larger.
        const double R = osc_recessive_unscaled(th_, E, u).value.real();
        if (std::abs(c) >= std::abs(s)) return c * gamma(p.alpha + 0.5).real() * R / std::sqrt(kPi);
        return -s * th_.kappa0 * gamma(p.alpha).real() * R / (2.0 * p.varkappa.real() * std::sqrt(kPi));
    }

    bool accepts(double u) const override { return std::isfinite(u) && u >= 0.0; }
    double point_of(double s) const override { return s; }
    double jacobian(double) const override { return 1.0; }

    double cutoff_guess(double E) const override {
        if (th_.lambda == 0.0) return 25.0 / std::sqrt(-E);
        const double root = std::sqrt(th_.lambda);
        const double rho = std::max(E / root, 0.0) + 60.0;
        return std::sqrt(rho / root);
    }

private:
    OscillatorTheory th_;
};

class CoulModel final : public HalfLineModel {
public:
    explicit CoulModel(const CoulombTheory& th) : th_(th), zeta_g_(zeta_g(th)) {}

    double kappa0() const override { return th_.kappa0; }
    double wronskian() const override { return 0.5 * std::sqrt(th_.kappa0); }

    Complex gamma_tilde(Complex E) const override { return gamma_tilde_coul(th_, E).value; }
    Projective projective(double E) const override { return gamma_tilde_coul_projective(th_, E); }
    double slope(double E) const override { return gamma_tilde_coul_slope(th_, E); }
    double inverse_slope(double E) const override { return inverse_gamma_tilde_coul_slope(th_, E); }

    DiscreteRegime regime() const override {
        return th_.g < 0.0 ? DiscreteRegime::Tower : DiscreteRegime::BelowThreshold;
    }
    double pole(int n) const override { return -th_.g * th_.g / std::pow(2.0 * n + 1.5, 2); }
    double zero(int n) const override { return -th_.g * th_.g / std::pow(2.0 * n + 0.5, 2); }
    double threshold() const override { return zeta_g_ ? zeta_g_->zeta() : 0.0; }
    // gamma~ ~ 2^{3/2} kappa0^{-1/2} Gamma(3/4)/Gamma(1/4) |E|^{1/4} for E -> -inf.
    double left_seed(double target) const override {
        const double lead = 2.0 * std::sqrt(2.0 / th_.kappa0) * gamma_half_ratio(0.25).real();
        return -std::pow(target / lead, 4);
    }

    ContinuumSupport support() const override { return {SupportKind::HalfLine}; }

    double density(const Extension& zeta, double E) const override {
        require_energy(E);
        if (E < 0.0) out_of_support(E);
        const double s = zeta.sin();
        const double c = zeta.cos();
        const double g = th_.g;
        const double k0 = th_.kappa0;
        if (E == 0.0) {
            if (g < 0.0) {
                const double a = std::abs(g);
                return 4.0 * std::sqrt(a) / (kPi * (4.0 * a * c * c + k0 * s * s));
            }
            if (g == 0.0 && s == 0.0) return kInf;
            return 0.0;
        }
        const double q = std::pow(E, 0.25);
        const double w = -g / (2.0 * std::sqrt(E));
        const double L = 2.0 * log_gamma(Complex(0.25, -w)).real();
        return scaled_density(8.0 * std::sqrt(2.0) * q, L, kPi * w, 4.0 * std::sqrt(2.0) * kPi * q * c,
                              std::sqrt(k0) * s);
    }

    std::optional<Atom> atom(const Extension& zeta) const override {
        if (!zeta_g_ || std::abs(zeta.zeta() - zeta_g_->zeta()) > kAtomAngleTol) return std::nullopt;
        const double g = th_.g;
        return Atom{0.0, 16.0 * std::pow(g, 1.5) * (1.0 + 4.0 * g / th_.kappa0)};
    }

    ZetaPair u_zeta(Complex E, const Extension& zeta, double p) const override {
        return u_zeta_coul(th_, E, zeta, p);
    }

    std::optional<PointValue> recessive(Complex E, double p) const override {
        const SolutionTriple t = coul_basis(th_, E, p);
        if (!t.third_defined) return std::nullopt;
        return PointValue{t.v3, t.d3};
    }

    double bound_state(double E, const Extension& zeta, double x) const override {
        if (x == 0.0) return 0.0;
        const double s = zeta.sin();
        const double c = zeta.cos();
        const CoulKernelParams p = coul_params(th_, E);
        if (p.z(x).real() <= 1.0) return u_zeta_coul(th_, E, zeta, x).value.real();
        const double R = coul_recessive_unscaled(th_, E, x).value.real();
        if (std::abs(c) >= std::abs(s)) return c * gamma(p.alpha + 0.5).real() * R / std::sqrt(kPi);
        return -s * std::sqrt(th_.kappa0) * gamma(p.alpha).real() * R /
               (2.0 * std::sqrt(2.0 * p.K.real()) * std::sqrt(kPi));
    }

    double zero_energy_state(const Extension& zeta, double x) const override {
        if (x == 0.0) return 0.0;
        return zeta.cos() * std::pow(x, 0.25) * std::exp(-2.0 * std::sqrt(th_.g * x));
    }

    bool accepts(double x) const override { return std::isfinite(x) && x > 0.0; }
    double point_of(double s) const override { return s * s; }
    double jacobian(double s) const override { return 2.0 * s; }

    double cutoff_guess(double E) const override {
        const double K = E < 0.0 ? std::sqrt(-E) : 2.0 * std::sqrt(std::max(th_.g, 1e-300));
        const double turning = E < 0.0 ? std::max(th_.g / E, 0.0) : 0.0;
        return std::sqrt(turning + 30.0 / K);
    }

private:
    CoulombTheory th_;
    std::optional<Extension> zeta_g_;
};

}  // namespace

double HalfLineModel::zero_energy_state(const Extension&, double) const {
    throw NotInSpectrum("spectral: this theory has no zero-energy bound state");
}

std::unique_ptr<HalfLineModel> make_model(const Theory& theory) {
    if (const auto* osc = std::get_if<OscillatorTheory>(&theory)) return std::make_unique<OscModel>(*osc);
    return std::make_unique<CoulModel>(std::get<CoulombTheory>(theory));
}

double scaled_density(double num, double log_gamma_sq, double x, double A, double B) {
    const double a = log_gamma_sq + x;
    const double b = log_gamma_sq - x;
    double S = -kInf;
    if (A != 0.0) S = std::log(std::abs(A));
    if (B != 0.0) S = std::max({S, std::log(std::abs(B)) + a, std::log(std::abs(B)) + b});
    const double first = A * std::exp(-S) + B * std::exp(b - S);
    const double second = B * std::exp(a - S);
    return num * std::exp(a - 2.0 * S) / (first * first + second * second);
}

}  // namespace dualspec::detail
