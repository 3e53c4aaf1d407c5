#include "model.hpp"

#include "dualspec/errors.hpp"

#include <cmath>
#include <sstream>

namespace dualspec {

namespace {

using detail::HalfLineModel;

constexpr int kMaxBisections = 2000;
constexpr int kMaxSeedExpansions = 400;

// Sign of a function that decreases from +inf to -inf across each bracket and
// vanishes exactly at the eigenvalues. For zeta = pi/2 the reciprocal 1/gamma~
// (which increases) is negated so the same convention holds.
class Condition {
public:
    Condition(const HalfLineModel& m, const Extension& zeta) : m_(m), half_pi_(zeta.is_half_pi()) {
        if (!half_pi_) t_ = zeta.tan();
    }

    int sign(double E) const {
        const Projective p = m_.projective(E);
        if (half_pi_) return -sgn(p.den) * sgn(p.num);
        return sgn(p.num + t_ * p.den) * sgn(p.den);
    }

    // One Newton step on the smooth form of the condition, or nullopt.
    std::optional<double> newton(double E) const {
        const Projective p = m_.projective(E);
        if (!half_pi_ && std::abs(t_) <= 1.0) {
            if (p.den == 0.0) return std::nullopt;
            const double f = p.num / p.den + t_;
            return E - f / m_.slope(E);
        }
        if (p.num == 0.0) return std::nullopt;
        const double cot = half_pi_ ? 0.0 : 1.0 / t_;
        const double h = p.den / p.num + cot;
        return E - h / m_.inverse_slope(E);
    }

    double residual(double E) const {
        const Projective p = m_.projective(E);
        if (!half_pi_ && std::abs(t_) <= 1.0) return std::abs(p.num / p.den + t_);
        const double cot = half_pi_ ? 0.0 : 1.0 / t_;
        return std::abs(p.den / p.num + cot);
    }

private:
    static int sgn(double v) { return (v > 0.0) - (v < 0.0); }

    const HalfLineModel& m_;
    bool half_pi_;
    double t_ = 0.0;
};

[[noreturn]] void bracket_failure(double lo, double hi, const std::string& why) {
    std::ostringstream os;
    os.precision(17);
    os << "spectral: no sign change on (" << lo << ", " << hi << "): " << why;
    throw BracketFailure(os.str());
}

// Finite left edge for a bracket that is open towards -inf.
double seed_left(const HalfLineModel& m, const Condition& cond, const Extension& zeta, double hi) {
    const double target = zeta.is_half_pi() ? 1.0 : std::max(1.0, 2.0 * std::abs(zeta.tan()));
    double lo = std::min(m.left_seed(target), hi - 1.0);
    for (int k = 0; k < kMaxSeedExpansions; ++k) {
        if (cond.sign(lo) > 0) return lo;
        lo = 4.0 * lo - 1.0;
    }
    bracket_failure(lo, hi, "left edge did not reach the asymptotic region");
}

double solve_bracket(const Condition& cond, double lo, double hi, double tol) {
    for (int k = 0; k < kMaxBisections; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const int sg = cond.sign(mid);
        if (sg == 0) return mid;
        if (sg > 0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= tol * std::max(std::abs(lo), std::abs(hi))) break;
    }
    const double mid = 0.5 * (lo + hi);
    // Safeguarded polish: keep the Newton step only inside the final bracket
    // and only when it reduces the residual.
    if (const auto step = cond.newton(mid)) {
        if (*step >= lo && *step <= hi && std::isfinite(*step) && cond.residual(*step) <= cond.residual(mid))
            return *step;
    }
    return mid;
}

double weight_at(const HalfLineModel& m, const Extension& zeta, double E) {
    const double scale = 1.0 / m.wronskian();
    const double s = zeta.sin();
    const double c = zeta.cos();
    if (std::abs(s) <= std::abs(c)) return -scale / (c * c * m.slope(E));
    return scale / (s * s * m.inverse_slope(E));
}

[[noreturn]] void no_discrete(const std::string& why) { throw NotDiscreteRegime("spectral: " + why); }

}  // namespace

std::string theory_name(const Theory& theory) {
    return std::holds_alternative<OscillatorTheory>(theory) ? "oscillator" : "coulomb";
}

double theory_kappa0(const Theory& theory) {
    return std::visit([](const auto& th) { return th.kappa0; }, theory);
}

DiscreteRegime discrete_regime(const Theory& theory) { return detail::make_model(theory)->regime(); }

double threshold_angle(const Theory& theory) {
    const auto m = detail::make_model(theory);
    if (m->regime() != DiscreteRegime::BelowThreshold) no_discrete("no threshold angle outside the single-level regime");
    return m->threshold();
}

double tower_pole(const Theory& theory, int n) {
    const auto m = detail::make_model(theory);
    if (m->regime() != DiscreteRegime::Tower || n < 0) no_discrete("tower poles need a tower regime and n >= 0");
    return m->pole(n);
}

double tower_zero(const Theory& theory, int n) {
    const auto m = detail::make_model(theory);
    if (m->regime() != DiscreteRegime::Tower || n < 0) no_discrete("tower zeros need a tower regime and n >= 0");
    return m->zero(n);
}

std::vector<Level> discrete_levels(const Theory& theory, const Extension& zeta, int n_max, double tol) {
    if (n_max < 0) throw DomainError("spectral: n_max must be >= 0");
    if (!(tol > 0.0) || !(tol < 1e-3)) throw DomainError("spectral: tolerance must lie in (0, 1e-3)");
    const auto m = detail::make_model(theory);
    const Condition cond(*m, zeta);
    std::vector<Level> out;

    switch (m->regime()) {
    case DiscreteRegime::None:
        no_discrete("the inverted oscillator has a purely continuous spectrum");
    case DiscreteRegime::BelowThreshold: {
        if (zeta.is_half_pi() || !(zeta.zeta() < m->threshold()))
            no_discrete("no level below threshold for this extension angle");
        const double lo = seed_left(*m, cond, zeta, 0.0);
        const double E = solve_bracket(cond, lo, 0.0, tol);
        out.push_back({0, E, weight_at(*m, zeta, E)});
        return out;
    }
    case DiscreteRegime::Tower:
        break;
    }

    out.reserve(std::size_t(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        double lo;
        double hi;
        if (zeta.is_half_pi()) {
            lo = m->zero(n);
            hi = m->zero(n + 1);
        } else {
            hi = m->pole(n);
            lo = n == 0 ? seed_left(*m, cond, zeta, hi) : m->pole(n - 1);
        }
        const double E = solve_bracket(cond, lo, hi, tol);
        out.push_back({n, E, weight_at(*m, zeta, E)});
    }
    return out;
}

double eigen_residual(const Theory& theory, const Extension& zeta, double E) {
    if (!std::isfinite(E)) throw DomainError("spectral: energy must be finite");
    const auto m = detail::make_model(theory);
    const bool real_axis = m->regime() == DiscreteRegime::Tower ? !(std::holds_alternative<CoulombTheory>(theory) && E >= 0.0)
                                                                 : (m->regime() == DiscreteRegime::BelowThreshold && E < 0.0);
    if (real_axis) return Condition(*m, zeta).residual(E);
    const Complex gt = m->gamma_tilde(E);
    if (zeta.is_half_pi()) return std::abs(1.0 / gt);
    const double t = zeta.tan();
    if (std::abs(t) <= 1.0) return std::abs(gt + t);
    return std::abs(1.0 / gt + 1.0 / t);
}

}  // namespace dualspec
