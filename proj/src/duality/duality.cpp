#include "dualspec/duality.hpp"

#include "dualspec/errors.hpp"
#include "dualspec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace dualspec {

namespace {

// A point counts as non-spectral when the eigenvalue residual is at least this.
constexpr double kNonSpectralFloor = 1e-2;

void require_kappa(double kappa0) {
    if (!std::isfinite(kappa0) || !(kappa0 > 0.0)) throw DomainError("duality: kappa0 must be positive");
}

double relative(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// nullopt marks an infinite value (a pole of gamma~ or of the ratio).
template <class F>
std::optional<Complex> finite_or_pole(F&& f) {
    try {
        return f();
    } catch (const SpectralPole&) {
        return std::nullopt;
    } catch (const PoleError&) {
        return std::nullopt;
    }
}

IdentityCheck compare(std::string name, std::optional<Complex> osc, std::optional<Complex> coul, Complex factor = 1.0) {
    IdentityCheck c{std::move(name), osc.value_or(Complex(INFINITY, 0.0)), coul.value_or(Complex(INFINITY, 0.0)), 0.0};
    if (!osc && !coul) return c;
    if (!osc || !coul) {
        c.residual = INFINITY;
        return c;
    }
    c.residual = relative(*osc * factor, *coul);
    return c;
}

std::optional<Complex> omega_of(std::optional<Complex> gt, const Extension& zeta, double wronskian) {
    const double s = zeta.sin();
    const double c = zeta.cos();
    const Complex omega = gt ? s + *gt * c : Complex(c);
    const Complex omega_tilde = gt ? c - *gt * s : Complex(-s);
    if (omega == 0.0) return std::nullopt;
    return omega_tilde / (wronskian * omega);
}

std::string describe(const CorrespondenceEntry& e) {
    std::ostringstream os;
    os.precision(17);
    os << e.direction << " W=" << e.osc.energy.real() << " lambda=" << e.osc.lambda.real()
       << " E_C=" << e.coulomb.energy.real() << " g=" << e.coulomb.g.real() << " source=" << spectral_class_name(e.source_class)
       << " image=" << spectral_class_name(e.image_class) << " residual=" << e.residual;
    return os.str();
}

bool is_level(const Theory& theory, const Extension& zeta, double E, double tol) {
    return eigen_residual(theory, zeta, E) <= tol;
}

void finish(CorrespondenceReport& r) {
    r.worst_residual = 0.0;
    r.mismatches = 0;
    for (const CorrespondenceEntry& e : r.entries) {
        if (!e.ok) ++r.mismatches;
        if (e.source_class != SpectralClass::NonSpectral) r.worst_residual = std::max(r.worst_residual, e.residual);
    }
    r.passed = r.mismatches == 0;
}

void tower_case(CorrespondenceReport& r, const Extension& zeta, int n_max) {
    const OscillatorTheory osc(r.lambda, r.kappa0);
    const std::vector<Level> levels = discrete_levels(osc, zeta, n_max);

    for (const Level& lv : levels) {
        // Forward: the image must solve the Coulomb eigenvalue equation.
        CorrespondenceEntry f;
        f.direction = "osc->coulomb";
        f.osc = {lv.energy, r.lambda};
        f.coulomb = map_osc_to_coulomb(lv.energy, r.lambda, r.kappa0, r.perturb);
        f.source_class = SpectralClass::Discrete;
        const CoulombTheory image(f.coulomb.g.real(), r.kappa0);
        f.residual = eigen_residual(image, zeta, f.coulomb.energy.real());
        f.image_class = f.residual <= r.tol ? SpectralClass::Discrete : SpectralClass::NonSpectral;
        f.ok = f.image_class == SpectralClass::Discrete;
        r.entries.push_back(f);

        // Reverse: solve the Coulomb problem at the image coupling, take its
        // level of the same index and map it back.
        CorrespondenceEntry b;
        b.direction = "coulomb->osc";
        b.source_class = SpectralClass::Discrete;
        const CoulombTheory coul(-lv.energy / (4.0 * r.kappa0), r.kappa0);
        std::vector<Level> cl;
        try {
            cl = discrete_levels(coul, zeta, lv.index);
        } catch (const NotDiscreteRegime&) {
        }
        if (std::size_t(lv.index) >= cl.size()) {
            b.coulomb = {Complex(r.lambda / (-4.0 * r.kappa0 * r.kappa0)), coul.g};
            b.osc = {lv.energy, r.lambda};
            b.residual = INFINITY;
            b.source_class = SpectralClass::NonSpectral;
            b.image_class = SpectralClass::Discrete;
            b.ok = false;
            r.entries.push_back(b);
            continue;
        }
        b.coulomb = {cl[std::size_t(lv.index)].energy, coul.g};
        b.osc = map_coulomb_to_osc(b.coulomb.energy, b.coulomb.g, r.kappa0, r.perturb);
        const OscillatorTheory back(b.osc.lambda.real(), r.kappa0);
        b.residual = std::max(eigen_residual(back, zeta, b.osc.energy.real()),
                              std::abs(b.osc.lambda.real() - r.lambda) / std::max(1.0, std::abs(r.lambda)));
        b.image_class = b.residual <= r.tol ? SpectralClass::Discrete : SpectralClass::NonSpectral;
        b.ok = b.image_class == SpectralClass::Discrete;
        r.entries.push_back(b);
    }

    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        const double mid = 0.5 * (levels[k].energy + levels[k + 1].energy);
        CorrespondenceEntry m;
        m.direction = "osc->coulomb";
        m.osc = {mid, r.lambda};
        m.coulomb = map_osc_to_coulomb(mid, r.lambda, r.kappa0, r.perturb);
        const double source = eigen_residual(osc, zeta, mid);
        m.source_class = source >= kNonSpectralFloor ? SpectralClass::NonSpectral : SpectralClass::Discrete;
        const CoulombTheory image(m.coulomb.g.real(), r.kappa0);
        m.residual = eigen_residual(image, zeta, m.coulomb.energy.real());
        m.image_class = m.residual >= kNonSpectralFloor ? SpectralClass::NonSpectral : SpectralClass::Discrete;
        m.ok = m.source_class == SpectralClass::NonSpectral && m.image_class == SpectralClass::NonSpectral;
        r.entries.push_back(m);
    }
}

void inverted_case(CorrespondenceReport& r, const Extension& zeta, std::span<const double> samples) {
    const OscillatorTheory osc(r.lambda, r.kappa0);
    const double expected = 2.0 * std::sqrt(r.kappa0);
    for (double E : samples) {
        for (int dir = 0; dir < 2; ++dir) {
            CorrespondenceEntry e;
            e.source_class = SpectralClass::Continuum;
            double rho_osc;
            double rho_coul;
            if (dir == 0) {
                e.direction = "osc->coulomb";
                e.osc = {E, r.lambda};
                e.coulomb = map_osc_to_coulomb(E, r.lambda, r.kappa0, r.perturb);
                rho_osc = continuous_density(osc, zeta, E);
                rho_coul = continuous_density(CoulombTheory(e.coulomb.g.real(), r.kappa0), zeta, e.coulomb.energy.real());
            } else {
                e.direction = "coulomb->osc";
                e.coulomb = {r.lambda / (-4.0 * r.kappa0 * r.kappa0), -E / (4.0 * r.kappa0)};
                e.osc = map_coulomb_to_osc(e.coulomb.energy, e.coulomb.g, r.kappa0, r.perturb);
                rho_coul = continuous_density(CoulombTheory(e.coulomb.g.real(), r.kappa0), zeta, e.coulomb.energy.real());
                rho_osc = continuous_density(OscillatorTheory(e.osc.lambda.real(), r.kappa0), zeta, e.osc.energy.real());
            }
            e.image_class = rho_osc > 0.0 && rho_coul > 0.0 ? SpectralClass::Continuum : SpectralClass::NonSpectral;
            e.residual = std::abs(rho_coul / (expected * rho_osc) - 1.0);
            e.ok = e.image_class == SpectralClass::Continuum && e.residual <= r.tol;
            r.entries.push_back(e);
        }
    }
}

void free_case(CorrespondenceReport& r, const Extension& zeta, std::span<const double> samples) {
    const OscillatorTheory osc(0.0, r.kappa0);
    std::vector<Level> levels;
    try {
        levels = discrete_levels(osc, zeta, 0);
    } catch (const NotDiscreteRegime&) {
    }
    for (const Level& lv : levels) {
        CorrespondenceEntry e;
        e.direction = "osc->coulomb";
        e.osc = {lv.energy, 0.0};
        e.coulomb = map_osc_to_coulomb(lv.energy, 0.0, r.kappa0, r.perturb);
        e.source_class = SpectralClass::Discrete;
        const CoulombTheory image(e.coulomb.g.real(), r.kappa0);
        e.residual = eigen_residual(image, zeta, 0.0);
        const bool atom = zero_energy_atom(image, zeta).has_value();
        e.image_class = atom && e.residual <= r.tol ? SpectralClass::Discrete : SpectralClass::NonSpectral;
        e.ok = e.image_class == SpectralClass::Discrete;
        r.entries.push_back(e);
    }
    const double expected = 2.0 * std::sqrt(r.kappa0);
    for (double W : samples) {
        CorrespondenceEntry e;
        e.direction = "osc->coulomb";
        e.osc = {W, 0.0};
        e.coulomb = map_osc_to_coulomb(W, 0.0, r.kappa0, r.perturb);
        const CoulombTheory image(e.coulomb.g.real(), r.kappa0);
        if (W > 0.0) {
            e.source_class = SpectralClass::Continuum;
            const double rho_osc = continuous_density(osc, zeta, W);
            const double rho_coul = continuous_density(image, zeta, 0.0);
            e.image_class = rho_coul > 0.0 ? SpectralClass::Continuum : SpectralClass::NonSpectral;
            e.residual = std::abs(rho_coul / (expected * rho_osc) - 1.0);
            e.ok = e.image_class == SpectralClass::Continuum && e.residual <= r.tol;
        } else {
            // Negative W off the level carries no weight; neither may the image.
            if (!levels.empty() && is_level(osc, zeta, W, kNonSpectralFloor)) continue;
            e.source_class = SpectralClass::NonSpectral;
            const double rho_coul = W == 0.0 ? 0.0 : continuous_density(image, zeta, 0.0);
            const bool atom = zero_energy_atom(image, zeta).has_value();
            e.residual = rho_coul;
            e.image_class = rho_coul > 0.0 || atom ? SpectralClass::Continuum : SpectralClass::NonSpectral;
            e.ok = e.image_class == SpectralClass::NonSpectral;
        }
        r.entries.push_back(e);
    }
}

}  // namespace

CoulombPoint map_osc_to_coulomb(Complex W, Complex lambda, double kappa0, double perturb) {
    require_kappa(kappa0);
    return {-lambda / (4.0 * kappa0 * kappa0), -(1.0 + perturb) * W / (4.0 * kappa0)};
}

OscPoint map_coulomb_to_osc(Complex E, Complex g, double kappa0, double perturb) {
    require_kappa(kappa0);
    return {-4.0 * kappa0 * (1.0 + perturb) * g, -4.0 * kappa0 * kappa0 * E};
}

std::vector<IdentityCheck> check_parameter_identities(Complex W, double lambda, double kappa0, const Extension& zeta,
                                                      double tol) {
    require_kappa(kappa0);
    if (!std::isfinite(W.real()) || !std::isfinite(W.imag()) || W.imag() < 0.0)
        throw DomainError("duality: W must be finite with Im W >= 0");
    if (!(tol > 0.0)) throw DomainError("duality: tolerance must be positive");

    const OscillatorTheory osc(lambda, kappa0);
    const CoulombPoint img = map_osc_to_coulomb(W, lambda, kappa0);
    std::vector<IdentityCheck> out;

    if (lambda != 0.0) {
        const OscKernelParams po = osc_params(osc, W);
        const CoulKernelParams pc = coul_params(img.g, kappa0, img.energy);
        out.push_back(compare("alpha", po.alpha, pc.alpha));
        out.push_back(compare("w", po.w, pc.w));
        out.push_back(compare("K", po.varkappa_sq / (2.0 * kappa0), pc.K));
        out.push_back(compare("gamma_ratio", finite_or_pole([&] { return gamma_half_ratio(po.alpha); }),
                              finite_or_pole([&] { return gamma_half_ratio(pc.alpha); })));
    }
    const auto gt_osc = finite_or_pole([&] { return gamma_tilde_osc(osc, W).value; });
    const auto gt_coul = finite_or_pole([&] { return gamma_tilde_coul(img.g, kappa0, img.energy).value; });
    out.push_back(compare("gamma_tilde", gt_osc, gt_coul));
    out.push_back(compare("omega", omega_of(gt_osc, zeta, kappa0), omega_of(gt_coul, zeta, 0.5 * std::sqrt(kappa0)),
                          2.0 * std::sqrt(kappa0)));

    for (const IdentityCheck& c : out) {
        if (!(c.residual <= tol)) {
            std::ostringstream os;
            os.precision(17);
            os << "duality: identity '" << c.name << "' violated, residual " << c.residual;
            throw IdentityViolation(os.str());
        }
    }
    return out;
}

double continuum_transport_ratio(double kappa0) {
    require_kappa(kappa0);
    return std::sqrt(2.0) * std::pow(kappa0, 0.25);
}

double discrete_transport_ratio(double lambda, double kappa0, const Extension& zeta, int n) {
    const OscillatorTheory osc(lambda, kappa0);
    const std::vector<Level> lo = discrete_levels(osc, zeta, n);
    if (std::size_t(n) >= lo.size()) throw NotInSpectrum("duality: no oscillator level with this index");
    const double E = lo[std::size_t(n)].energy;
    const CoulombTheory coul(-E / (4.0 * kappa0), kappa0);
    const std::vector<Level> lc = discrete_levels(coul, zeta, n);
    if (std::size_t(n) >= lc.size()) throw NotInSpectrum("duality: the dual Coulomb level is missing");
    return std::sqrt(lc[std::size_t(n)].weight / lo[std::size_t(n)].weight);
}

TransportedState transport_eigenfunction(std::span<const double> u, std::span<const double> osc_values,
                                         double kappa0, double ratio) {
    require_kappa(kappa0);
    if (u.size() != osc_values.size()) throw GridError("transport: grid and values differ in length");
    for (double p : u) {
        if (!(p > 0.0) || !std::isfinite(p)) throw GridError("transport: grid nodes must be finite and > 0");
    }
    TransportedState out{std::vector<double>(u.size()), std::vector<double>(u.size())};
    kernels::transport_map(u, osc_values, kappa0, ratio, out.x, out.values);
    return out;
}

std::string spectral_class_name(SpectralClass c) {
    switch (c) {
    case SpectralClass::Discrete: return "discrete";
    case SpectralClass::Continuum: return "continuum";
    case SpectralClass::NonSpectral: return "non_spectral";
    }
    return "unknown";
}

CorrespondenceReport verify_spectrum_correspondence(double lambda, const Extension& zeta, int n_max,
                                                    std::span<const double> e_samples, double tol, double kappa0,
                                                    double perturb) {
    require_kappa(kappa0);
    if (!std::isfinite(lambda)) throw DomainError("duality: lambda must be finite");
    if (!(tol > 0.0)) throw DomainError("duality: tolerance must be positive");
    if (!std::isfinite(perturb)) throw DomainError("duality: perturbation must be finite");
    for (double E : e_samples) {
        if (!std::isfinite(E)) throw GridError("duality: non-finite energy sample");
    }
    CorrespondenceReport r;
    r.lambda = lambda;
    r.kappa0 = kappa0;
    r.zeta = zeta.zeta();
    r.tol = tol;
    r.perturb = perturb;
    if (lambda > 0.0)
        tower_case(r, zeta, n_max);
    else if (lambda < 0.0)
        inverted_case(r, zeta, e_samples);
    else
        free_case(r, zeta, e_samples);
    finish(r);
    return r;
}

void enforce(const CorrespondenceReport& report) {
    if (report.passed) return;
    const CorrespondenceEntry* worst = nullptr;
    for (const CorrespondenceEntry& e : report.entries) {
        if (e.ok) continue;
        if (!worst || !(e.residual <= worst->residual)) worst = &e;
    }
    throw CorrespondenceViolation("duality: " + std::to_string(report.mismatches) + " mismatches; worst " +
                                  (worst ? describe(*worst) : std::string("entry unavailable")));
}

}  // namespace dualspec
