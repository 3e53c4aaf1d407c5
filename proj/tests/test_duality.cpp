#include "dualspec/duality.hpp"
#include "dualspec/errors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dualspec;
using testing_support::rel_err;
using testing_support::Sampler;

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[std::size_t(i)] = a + (b - a) * i / (n - 1);
    return v;
}

}  // namespace

TEST_CASE("parameter maps") {
    const CoulombPoint c = map_osc_to_coulomb(Complex(5.0, 0.0), Complex(1.0, 0.0), 1.0);
    CHECK(rel_err(c.energy, Complex(-0.25, 0.0)) < 1e-16);
    CHECK(rel_err(c.g, Complex(-1.25, 0.0)) < 1e-16);
    const OscPoint o = map_coulomb_to_osc(Complex(0.25, 0.0), Complex(2.0, 1.0), 2.0);
    CHECK(rel_err(o.lambda, Complex(-4.0, 0.0)) < 1e-16);
    CHECK(rel_err(o.energy, Complex(-16.0, -8.0)) < 1e-16);
}

TEST_CASE("property: the two maps are mutually inverse") {
    Sampler rng(501);
    for (int i = 0; i < 1000; ++i) {
        const Complex W(rng.uniform(-50.0, 50.0), rng.uniform(0.0, 10.0));
        const Complex lambda(rng.uniform(-10.0, 10.0), 0.0);
        const double k0 = rng.uniform(0.1, 5.0);
        const CoulombPoint c = map_osc_to_coulomb(W, lambda, k0);
        const OscPoint back = map_coulomb_to_osc(c.energy, c.g, k0);
        CHECK(std::abs(back.energy - W) <= 1e-14 * std::max(1.0, std::abs(W)));
        CHECK(std::abs(back.lambda - lambda) <= 1e-14 * std::max(1.0, std::abs(lambda)));
    }
}

TEST_CASE("property: parameter identities hold across the plane") {
    Sampler rng(502);
    for (int i = 0; i < 100; ++i) {
        const double lambda = rng.uniform(-4.0, 4.0);
        if (std::abs(lambda) < 1e-3) continue;
        const Complex W(rng.uniform(-10.0, 10.0), rng.uniform(0.05, 3.0));
        const double k0 = rng.uniform(0.3, 3.0);
        const Extension zeta(rng.uniform(-1.5, 1.5));
        CAPTURE(lambda);
        CAPTURE(W);
        std::vector<IdentityCheck> checks;
        CHECK_NOTHROW(checks = check_parameter_identities(W, lambda, k0, zeta));
        CHECK(checks.size() == 6);
        for (const IdentityCheck& c : checks) CHECK(c.residual <= 1e-10);
    }
    CHECK_THROWS_AS(check_parameter_identities(Complex(1.0, 1.0), 1.0, 1.0, Extension(0.2), 0.0), DomainError);
}

TEST_CASE("property: Coulomb basis is the transported oscillator basis") {
    Sampler rng(503);
    for (const double sign : {1.0, -1.0, 0.0}) {
        for (int i = 0; i < 50; ++i) {
            const double lambda = sign * rng.uniform(0.2, 4.0);
            const double k0 = rng.uniform(0.3, 3.0);
            const Complex W(rng.uniform(-8.0, 8.0), rng.uniform(0.05, 2.0));
            const double u = rng.uniform(0.05, 3.0);
            const OscillatorTheory osc(lambda, k0);
            const SolutionTriple o = osc_basis(osc, W, u);
            const CoulombPoint cp = map_osc_to_coulomb(W, lambda, k0);
            const double x = k0 * u * u;
            const SolutionTriple c = coul_basis(cp.g, k0, cp.energy, x);
            const double q = std::pow(x, 0.25);
            CAPTURE(lambda);
            CAPTURE(W);
            CAPTURE(u);
            CHECK(rel_err(c.v1, q * o.v1) < 1e-8);
            CHECK(rel_err(c.v2, q * o.v2) < 1e-8);
            if (o.third_defined && c.third_defined) CHECK(rel_err(c.v3, q * o.v3) < 1e-8);
        }
    }
}

TEST_CASE("property: oscillator roots land on Coulomb roots with the same angle") {
    for (double zeta : {-1.2, -0.4, 0.0, 0.6, 1.3}) {
        const Extension ext(zeta);
        for (const Level& l : discrete_levels(OscillatorTheory(1.0), ext, 8)) {
            const double tau = eigen_residual(OscillatorTheory(1.0), ext, l.energy);
            const CoulombPoint c = map_osc_to_coulomb(Complex(l.energy, 0.0), Complex(1.0, 0.0), 1.0);
            const double image = eigen_residual(CoulombTheory(c.g.real()), ext, c.energy.real());
            CAPTURE(zeta);
            CAPTURE(l.index);
            CHECK(image <= std::max(10.0 * tau, 1e-14));
        }
    }
}

TEST_CASE("transport ratios give the independently normalised Coulomb states") {
    const double k0 = 1.6;
    const double lambda = 1.3;
    const Extension zeta(0.45);
    const std::vector<double> u = linspace(0.05, 3.0, 40);
    for (int n = 0; n <= 3; ++n) {
        const Level lvl = discrete_levels(OscillatorTheory(lambda, k0), zeta, n).back();
        const std::vector<double> osc = eigenfunction(OscillatorTheory(lambda, k0), zeta, LevelIndex{n}, u);
        const double ratio = discrete_transport_ratio(lambda, k0, zeta, n);
        const TransportedState t = transport_eigenfunction(u, osc, k0, ratio);
        const CoulombPoint cp = map_osc_to_coulomb(Complex(lvl.energy, 0.0), Complex(lambda, 0.0), k0);
        const CoulombTheory coul(cp.g.real(), k0);
        const std::vector<double> direct = eigenfunction(coul, zeta, LevelIndex{n}, t.x);
        for (std::size_t i = 0; i < u.size(); ++i) CHECK(std::abs(direct[i] - t.values[i]) <= 1e-9 * (1.0 + std::abs(direct[i])));
    }

    // Continuum: rho_C / rho_O at dual points equals the constant ratio.
    const double ratio = continuum_transport_ratio(k0);
    CHECK(ratio == doctest::Approx(std::sqrt(2.0) * std::pow(k0, 0.25)).epsilon(1e-15));
    for (double W : {-4.0, -0.5, 1.0, 6.0}) {
        const CoulombPoint cp = map_osc_to_coulomb(Complex(W, 0.0), Complex(-lambda, 0.0), k0);
        const double rho_o = continuous_density(OscillatorTheory(-lambda, k0), zeta, W);
        const double rho_c = continuous_density(CoulombTheory(cp.g.real(), k0), zeta, cp.energy.real());
        CHECK(rel_err(std::sqrt(rho_c / rho_o), ratio) < 1e-12);
    }

    const double bad_u[] = {0.0, 1.0};
    const double vals[] = {1.0, 1.0};
    CHECK_THROWS_AS(transport_eigenfunction(bad_u, vals, 1.0, 1.0), GridError);
}

TEST_CASE("correspondence report: discrete towers") {
    for (double zeta : {0.0, 0.6, Extension::kHalfPi}) {
        const CorrespondenceReport r = verify_spectrum_correspondence(1.0, Extension(zeta), 8, {}, 1e-9);
        CAPTURE(zeta);
        CHECK(r.passed);
        CHECK(r.mismatches == 0);
        CHECK(r.worst_residual <= 1e-9);
        int levels = 0;
        int midpoints = 0;
        for (const CorrespondenceEntry& e : r.entries) {
            if (e.source_class == SpectralClass::Discrete) {
                ++levels;
                CHECK(e.image_class == SpectralClass::Discrete);
            } else {
                ++midpoints;
                CHECK(e.source_class == SpectralClass::NonSpectral);
                CHECK(e.image_class == SpectralClass::NonSpectral);
                CHECK(e.residual >= 1e-2);
            }
        }
        CHECK(levels == 18);  // nine levels, both directions
        CHECK(midpoints > 0);
        CHECK_NOTHROW(enforce(r));
    }
}

TEST_CASE("correspondence report: continuum and free cases") {
    const std::vector<double> samples = linspace(-10.0, 10.0, 50);
    const CorrespondenceReport inv = verify_spectrum_correspondence(-1.0, Extension(0.3), 5, samples, 1e-10);
    CHECK(inv.passed);
    for (const CorrespondenceEntry& e : inv.entries) {
        CHECK(e.source_class == SpectralClass::Continuum);
        CHECK(e.image_class == SpectralClass::Continuum);
    }
    const CorrespondenceReport free = verify_spectrum_correspondence(0.0, Extension(-0.7), 5, samples, 1e-10, 1.4);
    CHECK(free.passed);
    const CorrespondenceReport free_no_level = verify_spectrum_correspondence(0.0, Extension(0.7), 5, samples, 1e-10);
    CHECK(free_no_level.passed);
}

TEST_CASE("correspondence report: a perturbed map is caught") {
    const std::vector<double> samples = linspace(-10.0, 10.0, 20);
    const CorrespondenceReport tower = verify_spectrum_correspondence(1.0, Extension(0.6), 8, {}, 1e-9, 1.0, 1e-3);
    CHECK_FALSE(tower.passed);
    CHECK(tower.mismatches > 0);
    CHECK_THROWS_AS(enforce(tower), CorrespondenceViolation);
    const CorrespondenceReport inv = verify_spectrum_correspondence(-1.0, Extension(0.6), 8, samples, 1e-9, 1.0, 1e-3);
    CHECK_FALSE(inv.passed);
}

TEST_CASE("class names") {
    CHECK(spectral_class_name(SpectralClass::Discrete) == "discrete");
    CHECK(spectral_class_name(SpectralClass::Continuum) == "continuum");
    CHECK(spectral_class_name(SpectralClass::NonSpectral) == "non_spectral");
}
