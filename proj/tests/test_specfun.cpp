#include "dualspec/errors.hpp"
#include "dualspec/specfun.hpp"

#include "oracle_values.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numbers>

using namespace dualspec;
using testing_support::rel_err;
using testing_support::Sampler;

TEST_CASE("gamma matches frozen mpmath values") {
    for (const auto& o : oracle::kGamma) {
        CAPTURE(o.z);
        CHECK(rel_err(gamma(o.z), o.value) < 2e-14);
        CHECK(rel_err(rgamma(o.z), 1.0 / o.value) < 2e-14);
        CHECK(std::abs(std::exp(log_gamma(o.z)) - o.value) / std::abs(o.value) < 1e-13);
    }
}

TEST_CASE("gamma poles and the entire reciprocal") {
    for (int n = 0; n <= 6; ++n) {
        CHECK_THROWS_AS(gamma(Complex(-n, 0.0)), PoleError);
        CHECK_THROWS_AS(digamma(Complex(-n, 0.0)), PoleError);
        CHECK(std::abs(rgamma(Complex(-n, 0.0))) == 0.0);
    }
    // 1/Gamma has derivative (-1)^n n! at -n.
    double fact = 1.0;
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) fact *= n;
        const double want = (n % 2 == 0 ? 1.0 : -1.0) * fact;
        CHECK(rel_err(rgamma_derivative(Complex(-n, 0.0)), Complex(want, 0.0)) < 1e-12);
    }
}

TEST_CASE("digamma matches frozen mpmath values") {
    for (const auto& o : oracle::kDigamma) {
        CAPTURE(o.z);
        CHECK(rel_err(digamma(o.z), o.value) < 1e-13);
    }
}

TEST_CASE("gamma half ratio matches frozen values across the Stirling switch") {
    for (const auto& o : oracle::kGammaHalfRatio) {
        CAPTURE(o.z);
        CHECK(rel_err(gamma_half_ratio(o.z), o.value) < 1e-13);
        CHECK(rel_err(inverse_gamma_half_ratio(o.z), 1.0 / o.value) < 1e-13);
    }
    CHECK_THROWS_AS(gamma_half_ratio(Complex(-0.5, 0.0)), PoleError);
    CHECK_THROWS_AS(inverse_gamma_half_ratio(Complex(-2.0, 0.0)), PoleError);
}

TEST_CASE("property: gamma recurrence and reflection") {
    Sampler rng(11);
    for (int i = 0; i < 200; ++i) {
        const Complex z(rng.uniform(-12.0, 12.0), rng.uniform(-8.0, 8.0));
        if (distance_to_pole(z) < 1e-3 || distance_to_pole(z + 1.0) < 1e-3) continue;
        CAPTURE(z);
        CHECK(rel_err(gamma(z + 1.0), z * gamma(z)) < 1e-12);
        const Complex lhs = gamma(z) * gamma(1.0 - z) * sin_pi(z);
        CHECK(rel_err(lhs, Complex(std::numbers::pi, 0.0)) < 1e-11);
    }
}

TEST_CASE("property: ratio derivatives agree with central differences") {
    Sampler rng(12);
    for (int i = 0; i < 60; ++i) {
        const Complex a(rng.uniform(-6.0, 30.0), rng.uniform(-5.0, 5.0));
        if (distance_to_pole(a) < 0.05 || distance_to_pole(a + 0.5) < 0.05) continue;
        const double h = 1e-5 * std::max(1.0, std::abs(a));
        const Complex fd = (gamma_half_ratio(a + h) - gamma_half_ratio(a - h)) / (2.0 * h);
        const Complex ifd = (inverse_gamma_half_ratio(a + h) - inverse_gamma_half_ratio(a - h)) / (2.0 * h);
        CAPTURE(a);
        CHECK(rel_err(gamma_half_ratio_derivative(a), fd) < 1e-7);
        CHECK(rel_err(inverse_gamma_half_ratio_derivative(a), ifd) < 1e-7);
    }
}

TEST_CASE("exact trigonometric zeros") {
    CHECK(sin_pi(3.0) == 0.0);
    CHECK(cos_pi(2.5) == 0.0);
    CHECK(sin_pi(0.5) == 1.0);
    CHECK(distance_to_pole(Complex(-2.25, 0.0)) == doctest::Approx(0.25));
    CHECK(std::isinf(distance_to_pole(Complex(0.75, 3.0))));
}

TEST_CASE("Kummer function matches frozen values") {
    for (const auto& o : oracle::kKummer) {
        CAPTURE(o.a);
        CAPTURE(o.z);
        CHECK(rel_err(kummer_phi(o.a, o.c, o.z), o.value) < 1e-12);
    }
}

TEST_CASE("Tricomi function matches frozen values") {
    for (const auto& o : oracle::kTricomi) {
        CAPTURE(o.a);
        CAPTURE(o.z);
        CHECK(rel_err(tricomi_psi(o.a, o.c, o.z), o.value) < 1e-12);
    }
}

TEST_CASE("property: Kummer transformation and derivative identity") {
    Sampler rng(13);
    for (int i = 0; i < 200; ++i) {
        const Complex a(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
        const Complex c(rng.integer(0, 1) ? 0.5 : 1.5, 0.0);
        const Complex z(rng.uniform(-15.0, 15.0), rng.uniform(-15.0, 15.0));
        const Complex lhs = kummer_phi(a, c, z);
        const Complex rhs = std::exp(z) * kummer_phi(c - a, c, -z);
        CAPTURE(a);
        CAPTURE(z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (std::abs(lhs) + std::abs(rhs) + 1e-12 * std::exp(std::abs(z.real()))));
        const Complex d = kummer_phi_derivative(a, c, z);
        CHECK(std::abs(d - a / c * kummer_phi(a + 1.0, c + 1.0, z)) <= 1e-10 * (std::abs(d) + 1.0) * std::exp(std::abs(z.real())));
    }
}

TEST_CASE("property: Tricomi derivative and contiguous relation") {
    Sampler rng(14);
    for (int i = 0; i < 100; ++i) {
        const Complex a(rng.uniform(-2.0, 3.0), rng.uniform(-4.0, 4.0));
        const Complex z(rng.uniform(0.2, 20.0), rng.uniform(-3.0, 3.0));
        // U'(a, 1/2, z) = -a U(a+1, 3/2, z)
        const Complex d = tricomi_psi_derivative(a, 0.5, z);
        const Complex want = -a * tricomi_psi(a + 1.0, 1.5, z);
        CAPTURE(a);
        CAPTURE(z);
        CHECK(std::abs(d - want) <= 1e-10 * (std::abs(want) + std::abs(d)) + 1e-300);
        const double h = 1e-5 * std::abs(z);
        const Complex fd = (tricomi_psi(a, 1.5, z + h) - tricomi_psi(a, 1.5, z - h)) / (2.0 * h);
        CHECK(rel_err(tricomi_psi_derivative(a, 1.5, z), fd) < 1e-6);
    }
}

TEST_CASE("accuracy validation") {
    const Accuracy zero_tol{0.0, 4000};
    const Accuracy loose{1e-3, 4000};
    const Accuracy few_terms{1e-13, 10};
    CHECK_THROWS_AS(zero_tol.validate(), DomainError);
    CHECK_THROWS_AS(loose.validate(), DomainError);
    CHECK_THROWS_AS(few_terms.validate(), DomainError);
    CHECK_NOTHROW(Accuracy{}.validate());
}

TEST_CASE("error kinds have stable names") {
    CHECK(error_kind_name(ErrorKind::Domain) == "domain");
    CHECK(error_kind_name(ErrorKind::CorrespondenceViolation) == "correspondence_violation");
    CHECK(error_kind_name(ErrorKind::Grid) == "grid");
    const DomainError e("x");
    CHECK(e.kind() == ErrorKind::Domain);
}
