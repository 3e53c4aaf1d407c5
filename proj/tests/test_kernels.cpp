#include "dualspec/errors.hpp"
#include "dualspec/kernels.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace dualspec;
using testing_support::Sampler;

namespace {

std::vector<double> random_vector(Sampler& rng, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
}

}  // namespace

TEST_CASE("backend names and selection") {
    CHECK(kernels::backend_name(kernels::Backend::Scalar) == "scalar");
    CHECK(kernels::backend_name(kernels::Backend::Avx2) == "avx2");
    CHECK(kernels::backend_available(kernels::Backend::Scalar));
    const kernels::Backend initial = kernels::active_backend();
    kernels::set_backend(kernels::Backend::Scalar);
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    if (kernels::backend_available(kernels::Backend::Avx2)) {
        kernels::set_backend(kernels::Backend::Avx2);
        CHECK(kernels::active_backend() == kernels::Backend::Avx2);
    } else {
        CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::Avx2), DomainError);
    }
    kernels::set_backend(initial);
}

TEST_CASE("property: scalar and vector kernels agree for every length") {
    if (!kernels::backend_available(kernels::Backend::Avx2)) return;
    Sampler rng(401);
    for (std::size_t n = 0; n <= 67; ++n) {
        const auto w = random_vector(rng, n, 0.0, 2.0);
        const auto f = random_vector(rng, n, -3.0, 3.0);
        const auto g = random_vector(rng, n, -3.0, 3.0);
        const double a = kernels::scalar::weighted_dot(w, f, g);
        const double b = kernels::avx2::weighted_dot(w, f, g);
        double mag = 0.0;
        for (std::size_t i = 0; i < n; ++i) mag += std::abs(w[i] * f[i] * g[i]);
        CAPTURE(n);
        CHECK(std::abs(a - b) <= 1e-14 * (mag + 1e-300));

        for (int m : {1, 3, 5}) {
            const auto values = random_vector(rng, n * std::size_t(m), -2.0, 2.0);
            std::vector<double> sa(std::size_t(m * m));
            std::vector<double> sb(std::size_t(m * m));
            kernels::scalar::weighted_gram(w, values, m, sa);
            kernels::avx2::weighted_gram(w, values, m, sb);
            for (std::size_t k = 0; k < sa.size(); ++k) CHECK(std::abs(sa[k] - sb[k]) <= 1e-13 * (1.0 + std::abs(sa[k])));
        }

        const auto u = random_vector(rng, n, 0.01, 5.0);
        std::vector<double> xa(n), ya(n), xb(n), yb(n);
        kernels::scalar::transport_map(u, f, 1.7, 0.9, xa, ya);
        kernels::avx2::transport_map(u, f, 1.7, 0.9, xb, yb);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(xa[i] == doctest::Approx(xb[i]).epsilon(1e-15));
            CHECK(ya[i] == doctest::Approx(yb[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("reference kernels compute what they document") {
    const std::vector<double> w = {0.5, 2.0, 1.0};
    const std::vector<double> f = {1.0, -1.0, 3.0};
    const std::vector<double> g = {2.0, 4.0, 1.0};
    CHECK(kernels::weighted_dot(w, f, g) == doctest::Approx(1.0 - 8.0 + 3.0));

    // Two rows: [1,-1,3] and [2,4,1].
    std::vector<double> values = f;
    values.insert(values.end(), g.begin(), g.end());
    std::vector<double> gram(4);
    kernels::weighted_gram(w, values, 2, gram);
    CHECK(gram[0] == doctest::Approx(0.5 + 2.0 + 9.0));
    CHECK(gram[1] == doctest::Approx(-4.0));
    CHECK(gram[2] == doctest::Approx(-4.0));
    CHECK(gram[3] == doctest::Approx(2.0 + 32.0 + 1.0));

    const std::vector<double> u = {1.0, 2.0};
    const std::vector<double> v = {3.0, -1.0};
    std::vector<double> x(2), y(2);
    kernels::transport_map(u, v, 2.0, 0.5, x, y);
    CHECK(x[0] == 2.0);
    CHECK(x[1] == 8.0);
    CHECK(y[0] == doctest::Approx(0.5 * std::pow(2.0, 0.25) * 3.0));
    CHECK(y[1] == doctest::Approx(-0.5 * std::pow(8.0, 0.25)));
}

TEST_CASE("kernels reject mismatched spans") {
    const std::vector<double> a = {1.0, 2.0};
    const std::vector<double> b = {1.0};
    CHECK_THROWS_AS(kernels::weighted_dot(a, a, b), DomainError);
    std::vector<double> out(1);
    CHECK_THROWS_AS(kernels::weighted_gram(a, b, 1, out), DomainError);
}
