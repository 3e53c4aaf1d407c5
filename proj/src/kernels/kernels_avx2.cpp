#include "dualspec/kernels.hpp"

#include <cmath>
#include <cstddef>

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define DUALSPEC_HAVE_AVX2 1
#endif

namespace dualspec::kernels::avx2 {

#if defined(DUALSPEC_HAVE_AVX2)

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    const std::size_t n = w.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d a0 = _mm256_mul_pd(_mm256_loadu_pd(&w[i]), _mm256_loadu_pd(&f[i]));
        __m256d a1 = _mm256_mul_pd(_mm256_loadu_pd(&w[i + 4]), _mm256_loadu_pd(&f[i + 4]));
        acc0 = _mm256_fmadd_pd(a0, _mm256_loadu_pd(&g[i]), acc0);
        acc1 = _mm256_fmadd_pd(a1, _mm256_loadu_pd(&g[i + 4]), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d a0 = _mm256_mul_pd(_mm256_loadu_pd(&w[i]), _mm256_loadu_pd(&f[i]));
        acc0 = _mm256_fmadd_pd(a0, _mm256_loadu_pd(&g[i]), acc0);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) sum += w[i] * f[i] * g[i];
    return sum;
}

void weighted_gram(std::span<const double> w, std::span<const double> values, int m, std::span<double> out) {
    const std::size_t n = w.size();
    const std::size_t mm = std::size_t(m);
    for (std::size_t i = 0; i < mm; ++i) {
        for (std::size_t j = i; j < mm; ++j) {
            const double v = weighted_dot(w, values.subspan(i * n, n), values.subspan(j * n, n));
            out[i * mm + j] = v;
            out[j * mm + i] = v;
        }
    }
}

void transport_map(std::span<const double> u, std::span<const double> v, double kappa0, double ratio,
                   std::span<double> x_out, std::span<double> y_out) {
    const std::size_t n = u.size();
    const double scale = ratio * std::sqrt(std::sqrt(kappa0));
    const __m256d k = _mm256_set1_pd(kappa0);
    const __m256d s = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d uu = _mm256_loadu_pd(&u[i]);
        _mm256_storeu_pd(&x_out[i], _mm256_mul_pd(k, _mm256_mul_pd(uu, uu)));
        __m256d root = _mm256_sqrt_pd(uu);
        _mm256_storeu_pd(&y_out[i], _mm256_mul_pd(_mm256_mul_pd(s, root), _mm256_loadu_pd(&v[i])));
    }
    for (; i < n; ++i) {
        x_out[i] = kappa0 * u[i] * u[i];
        y_out[i] = scale * std::sqrt(u[i]) * v[i];
    }
}

bool compiled() { return true; }

#else

// Built without AVX2 support: forward to the reference so the symbols exist.
double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    return scalar::weighted_dot(w, f, g);
}
void weighted_gram(std::span<const double> w, std::span<const double> values, int m, std::span<double> out) {
    scalar::weighted_gram(w, values, m, out);
}
void transport_map(std::span<const double> u, std::span<const double> v, double kappa0, double ratio,
                   std::span<double> x_out, std::span<double> y_out) {
    scalar::transport_map(u, v, kappa0, ratio, x_out, y_out);
}
bool compiled() { return false; }

#endif

}  // namespace dualspec::kernels::avx2
