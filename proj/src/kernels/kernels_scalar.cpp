#include "dualspec/kernels.hpp"

#include <cmath>
#include <cstddef>

namespace dualspec::kernels::scalar {

double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * f[i] * g[i];
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
    const double scale = ratio * std::sqrt(std::sqrt(kappa0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        x_out[i] = kappa0 * u[i] * u[i];
        y_out[i] = scale * std::sqrt(u[i]) * v[i];
    }
}

}  // namespace dualspec::kernels::scalar
