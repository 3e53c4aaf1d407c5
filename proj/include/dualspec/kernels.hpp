#pragma once

#include <span>
#include <string_view>

// Data-parallel reductions over quadrature nodes and sample grids. Each kernel
// has a scalar reference and an AVX2/FMA variant; the variant is chosen once at
// runtime from the CPU features (DUALSPEC_SIMD=scalar forces the reference).
namespace dualspec::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);
bool backend_available(Backend backend);
Backend active_backend();
// Switch the process-wide backend; DomainError when the CPU lacks it.
void set_backend(Backend backend);

// sum_i w_i f_i g_i
double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g);

// out (m x m, row-major) = V diag(w) V^T for V given row-major as m rows of w.size().
void weighted_gram(std::span<const double> w, std::span<const double> values, int m, std::span<double> out);

// x_i = kappa0 u_i^2 and y_i = ratio * x_i^{1/4} * v_i.
void transport_map(std::span<const double> u, std::span<const double> v, double kappa0, double ratio,
                   std::span<double> x_out, std::span<double> y_out);

// Direct entry points to each implementation, for equivalence tests.
namespace scalar {
double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g);
void weighted_gram(std::span<const double> w, std::span<const double> values, int m, std::span<double> out);
void transport_map(std::span<const double> u, std::span<const double> v, double kappa0, double ratio,
                   std::span<double> x_out, std::span<double> y_out);
}  // namespace scalar

namespace avx2 {
double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g);
void weighted_gram(std::span<const double> w, std::span<const double> values, int m, std::span<double> out);
void transport_map(std::span<const double> u, std::span<const double> v, double kappa0, double ratio,
                   std::span<double> x_out, std::span<double> y_out);
}  // namespace avx2

}  // namespace dualspec::kernels
