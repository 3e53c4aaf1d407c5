#include "dualspec/errors.hpp"
#include "dualspec/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace dualspec::kernels {

namespace avx2 {
bool compiled();
}

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect() {
    if (const char* env = std::getenv("DUALSPEC_SIMD")) {
        if (std::string(env) == "scalar") return Backend::Scalar;
    }
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

std::string_view backend_name(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend backend) {
    if (backend == Backend::Scalar) return true;
    static const bool ok = avx2::compiled() && cpu_has_avx2();
    return ok;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (!backend_available(backend)) throw DomainError("kernels: backend not available on this machine");
    current().store(backend, std::memory_order_relaxed);
}

double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g) {
    if (f.size() != w.size() || g.size() != w.size()) throw DomainError("weighted_dot: length mismatch");
    return active_backend() == Backend::Avx2 ? avx2::weighted_dot(w, f, g) : scalar::weighted_dot(w, f, g);
}

void weighted_gram(std::span<const double> w, std::span<const double> values, int m, std::span<double> out) {
    if (m < 0 || values.size() != w.size() * std::size_t(m) || out.size() != std::size_t(m) * std::size_t(m))
        throw DomainError("weighted_gram: shape mismatch");
    if (active_backend() == Backend::Avx2)
        avx2::weighted_gram(w, values, m, out);
    else
        scalar::weighted_gram(w, values, m, out);
}

void transport_map(std::span<const double> u, std::span<const double> v, double kappa0, double ratio,
                   std::span<double> x_out, std::span<double> y_out) {
    if (v.size() != u.size() || x_out.size() != u.size() || y_out.size() != u.size())
        throw DomainError("transport_map: length mismatch");
    if (active_backend() == Backend::Avx2)
        avx2::transport_map(u, v, kappa0, ratio, x_out, y_out);
    else
        scalar::transport_map(u, v, kappa0, ratio, x_out, y_out);
}

}  // namespace dualspec::kernels
