#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dualspec {

struct QuadratureConfig {
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    int max_panels = 4000;

    void validate() const;  // DomainError on nonsense values
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod integration on [a, b].
// QuadratureFailure when the error target is not met within max_panels.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& config = {});

// A composite Kronrod rule shared by several integrands, refined until the
// sum of their integrals has converged. Values of every integrand at every
// node are kept so that pairwise products can be formed afterwards.
struct SharedRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> values;  // row-major: component k at node i is values[k * nodes.size() + i]
    int components = 0;
    double error = 0.0;
};

// `sample` fills one value per component at a point. Refinement is driven by
// sum_k |f_k|^2 (the quantity whose integral is a norm).
SharedRule build_shared_rule(const std::function<void(double, std::span<double>)>& sample, int components, double a,
                             double b, const QuadratureConfig& config = {});

// Fixed nodes and weights of the 15-point Kronrod rule on [-1, 1] (with the
// embedded 7-point Gauss weights), exposed for tests.
struct KronrodTable {
    std::span<const double> nodes;          // 15 nodes, increasing
    std::span<const double> kronrod_weights;
    std::span<const double> gauss_weights;  // zero at the non-Gauss nodes
};
KronrodTable kronrod15();

}  // namespace dualspec
