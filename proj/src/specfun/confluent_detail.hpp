#pragma once

#include "dualspec/specfun.hpp"

namespace dualspec::detail {

// A solution of the confluent equation z w'' + (c - z) w' - a w = 0 at a point.
struct ConfluentState {
    Complex value;
    Complex derivative;
};

// Carries (w, w') from `from` to `to` along the straight segment with local
// Taylor expansions. The segment must not pass through z = 0.
ConfluentState continue_confluent(Complex a, Complex c, Complex from, ConfluentState start, Complex to,
                                  const Accuracy& acc);

struct SeriesResult {
    Complex value;
    double error;  // absolute error estimate
    bool converged;
};

// Power series of 1F1 with a rounding-error estimate from the absolute term sum.
SeriesResult kummer_series(Complex a, Complex c, Complex z, const Accuracy& acc);

}  // namespace dualspec::detail
