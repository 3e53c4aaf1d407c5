#pragma once

#include "dualspec/specfun.hpp"

namespace dualspec {

// Three solutions of a radial equation at one point, with derivatives with
// respect to the physical coordinate. The third (recessive) solution carries a
// Gamma prefactor and is undefined when that prefactor hits a pole.
struct SolutionTriple {
    Complex v1{}, v2{}, v3{};
    Complex d1{}, d2{}, d3{};
    bool third_defined = true;
};

// A single solution value and its derivative at a point.
struct PointValue {
    Complex value{};
    Complex derivative{};
};

// Boundary-value function gamma~ at a spectral point. A spectral zero means
// gamma~ vanishes there; poles are reported by SpectralPole exceptions.
struct GammaTilde {
    Complex value{};
    bool spectral_zero = false;
};

// gamma~ on the real axis as num/den with neither part infinite, so the
// eigenvalue condition can be evaluated straight through poles and zeros.
struct Projective {
    double num = 0.0;
    double den = 1.0;
};

// The extension solution U (regular at the origin with the chosen boundary
// condition), its partner U~, and their derivatives.
struct ZetaPair {
    Complex value{}, partner{};
    Complex d_value{}, d_partner{};
};

}  // namespace dualspec
