#pragma once

#include <cmath>
#include <numbers>

namespace dualspec {

// A self-adjoint extension of the half-line problem, parametrised by an angle.
// Angles are identified modulo pi; the canonical representative lies in
// (-pi/2, pi/2], so -pi/2 and pi/2 name the same extension.
class Extension {
public:
    static constexpr double kHalfPi = std::numbers::pi / 2.0;

    // Throws DomainError for non-finite angles or |zeta| > pi/2.
    explicit Extension(double zeta);

    double zeta() const noexcept { return zeta_; }
    double sin() const noexcept { return sin_; }
    double cos() const noexcept { return cos_; }
    double tan() const;  // DomainError at pi/2

    bool is_half_pi() const noexcept { return zeta_ == kHalfPi; }
    bool is_zero() const noexcept { return zeta_ == 0.0; }

    friend bool operator==(const Extension& a, const Extension& b) noexcept { return a.zeta_ == b.zeta_; }

private:
    double zeta_;
    double sin_;
    double cos_;
};

}  // namespace dualspec
