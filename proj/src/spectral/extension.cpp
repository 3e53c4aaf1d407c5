#include "dualspec/extension.hpp"
#include "dualspec/errors.hpp"

#include <sstream>

namespace dualspec {

Extension::Extension(double zeta) {
    if (!std::isfinite(zeta) || std::abs(zeta) > kHalfPi) {
        std::ostringstream os;
        os.precision(17);
        os << "extension angle must lie in [-pi/2, pi/2], got " << zeta;
        throw DomainError(os.str());
    }
    zeta_ = (zeta == -kHalfPi) ? kHalfPi : zeta;
    if (zeta_ == kHalfPi) {
        sin_ = 1.0;
        cos_ = 0.0;
    } else {
        sin_ = std::sin(zeta_);
        cos_ = std::cos(zeta_);
    }
}

double Extension::tan() const {
    if (is_half_pi()) throw DomainError("tan(zeta) is infinite at zeta = pi/2");
    return sin_ / cos_;
}

}  // namespace dualspec
