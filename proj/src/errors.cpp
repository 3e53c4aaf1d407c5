#include "dualspec/errors.hpp"

namespace dualspec {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::NoConvergence: return "no_convergence";
    case ErrorKind::SpectralPole: return "spectral_pole";
    case ErrorKind::NotDiscreteRegime: return "not_discrete_regime";
    case ErrorKind::BracketFailure: return "bracket_failure";
    case ErrorKind::OutOfSupport: return "out_of_support";
    case ErrorKind::NotResolventSet: return "not_resolvent_set";
    case ErrorKind::NotInSpectrum: return "not_in_spectrum";
    case ErrorKind::QuadratureFailure: return "quadrature_failure";
    case ErrorKind::IdentityViolation: return "identity_violation";
    case ErrorKind::CorrespondenceViolation: return "correspondence_violation";
    case ErrorKind::Grid: return "grid";
    }
    return "unknown";
}

}  // namespace dualspec
