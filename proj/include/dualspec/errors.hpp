#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualspec {

enum class ErrorKind {
    Domain,
    Pole,
    NoConvergence,
    SpectralPole,
    NotDiscreteRegime,
    BracketFailure,
    OutOfSupport,
    NotResolventSet,
    NotInSpectrum,
    QuadratureFailure,
    IdentityViolation,
    CorrespondenceViolation,
    Grid,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define DUALSPEC_DEFINE_ERROR(Name, Kind)                                              \
    class Name : public Error {                                                        \
    public:                                                                            \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}       \
    };

DUALSPEC_DEFINE_ERROR(DomainError, Domain)
DUALSPEC_DEFINE_ERROR(PoleError, Pole)
DUALSPEC_DEFINE_ERROR(NoConvergence, NoConvergence)
DUALSPEC_DEFINE_ERROR(SpectralPole, SpectralPole)
DUALSPEC_DEFINE_ERROR(NotDiscreteRegime, NotDiscreteRegime)
DUALSPEC_DEFINE_ERROR(BracketFailure, BracketFailure)
DUALSPEC_DEFINE_ERROR(OutOfSupport, OutOfSupport)
DUALSPEC_DEFINE_ERROR(NotResolventSet, NotResolventSet)
DUALSPEC_DEFINE_ERROR(NotInSpectrum, NotInSpectrum)
DUALSPEC_DEFINE_ERROR(QuadratureFailure, QuadratureFailure)
DUALSPEC_DEFINE_ERROR(IdentityViolation, IdentityViolation)
DUALSPEC_DEFINE_ERROR(CorrespondenceViolation, CorrespondenceViolation)
DUALSPEC_DEFINE_ERROR(GridError, Grid)

#undef DUALSPEC_DEFINE_ERROR

}  // namespace dualspec
