#pragma once

#include "dualspec/coulomb.hpp"
#include "dualspec/extension.hpp"
#include "dualspec/oscillator.hpp"
#include "dualspec/quadrature.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dualspec {

using Theory = std::variant<OscillatorTheory, CoulombTheory>;

std::string theory_name(const Theory& theory);  // "oscillator" or "coulomb"
double theory_kappa0(const Theory& theory);

// How the discrete spectrum of a half-line problem is organised.
enum class DiscreteRegime {
    Tower,           // infinitely many levels, one between consecutive poles of gamma~
    BelowThreshold,  // at most one negative level, present iff zeta < threshold angle
    None,
};

DiscreteRegime discrete_regime(const Theory& theory);
// Threshold angle for the BelowThreshold regime (0 for lambda = 0, zeta_g or 0 for Coulomb).
double threshold_angle(const Theory& theory);

struct Level {
    int index = 0;
    double energy = 0.0;
    double weight = 0.0;  // Q^2, the point mass of the spectral function
};

// Levels with index 0..n_max, sorted increasing. NotDiscreteRegime when the
// extension has no discrete levels at all.
std::vector<Level> discrete_levels(const Theory& theory, const Extension& zeta, int n_max, double tol = 1e-13);

// Poles and zeros of gamma~ on the real axis (Tower regime only).
double tower_pole(const Theory& theory, int n);
double tower_zero(const Theory& theory, int n);

// Scale-free distance from the eigenvalue condition gamma~ = -tan(zeta):
// |gamma~ + tan zeta| when |tan zeta| <= 1, otherwise |1/gamma~ + cot zeta|.
double eigen_residual(const Theory& theory, const Extension& zeta, double E);

enum class SupportKind { Empty, HalfLine, WholeLine };

struct ContinuumSupport {
    SupportKind kind = SupportKind::Empty;
    bool contains(double E) const {
        return kind == SupportKind::WholeLine || (kind == SupportKind::HalfLine && E >= 0.0);
    }
};

ContinuumSupport continuum_support(const Theory& theory);

// Closed-form spectral density rho^2(E). OutOfSupport outside the continuum.
// May be +inf at an integrable threshold singularity.
double continuous_density(const Theory& theory, const Extension& zeta, double E);

struct Atom {
    double energy = 0.0;
    double weight = 0.0;
};

// The zero-energy point mass of the Coulomb problem at zeta = zeta_g.
std::optional<Atom> zero_energy_atom(const Theory& theory, const Extension& zeta);

struct DensitySample {
    double energy = 0.0;
    double density = 0.0;
};

struct SpectrumResult {
    std::vector<Level> levels;
    ContinuumSupport support;
    std::vector<DensitySample> density;  // grid points inside the support only
    std::optional<Atom> atom;
};

// GridError for non-finite or unsorted grids.
SpectrumResult spectrum(const Theory& theory, const Extension& zeta, int n_max, std::span<const double> e_grid);

// Omega(W) = omega~ / (Wr(U, U~) omega): sigma'(E) = Im Omega(E + i0) / pi.
Complex omega_function(const Theory& theory, const Extension& zeta, Complex W);

// Resolvent kernel. Points are u (oscillator) or x (Coulomb), both > 0.
// NotResolventSet for real W inside the spectrum.
Complex green_function(const Theory& theory, const Extension& zeta, double p1, double p2, Complex W);

struct LevelIndex {
    int n = 0;
};
struct ContinuumEnergy {
    double energy = 0.0;
};
struct ZeroEnergyState {};
using EigenSelector = std::variant<LevelIndex, ContinuumEnergy, ZeroEnergyState>;

// Normalized eigenfunction sampled at the given points: Q U for levels and the
// atom, rho(E) U for continuum states. NotInSpectrum for invalid selectors.
std::vector<double> eigenfunction(const Theory& theory, const Extension& zeta, const EigenSelector& which,
                                  std::span<const double> points);

struct GramResult {
    int size = 0;
    std::vector<double> entries;  // row-major size x size
    double max_deviation = 0.0;   // max |M - I|
    double quadrature_error = 0.0;
    double cutoff = 0.0;          // outer end of the integration range (physical coordinate)

    double at(int i, int j) const { return entries[std::size_t(i) * std::size_t(size) + std::size_t(j)]; }
};

// Gram matrix of the first n_max + 1 normalized eigenfunctions.
GramResult orthonormality_matrix(const Theory& theory, const Extension& zeta, int n_max,
                                 const QuadratureConfig& config = {});

enum class Parity { Even, Odd };

struct FullLineLevel {
    double energy = 0.0;
    int multiplicity = 1;
    std::vector<Parity> sectors;
    std::vector<int> sector_indices;
};

struct FullLineSpectrum {
    Extension zeta_even;
    Extension zeta_odd;
    std::vector<FullLineLevel> levels;
    ContinuumSupport support;
    int continuum_multiplicity = 0;
    std::vector<Atom> atoms;
};

// Merge the even and odd sectors of a parity-conserving full-line extension.
// Levels coincide when |E1 - E2| <= 1e-9 (1 + |E|). With two towers the list
// stops at the last level that both sectors still resolve.
FullLineSpectrum assemble_full_line(const Theory& theory, const Extension& zeta_even, const Extension& zeta_odd,
                                    int n_max);

// Full-line eigenfunction of one sector: U(|u|)/sqrt2 (even) or sign(u) U(|u|)/sqrt2 (odd).
std::vector<double> full_line_eigenfunction(const Theory& theory, const Extension& zeta, Parity parity,
                                            const EigenSelector& which, std::span<const double> points);

}  // namespace dualspec
