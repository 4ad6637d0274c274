#pragma once

#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "anyon1d/errors.hpp"
#include "anyon1d/freespace.hpp"
#include "anyon1d/statistics.hpp"

// Two anyons under harmonic confinement. Trap units throughout this module:
// hbar = omega = m = 1, so a_HO = 1 and the reduced mass is 1/2; the relative
// Hamiltonian is -d^2/dz^2 + z^2/4 with eigenvalue epsilon.
namespace anyon1d::harmonic {

using Complex = std::complex<double>;
using statistics::RelativeWavefunction;
using statistics::StatisticsKind;
using freespace::TailCoefficients;

// Scattering length in a_HO units with |a| = infinity as an explicit flag.
struct ScatteringLength {
    double value = 0.0;
    bool infinite = false;

    static ScatteringLength finite(double a) { return {a, false}; }
    static ScatteringLength infinite_a() { return {0.0, true}; }
};

/// a_sc(epsilon) = Gamma(1/4 - eps/2) / (sqrt(2) Gamma(3/4 - eps/2)).
/// Poles of the numerator (eps = 1/2 + 2n) map to the infinite flag; zeros
/// (eps = 3/2 + 2n) return exactly 0.
ScatteringLength asc_from_epsilon(double epsilon);

/// Inverse of asc_from_epsilon on the given branch (branch 0 is the lowest
/// relative level; levels are bracketed between consecutive poles of the
/// Gamma ratio). Flags map to the exact limits 1/2 + 2n and 3/2 + 2n.
double epsilon_from_asc(const ScatteringLength& a_sc, int branch);

// Truncated Chebyshev expansion on [lo, hi]; used to cache the radial profile.
struct ChebyshevSeries {
    double lo = 0.0, hi = 1.0;
    std::vector<double> coef;

    double operator()(double x) const;
};

// Relative eigenstate of the trapped pair. The stored profile is the even
// unnormalized radial function u(|z|) = exp(-z^2/4) U(-nu+, 1/2, z^2/2).
struct TrapRelativeState {
    double epsilon = 0.0;
    double nu_plus = 0.0;
    double nu_minus = 0.0;
    ScatteringLength a_sc;
    double norm = 0.0;  // M(nu+)
    StatisticsKind kind;
    std::shared_ptr<const ChebyshevSeries> profile;
};

TrapRelativeState make_trap_state(const StatisticsKind& kind, double epsilon);

/// Re-tags an existing state with another statistics kind, sharing the cached
/// radial profile (the profile depends only on epsilon).
TrapRelativeState with_kind(const TrapRelativeState& state, const StatisticsKind& kind);

/// Normalized relative wavefunction of the state at z != 0.
Complex relative_wavefunction(const TrapRelativeState& state, double z);

/// Wraps the state as a statistics::RelativeWavefunction evaluator.
RelativeWavefunction as_wavefunction(const TrapRelativeState& state);

/// Center-of-mass eigenfunction Phi_M(Z), normalized; M <= 200.
double com_wavefunction(int M, double Z);

struct TrapTwoBodyState {
    int com_n = 0;  // center-of-mass quantum number M
    TrapRelativeState relative;

    double total_energy() const { return com_n + 0.5 + relative.epsilon; }
};

/// Trap two-body contact C_{2,eps} = 2 pi [M(nu+)/Gamma(3/4 - eps/2)]^2.
double contact_ho(double epsilon);

/// lim C_{2,eps}/a_sc: cancellation-free, vanishes at both spectrum limits.
double contact_ho_over_asc(double epsilon);

/// lim C_{2,eps}/a_sc^2 = 4 pi [M(nu+)/Gamma(1/4 - eps/2)]^2: finite at the
/// |a_sc| = 0 points where C2 itself vanishes.
double contact_ho_over_asc2(double epsilon);

/// K_{2,eps} = (2 eps + 3/4) a_sc^2. At the |a_sc| = infinity points only the
/// ratio K_{2,eps}/a_sc^2 = 2 eps + 3/4 is returned.
double k2_coefficient(double epsilon);

/// Tail coefficients through k^-4 for the trapped state (M = 0), covering the
/// generic cell and both scattering-length limits.
TailCoefficients tail_ho(const StatisticsKind& kind, double epsilon);

/// Coefficients of {1, |xi|, xi z2, xi^2, xi^2 z2^2} in the short-distance
/// expansion of the assembled M = 0 product wavefunction around xi = 0 at the
/// given z2 (xi > 0 side phase convention).
std::array<Complex, 5> short_distance_expansion(const TrapTwoBodyState& state, double z2);

} // namespace anyon1d::harmonic
