#pragma once

#include <complex>

#include "anyon1d/errors.hpp"
#include "anyon1d/statistics.hpp"

namespace anyon1d::zerorange {

using Complex = std::complex<double>;
using statistics::RelativeWavefunction;
using statistics::StatisticsKind;

// Low-energy scattering model: 1D scattering length in the chosen length unit,
// with hbar = mu = 1, so energies are in units hbar^2/(mu l^2) conventions of
// E = -1/(2 a^2) for the bound state. The hard-core / free-fermion limit
// |a_sc| = infinity is an explicit flag rather than an overflowing value.
struct ScatteringModel {
    double a_sc = 1.0;
    bool infinite = false;

    static ScatteringModel finite(double a) { return {a, false}; }
    static ScatteringModel infinite_a() { return {0.0, true}; }
};

/// tan(delta_sc(k)) = -a_sc k. For the infinite-|a_sc| flag the limit
/// a_sc -> +infinity is used, i.e. -infinity is returned for k > 0.
double tan_phase_shift(const ScatteringModel& model, double k);

struct Couplings {
    double g_plus = 0.0;   // even channel, -1/a_sc
    double g_minus = 0.0;  // odd channel, a_sc
    bool g_minus_infinite = false;
};

/// k-independent couplings g+ = -1/a_sc, g- = a_sc (hbar = mu = 1).
/// Throws ZeroScatteringLength for a_sc = 0.
Couplings couplings(const ScatteringModel& model);

/// Outside scattering solution f_{k;s}(z) + tan(delta) g_{k;s}(z) with the
/// beta(k) = 1 convention. For the infinite-|a_sc| flag the normalized
/// mixture degenerates to the irregular reference function (up to scale).
Complex outside_solution(const StatisticsKind& kind, const ScatteringModel& model, double k,
                         double z);

/// Extrapolates psi and psi' to z -> 0+- on a geometric Richardson ladder and
/// returns the maximum deviation (scaled by the matched overall amplitude)
/// from the kind-specific zero-range boundary condition.
double boundary_residual(const RelativeWavefunction& w, const ScatteringModel& model);

struct BoundState {
    double kappa = 0.0;   // 1/a_sc
    double energy = 0.0;  // -1/(2 a_sc^2)
    RelativeWavefunction wavefunction;
    StatisticsKind kind;
};

/// Free-space two-body bound state; exists only for finite a_sc > 0.
/// Throws NoBoundState for a_sc <= 0 (or the infinite flag) and
/// BreakdownRegime for a_sc <= 1e-12.
BoundState bound_state(const StatisticsKind& kind, const ScatteringModel& model);

} // namespace anyon1d::zerorange
