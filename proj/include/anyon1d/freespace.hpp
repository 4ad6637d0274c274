#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "anyon1d/errors.hpp"
#include "anyon1d/numerics.hpp"
#include "anyon1d/statistics.hpp"

namespace anyon1d::freespace {

using Complex = std::complex<double>;
using statistics::StatisticsKind;

enum class Universality { Universal, MixedUniversality, Absent };

// Coefficients of k^-2, k^-3, k^-4 in a momentum-distribution tail.
struct TailCoefficients {
    double c2 = 0.0, c3 = 0.0, c4 = 0.0;
    Universality u2 = Universality::Absent;
    Universality u3 = Universality::Absent;
    Universality u4 = Universality::Absent;
};

enum class ExtremumWhich { GlobalMax, LocalMax };

struct ExtremumRecord {
    double location_k = 0.0;  // 1/l units; +-infinity at the degenerate alpha endpoints
    double value = 0.0;       // l units
    ExtremumWhich which = ExtremumWhich::GlobalMax;
};

/// One-body density matrix of the free-space bound state, reported as
/// L rho(z1, z1') = exp(-|d|/a) (1 +- exp(i alpha pi sign(d)) |d|/a), d = z1-z1'.
/// Hermitian; diagonal value exactly 1.
Complex obdm_bound(const StatisticsKind& kind, double a_sc, double z1, double z1p);

/// Closed-form bound-state momentum distribution (normalized to
/// (1/2pi) Int n dk = 2).
double momentum_bound(const StatisticsKind& kind, double a_sc, double k);

/// Same formulas without clamping the statistical parameter; used by the
/// formal shifted-index relations where alpha +- 1 leaves [0, 1].
double momentum_bound_raw(bool plus_family, double alpha, double a_sc, double k);

/// Locations and values of the two maxima of the bound-state momentum
/// distribution. Index 0 is the global maximum.
std::vector<ExtremumRecord> extrema_bound(const StatisticsKind& kind, double a_sc);

/// Two-body Tan contact of the free-space bound state: C2 = 2/a_sc.
double contact_bound(double a_sc);

struct ContactEstimate {
    double c2 = 0.0;
    double norm = 0.0;     // two-body norm on the window
    bool normalized = true; // |norm - 1| <= 1e-6
};

/// C2 = 2 Int dz1 |Psi(z1, z1)|^2 for a generic two-coordinate wavefunction;
/// the coincidence value is obtained by Richardson extrapolation along the
/// relative coordinate. `quad` fixes the z1 integration panels.
ContactEstimate contact_from_wavefunction(const std::function<Complex(double, double)>& psi2,
                                          double window, const numerics::QuadratureSpec& quad);

/// Tail coefficients of the free-space bound state through order k^-4.
TailCoefficients tail_bound(const StatisticsKind& kind, double a_sc);

} // namespace anyon1d::freespace
