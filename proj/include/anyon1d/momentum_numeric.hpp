#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "anyon1d/errors.hpp"
#include "anyon1d/freespace.hpp"
#include "anyon1d/harmonic.hpp"
#include "anyon1d/statistics.hpp"

// Fully numerical momentum distributions (the independent cross-check of the
// closed forms), scaled tail extractors and tail fitting.
namespace anyon1d::momentum {

using Complex = std::complex<double>;
using statistics::StatisticsKind;

// Spatial grid: union of a uniform coarse grid and a geometric refinement
// around the contact point, 0 excluded, with composite trapezoid weights.
struct NonUniformGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double window = 0.0;
    int n_coarse = 0;
    int n_fine = 0;
    double fine_scale = 0.0;
};

NonUniformGrid build_grid(double window, int n_coarse, int n_fine, double fine_scale);

/// Trapezoid integral of f on the grid nodes.
double grid_integrate(const NonUniformGrid& grid, const std::function<double(double)>& f);

// Separable two-body state: Psi(z1, z2) = com(Z) rel(z). The free-space case
// carries a zero-momentum plane-wave center of mass whose box length drops
// out of n(k).
struct ProductState {
    enum class Com { PlaneWaveZero, HarmonicGround };

    statistics::RelativeWavefunction rel;
    Com com = Com::HarmonicGround;
};

struct MomentumDistribution {
    std::vector<double> k_nodes;
    std::vector<double> values;
    StatisticsKind kind;
    double norm_check = std::numeric_limits<double>::quiet_NaN();
};

/// n(k) = 2 Int dz2 |Int dz1 e^{-i k z1} Psi(z1, z2)|^2 by nested quadrature;
/// the inner oscillatory integral splits the z1 domain at the cusp line
/// z1 = z2 with at least 8 panels per oscillation period.
MomentumDistribution momentum_distribution(const std::function<Complex(double, double)>& psi2,
                                           const NonUniformGrid& grid,
                                           const std::vector<double>& k_nodes,
                                           const StatisticsKind& kind);

/// Product-state route; for the plane-wave center of mass this reduces to
/// 2 |rel_hat(k)|^2.
MomentumDistribution momentum_distribution(const ProductState& state, const NonUniformGrid& grid,
                                           const std::vector<double>& k_nodes);

/// Trapped anyon family at shared relative energy: computes the boson/fermion
/// transforms once and recombines them for every requested alpha.
std::vector<MomentumDistribution> momentum_alpha_sweep(const harmonic::TrapRelativeState& base,
                                                       bool plus_family,
                                                       const std::vector<double>& alphas,
                                                       const NonUniformGrid& grid,
                                                       const std::vector<double>& k_nodes);

// Quadrature rule in k for normalization checks, refined around the peak.
struct KRule {
    std::vector<double> k;
    std::vector<double> w;
    double extent = 0.0;
};

KRule normalization_k_rule(double k_extent);

/// (1/2pi) [sum w n(k) + analytic remainder beyond |k| = extent from the tail
/// coefficients].
double normalization_from_samples(const KRule& rule, const std::vector<double>& n_values,
                                  const freespace::TailCoefficients& tail);

/// (1/2pi) Int n dk with the analytic remainder beyond |k| = k_extent taken
/// from the supplied tail coefficients.
double momentum_normalization(const ProductState& state, const NonUniformGrid& grid,
                              double k_extent, const freespace::TailCoefficients& tail);

struct TailScalings {
    std::vector<double> k;
    std::vector<double> theta;    // n k^2
    std::vector<double> xi;       // (n - c2/k^2) k^3
    std::vector<double> upsilon;  // (n - c2/k^2 - c3/k^3) k^4
};

/// Scaled/shifted tail extractors; c2 and c3 are formed from the universal
/// expressions with the given contact, scattering length and alpha.
TailScalings theta_xi_upsilon(const MomentumDistribution& nd, double contact,
                              const harmonic::ScatteringLength& a_sc, double alpha);

/// Least-squares fit n(k) ~ c2/k^2 + c3/k^3 + c4/k^4 on [k_min, k_max], using
/// the parity-even part of the samples for c2, c4 and the odd part for c3.
freespace::TailCoefficients fit_tail(const MomentumDistribution& nd, double k_min, double k_max);

} // namespace anyon1d::momentum
