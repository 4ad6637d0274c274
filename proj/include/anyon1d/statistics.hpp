#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>

#include "anyon1d/errors.hpp"

namespace anyon1d::statistics {

using Complex = std::complex<double>;

enum class Family { Boson, Fermion, BosonicAnyon, FermionicAnyon };

// Exchange statistics tag. The statistical parameter alpha is carried only by
// the anyon variants; constructors clamp it to the physical domain [0, 1].
struct StatisticsKind {
    Family family = Family::Boson;
    double alpha = 0.0;

    static StatisticsKind boson() { return {Family::Boson, 0.0}; }
    static StatisticsKind fermion() { return {Family::Fermion, 0.0}; }
    static StatisticsKind bosonic_anyon(double alpha);
    static StatisticsKind fermionic_anyon(double alpha);

    bool is_anyon() const {
        return family == Family::BosonicAnyon || family == Family::FermionicAnyon;
    }
    // true for the "+" family (bosons, bosonic anyons)
    bool plus_family() const {
        return family == Family::Boson || family == Family::BosonicAnyon;
    }
    // statistical parameter entering the exchange phase; 0 for pure bosons/fermions
    double exchange_alpha() const { return is_anyon() ? alpha : 0.0; }

    std::string name() const;
};

/// Exchange operator S_alpha(z) = exp(-i pi alpha sign(z)). The extended
/// domain alpha in [0, 2] is accepted here (needed by the formal shifted-index
/// relations); z = 0 is rejected since sign(0) is undefined.
Complex exchange_phase(double alpha, double z);

/// Anyon normalization phase N(alpha) = [(1-alpha) - i alpha] / sqrt((1-alpha)^2 + alpha^2).
Complex anyon_norm(double alpha);

enum class RefKind { Regular, Irregular };

/// Regular/irregular free-particle reference functions for each exchange
/// statistics (rows of the reference-solution table).
Complex reference_function(const StatisticsKind& kind, RefKind which, double k, double z);

// A relative two-body wavefunction evaluator with its statistics tag.
struct RelativeWavefunction {
    std::function<Complex(double)> eval;
    StatisticsKind kind;
    std::string label;

    Complex operator()(double z) const { return eval(z); }
};

/// Maps a bosonic (fermionic) wavefunction to a bosonic-anyon (fermionic-anyon)
/// one: psi_alpha(z) = N(alpha) S^dag_{alpha/2}(z) psi(z).
RelativeWavefunction anyonize(const StatisticsKind& target, const RelativeWavefunction& base);

/// Two-particle bosonic-anyon <-> fermionic-anyon mapping: multiply by sign(z)
/// and toggle the family. Applying it twice restores the input pointwise.
RelativeWavefunction ba_fa_map(const RelativeWavefunction& input);

/// Max over samples of |w(-z) -+ S_alpha(z) w(z)| (sign fixed by w.kind);
/// zero for exact anyonic states.
double exchange_residual(const RelativeWavefunction& w, std::span<const double> z_samples);

/// sign(z); throws DomainError at z = 0.
double sign(double z);

} // namespace anyon1d::statistics
