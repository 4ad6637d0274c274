#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "anyon1d/errors.hpp"

namespace anyon1d::numerics {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

/// Gamma function for real x, |x| <= ~170. Throws PoleError when x is within
/// 1e-14 of a non-positive integer.
double gamma(double x);

/// 1/Gamma(x); returns 0 at the poles instead of throwing.
double rgamma(double x);

/// sin(pi*x) with exact argument reduction (accurate near integers).
double sinpi(double x);

/// Confluent hypergeometric function of the second kind with fixed second
/// parameter b = 1/2: U(a, 1/2, x) for real a <= kKummerAMax and x > 0.
double kummer_u(double a, double x);

inline constexpr double kKummerAMax = 8.0;

/// Physicists' Hermite polynomial H_m(y), m <= 200, by forward recurrence.
double hermite(int m, double y);

/// Pochhammer symbol (lam)_n = lam (lam+1) ... (lam+n-1), with (lam)_0 = 1.
double pochhammer(double lam, int n);

// ---------------------------------------------------------------------------
// Bracketed root finding
// ---------------------------------------------------------------------------

struct RootBracket {
    double lo = 0.0;
    double hi = 0.0;
    int f_lo_sign = 0;
    int f_hi_sign = 0;

    RootBracket(double lo_, double hi_, int sign_lo, int sign_hi);
};

/// Evaluates f at both ends and records the signs. Throws NoSignChange if the
/// function does not change sign across [lo, hi].
RootBracket make_bracket(const std::function<double(double)>& f, double lo, double hi);

/// Safeguarded Brent iteration; converges for any continuous f with a sign
/// change on the bracket. Stops when |f| <= tol or the bracket width <= tol.
double find_root(const std::function<double(double)>& f, const RootBracket& bracket, double tol);

// ---------------------------------------------------------------------------
// Panel quadrature
// ---------------------------------------------------------------------------

enum class QuadScheme { GaussLegendre, Trapezoid };

struct Panel {
    double lo = 0.0;
    double hi = 0.0;
};

struct QuadratureSpec {
    std::vector<Panel> panels;
    int points_per_panel = 16;
    QuadScheme scheme = QuadScheme::GaussLegendre;
};

std::vector<Panel> split_uniform(double lo, double hi, int n_panels);

/// n_levels panels on [lo, hi] whose widths halve toward the endpoint
/// `toward` (must be lo or hi). The panel adjacent to `toward` has width
/// (hi-lo) * 2^-n_levels.
std::vector<Panel> split_geometric(double lo, double hi, int n_levels, double toward);

Complex integrate(const std::function<Complex(double)>& f, const QuadratureSpec& spec);
double integrate_real(const std::function<double(double)>& f, const QuadratureSpec& spec);

struct GlRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

/// Cached Gauss-Legendre rule with n points, n in [2, 64].
const GlRule& gl_rule(int n);

} // namespace anyon1d::numerics
