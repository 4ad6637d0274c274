#include "anyon1d/freespace.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace anyon1d::freespace {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double a_sc) {
    if (!(a_sc > 0.0)) throw DomainError("freespace: requires a_sc > 0");
}

} // namespace

Complex obdm_bound(const StatisticsKind& kind, double a_sc, double z1, double z1p) {
    require_positive(a_sc);
    double d = z1 - z1p;
    if (d == 0.0) return 1.0;
    double fam = kind.plus_family() ? 1.0 : -1.0;
    double alpha = kind.exchange_alpha();
    double s = d > 0.0 ? 1.0 : -1.0;
    Complex phase = std::polar(1.0, alpha * kPi * s);
    return std::exp(-std::abs(d) / a_sc) * (1.0 + fam * phase * std::abs(d) / a_sc);
}

double momentum_bound_raw(bool plus_family, double alpha, double a_sc, double k) {
    require_positive(a_sc);
    double c = std::cos(0.5 * kPi * alpha), s = std::sin(0.5 * kPi * alpha);
    double ak = a_sc * k;
    double num = plus_family ? (c + ak * s) : (s - ak * c);
    double den = 1.0 + ak * ak;
    return 8.0 * a_sc * num * num / (den * den);
}

double momentum_bound(const StatisticsKind& kind, double a_sc, double k) {
    return momentum_bound_raw(kind.plus_family(), kind.exchange_alpha(), a_sc, k);
}

std::vector<ExtremumRecord> extrema_bound(const StatisticsKind& kind, double a_sc) {
    require_positive(a_sc);
    // The minus family is the chiral mirror of the plus family: locations at
    // alpha -> 1-alpha with flipped sign, equal peak values.
    double alpha = kind.exchange_alpha();
    bool plus = kind.plus_family();
    double ae = plus ? alpha : 1.0 - alpha;
    double sgn = plus ? 1.0 : -1.0;

    double t = std::tan(0.25 * kPi * ae);
    double c4 = std::pow(std::cos(0.25 * kPi * ae), 4);
    double s4 = std::pow(std::sin(0.25 * kPi * ae), 4);

    ExtremumRecord global{sgn * t / a_sc, 8.0 * a_sc * c4, ExtremumWhich::GlobalMax};
    ExtremumRecord local{};
    local.which = ExtremumWhich::LocalMax;
    local.value = 8.0 * a_sc * s4;
    local.location_k = (t == 0.0) ? -sgn * kInf : -sgn / (t * a_sc);
    return {global, local};
}

double contact_bound(double a_sc) {
    require_positive(a_sc);
    return 2.0 / a_sc;
}

ContactEstimate contact_from_wavefunction(const std::function<Complex(double, double)>& psi2,
                                          double window, const numerics::QuadratureSpec& quad) {
    // coincidence value along the diagonal by Richardson extrapolation in the
    // relative separation
    auto diag_sq = [&psi2](double z1) {
        constexpr int kLevels = 6;
        std::array<double, kLevels> h;
        std::array<Complex, kLevels> v;
        for (int j = 0; j < kLevels; ++j) {
            h[j] = 1e-2 * std::ldexp(1.0, -j);
            v[j] = psi2(z1 + 0.5 * h[j], z1 - 0.5 * h[j]);
        }
        std::array<Complex, kLevels> t = v;
        for (int k = 1; k < kLevels; ++k)
            for (int j = 0; j + k < kLevels; ++j)
                t[j] = t[j + 1] + (t[j + 1] - t[j]) * (h[j + k] / (h[j] - h[j + k]));
        return std::norm(t[0]);
    };
    double c2 = 2.0 * numerics::integrate_real(diag_sq, quad);

    // two-body norm on the window, in (z, Z) coordinates with the cusp line at z = 0
    numerics::QuadratureSpec zspec;
    zspec.panels = numerics::split_uniform(-0.5 * window, 0.0, 24);
    auto right = numerics::split_uniform(0.0, 0.5 * window, 24);
    zspec.panels.insert(zspec.panels.end(), right.begin(), right.end());
    zspec.points_per_panel = 8;
    numerics::QuadratureSpec Zspec;
    Zspec.panels = numerics::split_uniform(-0.5 * window, 0.5 * window, 32);
    Zspec.points_per_panel = 8;
    double norm = numerics::integrate_real(
        [&](double z) {
            return numerics::integrate_real(
                [&](double Z) { return std::norm(psi2(Z + 0.5 * z, Z - 0.5 * z)); }, Zspec);
        },
        zspec);

    ContactEstimate out;
    out.c2 = c2;
    out.norm = norm;
    out.normalized = std::abs(norm - 1.0) <= 1e-6;
    return out;
}

TailCoefficients tail_bound(const StatisticsKind& kind, double a_sc) {
    require_positive(a_sc);
    double alpha = kind.exchange_alpha();
    double contact = contact_bound(a_sc);
    double c = std::cos(0.5 * kPi * alpha), s = std::sin(0.5 * kPi * alpha);
    double fam = kind.plus_family() ? 1.0 : -1.0;
    double u2 = kind.plus_family() ? s * s : c * c;   // coefficient of the k^-2 channel
    double u4 = kind.plus_family() ? c * c : s * s;   // universal part of the k^-4 channel

    TailCoefficients out;
    out.c2 = 4.0 * contact * u2;
    out.c3 = fam * 4.0 * contact * std::sin(kPi * alpha) / a_sc;
    out.c4 = 4.0 * contact / (a_sc * a_sc) * (u4 - 2.0 * u2);
    out.u2 = out.c2 == 0.0 ? Universality::Absent : Universality::Universal;
    out.u3 = out.c3 == 0.0 ? Universality::Absent : Universality::Universal;
    if (out.c4 == 0.0)
        out.u4 = Universality::Absent;
    else
        out.u4 = (u2 == 0.0) ? Universality::Universal : Universality::MixedUniversality;
    return out;
}

} // namespace anyon1d::freespace
