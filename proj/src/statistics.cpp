#include "anyon1d/statistics.hpp"

#include <algorithm>
#include <cmath>

namespace anyon1d::statistics {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double sign(double z) {
    if (z == 0.0) throw DomainError("sign undefined at z = 0");
    return z > 0.0 ? 1.0 : -1.0;
}

StatisticsKind StatisticsKind::bosonic_anyon(double alpha) {
    return {Family::BosonicAnyon, std::clamp(alpha, 0.0, 1.0)};
}

StatisticsKind StatisticsKind::fermionic_anyon(double alpha) {
    return {Family::FermionicAnyon, std::clamp(alpha, 0.0, 1.0)};
}

std::string StatisticsKind::name() const {
    switch (family) {
        case Family::Boson: return "boson";
        case Family::Fermion: return "fermion";
        case Family::BosonicAnyon: return "ba(alpha=" + std::to_string(alpha) + ")";
        case Family::FermionicAnyon: return "fa(alpha=" + std::to_string(alpha) + ")";
    }
    return {};
}

Complex exchange_phase(double alpha, double z) {
    double s = sign(z);
    // exp(-i pi alpha s) = cos(pi alpha) - i s sin(pi alpha)
    return {std::cos(kPi * alpha), -s * std::sin(kPi * alpha)};
}

Complex anyon_norm(double alpha) {
    double re = 1.0 - alpha, im = -alpha;
    double n = std::hypot(re, im);
    return {re / n, im / n};
}

Complex reference_function(const StatisticsKind& kind, RefKind which, double k, double z) {
    if (!(k > 0.0)) throw DomainError("reference_function: requires k > 0");
    double s = sign(z);
    double snkz = std::sin(k * z), cskz = std::cos(k * z);
    switch (kind.family) {
        case Family::Boson:
            return which == RefKind::Regular ? Complex(s * snkz) : Complex(cskz);
        case Family::Fermion:
            return which == RefKind::Regular ? Complex(snkz) : Complex(s * cskz);
        default:
            break;
    }
    double c = std::cos(0.5 * kPi * kind.alpha), si = std::sin(0.5 * kPi * kind.alpha);
    Complex n = anyon_norm(kind.alpha);
    if (kind.family == Family::BosonicAnyon) {
        if (which == RefKind::Regular) return n * Complex(c * s * snkz, si * snkz);
        return n * Complex(c * cskz, si * s * cskz);
    }
    if (which == RefKind::Regular) return n * Complex(c * snkz, si * s * snkz);
    return n * Complex(c * s * cskz, si * cskz);
}

RelativeWavefunction anyonize(const StatisticsKind& target, const RelativeWavefunction& base) {
    bool ok = (target.family == Family::BosonicAnyon && base.kind.family == Family::Boson) ||
              (target.family == Family::FermionicAnyon && base.kind.family == Family::Fermion);
    if (!ok)
        throw KindMismatch("anyonize: base statistics must be the anyon family's parent");
    double alpha = target.alpha;
    Complex norm = anyon_norm(alpha);
    auto parent = base.eval;
    return RelativeWavefunction{
        [alpha, norm, parent](double z) {
            // S^dag_{alpha/2}(z) = exp(+i pi alpha sign(z) / 2)
            return norm * std::conj(exchange_phase(0.5 * alpha, z)) * parent(z);
        },
        target,
        base.label,
    };
}

RelativeWavefunction ba_fa_map(const RelativeWavefunction& input) {
    if (!input.kind.is_anyon())
        throw KindMismatch("ba_fa_map: input must be a bosonic or fermionic anyon");
    StatisticsKind mapped = input.kind;
    mapped.family = input.kind.family == Family::BosonicAnyon ? Family::FermionicAnyon
                                                              : Family::BosonicAnyon;
    auto inner = input.eval;
    return RelativeWavefunction{
        [inner](double z) { return sign(z) * inner(z); },
        mapped,
        input.label,
    };
}

double exchange_residual(const RelativeWavefunction& w, std::span<const double> z_samples) {
    if (z_samples.empty()) throw DomainError("exchange_residual: no samples");
    double fam_sign = w.kind.plus_family() ? 1.0 : -1.0;
    double alpha = w.kind.exchange_alpha();
    double worst = 0.0;
    for (double z : z_samples) {
        Complex lhs = w.eval(-z);
        Complex rhs = fam_sign * exchange_phase(alpha, z) * w.eval(z);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace anyon1d::statistics
