#include "anyon1d/harmonic.hpp"

#include <cmath>

#include "anyon1d/numerics.hpp"

namespace anyon1d::harmonic {

namespace num = anyon1d::numerics;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
constexpr double kProfileExtent = 20.0;

int nearest_limit_index(double epsilon, double offset) {
    // smallest n >= 0 with epsilon ~ offset + 2n, or -1
    double n = 0.5 * (epsilon - offset);
    double r = std::round(n);
    if (r >= 0.0 && std::abs(n - r) < 5e-13) return static_cast<int>(r);
    return -1;
}

double gamma_a(double epsilon) { return num::gamma(0.25 - 0.5 * epsilon); }

} // namespace

ScatteringLength asc_from_epsilon(double epsilon) {
    if (nearest_limit_index(epsilon, 0.5) >= 0) return ScatteringLength::infinite_a();
    if (nearest_limit_index(epsilon, 1.5) >= 0) return ScatteringLength::finite(0.0);
    double a = gamma_a(epsilon) * num::rgamma(0.75 - 0.5 * epsilon) / kSqrt2;
    return ScatteringLength::finite(a);
}

double epsilon_from_asc(const ScatteringLength& a_sc, int branch) {
    if (branch < 0) throw BranchOutOfRange("epsilon_from_asc: branch must be >= 0");
    if (a_sc.infinite) return 0.5 + 2.0 * branch;
    double a = a_sc.value;
    if (a == 0.0) return 1.5 + 2.0 * branch;

    auto f = [a](double eps) { return asc_from_epsilon(eps).value - a; };
    constexpr double kShrink = 1e-8;

    double lo, hi;
    if (a > 0.0) {
        if (branch == 0) {
            // semi-infinite molecular branch (-inf, 1/2): march the lower edge
            // down until the sign flips
            hi = 0.5 - kShrink;
            double step = 1.0;
            lo = hi - step;
            int guard = 0;
            while (f(lo) > 0.0) {
                step *= 2.0;
                lo = 0.5 - step;
                if (++guard > 70)
                    throw BranchOutOfRange("epsilon_from_asc: no root found on branch 0");
            }
        } else {
            lo = 2.0 * branch - 0.5 + kShrink;
            hi = 2.0 * branch + 0.5 - kShrink;
        }
    } else {
        lo = 2.0 * branch + 0.5 + kShrink;
        hi = 2.0 * branch + 1.5 - kShrink;
    }
    auto bracket = num::make_bracket(f, lo, hi);
    return num::find_root(f, bracket, 1e-13);
}

// ---------------------------------------------------------------------------
// Radial profile cache
// ---------------------------------------------------------------------------

double ChebyshevSeries::operator()(double x) const {
    double t = (2.0 * x - lo - hi) / (hi - lo);
    double b0 = 0.0, b1 = 0.0;
    for (size_t i = coef.size(); i-- > 1;) {
        double b2 = b1;
        b1 = b0;
        b0 = 2.0 * t * b1 - b2 + coef[i];
    }
    return t * b0 - b1 + coef[0];
}

namespace {

ChebyshevSeries build_profile(double nu_plus) {
    double a = -nu_plus;
    auto f = [a](double z) {
        double x = 0.5 * z * z;
        if (x < 1e-300) x = 1e-300;
        return std::exp(-0.25 * z * z) * num::kummer_u(a, x);
    };
    for (int n = 768; n <= 3072; n *= 2) {
        ChebyshevSeries s;
        s.lo = 0.0;
        s.hi = kProfileExtent;
        std::vector<double> samples(n);
        for (int j = 0; j < n; ++j) {
            double t = std::cos(kPi * (j + 0.5) / n);
            samples[j] = f(0.5 * (s.lo + s.hi) + 0.5 * (s.hi - s.lo) * t);
        }
        s.coef.assign(n, 0.0);
        double peak = 0.0;
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += samples[j] * std::cos(kPi * k * (j + 0.5) / n);
            s.coef[k] = 2.0 * acc / n;
            peak = std::max(peak, std::abs(s.coef[k]));
        }
        s.coef[0] *= 0.5;
        double tail = 0.0;
        for (int k = n - 8; k < n; ++k) tail = std::max(tail, std::abs(s.coef[k]));
        if (tail < 1e-13 * peak) {
            size_t keep = s.coef.size();
            while (keep > 8 && std::abs(s.coef[keep - 1]) < 1e-15 * peak) --keep;
            s.coef.resize(keep);
            return s;
        }
    }
    throw Error("harmonic: radial profile expansion did not converge");
}

double profile_norm(const ChebyshevSeries& profile) {
    // M(nu+) via cusp-aware quadrature of the squared profile; the integrand
    // is half-line smooth so geometric panels near 0 plus uniform panels past
    // z = 1 converge to machine level (the profile vanishes identically well
    // before the upper limit).
    num::QuadratureSpec spec;
    spec.panels = num::split_geometric(0.0, 1.0, 24, 0.0);
    auto outer = num::split_uniform(1.0, kProfileExtent, 38);
    spec.panels.insert(spec.panels.end(), outer.begin(), outer.end());
    double integral = 2.0 * num::integrate_real(
        [&profile](double z) { double u = profile(z); return u * u; }, spec);
    return 1.0 / std::sqrt(integral);
}

} // namespace

TrapRelativeState make_trap_state(const StatisticsKind& kind, double epsilon) {
    TrapRelativeState st;
    st.epsilon = epsilon;
    st.nu_plus = 0.5 * epsilon - 0.25;
    st.nu_minus = st.nu_plus - 0.5;
    st.a_sc = asc_from_epsilon(epsilon);
    st.kind = kind;
    st.profile = std::make_shared<const ChebyshevSeries>(build_profile(st.nu_plus));
    st.norm = profile_norm(*st.profile);
    return st;
}

TrapRelativeState with_kind(const TrapRelativeState& state, const StatisticsKind& kind) {
    TrapRelativeState out = state;
    out.kind = kind;
    return out;
}

Complex relative_wavefunction(const TrapRelativeState& state, double z) {
    double s = statistics::sign(z);
    // the profile magnitude is below 1e-40 at its domain edge
    if (std::abs(z) >= state.profile->hi) return 0.0;
    double u = state.norm * (*state.profile)(std::abs(z));
    double alpha = state.kind.exchange_alpha();
    switch (state.kind.family) {
        case statistics::Family::Boson:
            return {u, 0.0};
        case statistics::Family::Fermion:
            return {s * u, 0.0};
        default:
            break;
    }
    double c = std::cos(0.5 * kPi * alpha), si = std::sin(0.5 * kPi * alpha);
    Complex mix = state.kind.plus_family() ? Complex(c, si * s) : Complex(c * s, si);
    return statistics::anyon_norm(alpha) * mix * u;
}

RelativeWavefunction as_wavefunction(const TrapRelativeState& state) {
    TrapRelativeState copy = state;
    return RelativeWavefunction{
        [copy](double z) { return relative_wavefunction(copy, z); },
        state.kind,
        "HO eps=" + std::to_string(state.epsilon),
    };
}

double com_wavefunction(int M, double Z) {
    if (M < 0 || M > 200) throw DomainError("com_wavefunction: M must be in [0, 200]");
    // orthonormal oscillator functions in y = sqrt(2) Z avoid 2^M M! overflow
    double y = kSqrt2 * Z;
    double h0 = std::exp(-0.5 * y * y) / std::pow(kPi, 0.25);
    if (M == 0) return std::pow(2.0, 0.25) * h0;
    double h1 = kSqrt2 * y * h0;
    for (int k = 1; k < M; ++k) {
        double h2 = std::sqrt(2.0 / (k + 1.0)) * y * h1 - std::sqrt(k / (k + 1.0)) * h0;
        h0 = h1;
        h1 = h2;
    }
    return std::pow(2.0, 0.25) * h1;
}

double contact_ho(double epsilon) {
    auto st = make_trap_state(StatisticsKind::boson(), epsilon);
    double r = st.norm * num::rgamma(0.75 - 0.5 * epsilon);
    return 2.0 * kPi * r * r;
}

double contact_ho_over_asc(double epsilon) {
    auto st = make_trap_state(StatisticsKind::boson(), epsilon);
    return 2.0 * kSqrt2 * kPi * st.norm * st.norm * num::rgamma(0.75 - 0.5 * epsilon) *
           num::rgamma(0.25 - 0.5 * epsilon);
}

double contact_ho_over_asc2(double epsilon) {
    auto st = make_trap_state(StatisticsKind::boson(), epsilon);
    double r = st.norm * num::rgamma(0.25 - 0.5 * epsilon);
    return 4.0 * kPi * r * r;
}

double k2_coefficient(double epsilon) {
    auto a = asc_from_epsilon(epsilon);
    double factor = 2.0 * epsilon + 0.75;
    if (a.infinite) return factor;  // ratio K/a_sc^2
    return factor * a.value * a.value;
}

TailCoefficients tail_ho(const StatisticsKind& kind, double epsilon) {
    auto st = make_trap_state(StatisticsKind::boson(), epsilon);
    double m2 = st.norm * st.norm;
    double rga = num::rgamma(0.25 - 0.5 * epsilon);
    double rgb = num::rgamma(0.75 - 0.5 * epsilon);
    double c2_contact = 2.0 * kPi * m2 * rgb * rgb;
    double c2_over_a = 2.0 * kSqrt2 * kPi * m2 * rga * rgb;
    double c2_over_a2 = 4.0 * kPi * m2 * rga * rga;

    double alpha = kind.exchange_alpha();
    double cc = std::cos(0.5 * kPi * alpha), ss = std::sin(0.5 * kPi * alpha);
    double s2 = ss * ss, c2v = cc * cc;
    bool plus = kind.plus_family();
    double u2 = plus ? s2 : c2v;    // k^-2 channel weight
    double u4 = plus ? c2v : s2;    // universal k^-4 channel weight
    double fam = plus ? 1.0 : -1.0;
    double kfactor = 2.0 * epsilon + 0.75;  // K_{2,eps}/a_sc^2

    using freespace::Universality;
    TailCoefficients out;
    out.c2 = 4.0 * c2_contact * u2;
    out.c3 = fam * 4.0 * c2_over_a * std::sin(kPi * alpha);
    double universal4 = 4.0 * c2_over_a2 * u4;
    double nonuniversal4 = 4.0 * c2_contact * kfactor * u2;
    out.c4 = universal4 + nonuniversal4;
    out.u2 = out.c2 == 0.0 ? Universality::Absent : Universality::Universal;
    out.u3 = out.c3 == 0.0 ? Universality::Absent : Universality::Universal;
    if (out.c4 == 0.0)
        out.u4 = Universality::Absent;
    else
        out.u4 = nonuniversal4 == 0.0 ? Universality::Universal : Universality::MixedUniversality;
    return out;
}

std::array<Complex, 5> short_distance_expansion(const TrapTwoBodyState& state, double z2) {
    if (state.com_n != 0)
        throw DomainError("short_distance_expansion: only the M = 0 center-of-mass state");
    const TrapRelativeState& rel = state.relative;
    if (!rel.kind.plus_family())
        throw DomainError("short_distance_expansion: bosonic-anyon states only");
    if (std::abs(z2) > 4.0)
        throw DomainError("short_distance_expansion: |z2| must be <= 4 a_HO");
    if (rel.a_sc.infinite || rel.a_sc.value == 0.0)
        throw DomainError("short_distance_expansion: requires finite non-zero a_sc");

    double epsilon = rel.epsilon;
    double alpha = rel.kind.exchange_alpha();
    double j_eps = kSqrt2 * rel.a_sc.value;  // J(eps)
    Complex prefactor = statistics::anyon_norm(alpha) * std::polar(1.0, 0.5 * kPi * alpha) *
                        rel.norm * std::pow(2.0 * kPi, 0.25) * std::exp(-z2 * z2) *
                        num::rgamma(0.75 - 0.5 * epsilon);
    return {
        prefactor,
        prefactor * (-kSqrt2 / j_eps),
        prefactor * (-z2),
        prefactor * (-0.25 - 0.5 * epsilon),
        prefactor * (0.5 * z2 * z2),
    };
}

} // namespace anyon1d::harmonic
