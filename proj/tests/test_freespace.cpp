#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "anyon1d/freespace.hpp"
#include "anyon1d/numerics.hpp"
#include "anyon1d/zerorange.hpp"

using namespace anyon1d;
using namespace anyon1d::freespace;
using statistics::StatisticsKind;
namespace num = anyon1d::numerics;

namespace {

constexpr double kPi = 3.14159265358979323846;
using C = std::complex<double>;

// golden-section maximization oracle
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int i = 0; i < 200; ++i) {
        if (f(c) > f(d)) b = d; else a = c;
        c = b - gr * (b - a);
        d = a + gr * (b - a);
        if (std::abs(b - a) < 1e-13) break;
    }
    return 0.5 * (a + b);
}

} // namespace

TEST_SUITE_BEGIN("freespace");

TEST_CASE("obdm_bound values") {
    auto ba0 = StatisticsKind::bosonic_anyon(0.0);
    auto ba5 = StatisticsKind::bosonic_anyon(0.5);
    CHECK(std::abs(obdm_bound(ba5, 1.0, 0.3, 0.3) - C(1.0, 0.0)) == 0.0);
    CHECK(std::abs(obdm_bound(ba0, 1.0, 0.5, -0.5) - C(2.0 * std::exp(-1.0), 0.0)) < 1e-15);
    CHECK(std::abs(obdm_bound(ba5, 1.0, 0.5, -0.5) -
                   std::exp(-1.0) * C(1.0, 1.0)) < 1e-15);
}

TEST_CASE("obdm_bound is Hermitian and satisfies the mirror relations") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> zd(-3.0, 3.0), ad(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        double z1 = zd(rng), z1p = zd(rng), alpha = ad(rng);
        auto ba = StatisticsKind::bosonic_anyon(alpha);
        auto fa_m = StatisticsKind::fermionic_anyon(1.0 - alpha);
        C r1 = obdm_bound(ba, 1.3, z1, z1p);
        CHECK(std::abs(r1 - std::conj(obdm_bound(ba, 1.3, z1p, z1))) < 1e-15);
        // Re rho_{a,+} = Re rho_{1-a,-}; Im rho_{a,+} = -Im rho_{1-a,-}
        C r2 = obdm_bound(fa_m, 1.3, z1, z1p);
        CHECK(std::abs(r1.real() - r2.real()) < 1e-14);
        CHECK(std::abs(r1.imag() + r2.imag()) < 1e-14);
    }
}

TEST_CASE("obdm_bound imaginary part is odd and vanishes at the endpoints") {
    for (double z1 : {0.2, 0.9, 2.4}) {
        for (bool plus : {true, false}) {
            auto k5 = plus ? StatisticsKind::bosonic_anyon(0.5)
                           : StatisticsKind::fermionic_anyon(0.5);
            double im_p = obdm_bound(k5, 1.0, z1, -z1).imag();
            double im_m = obdm_bound(k5, 1.0, -z1, z1).imag();
            CHECK(std::abs(im_p + im_m) < 1e-15);
            CHECK(std::abs(im_p) > 1e-3);  // generically non-zero
            auto k0 = plus ? StatisticsKind::bosonic_anyon(0.0)
                           : StatisticsKind::fermionic_anyon(0.0);
            auto k1 = plus ? StatisticsKind::bosonic_anyon(1.0)
                           : StatisticsKind::fermionic_anyon(1.0);
            CHECK(obdm_bound(k0, 1.0, z1, -z1).imag() == 0.0);
            CHECK(std::abs(obdm_bound(k1, 1.0, z1, -z1).imag()) < 1e-15);
        }
    }
}

TEST_CASE("momentum_bound values") {
    CHECK(momentum_bound(StatisticsKind::bosonic_anyon(0.0), 1.0, 0.0) ==
          doctest::Approx(8.0).epsilon(1e-14));
    CHECK(momentum_bound(StatisticsKind::bosonic_anyon(1.0), 1.0, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(momentum_bound(StatisticsKind::bosonic_anyon(0.5), 1.0, 1.0) ==
          doctest::Approx(4.0).epsilon(1e-14));
    // boson/fermion aliases match the alpha = 0 anyon rows
    CHECK(momentum_bound(StatisticsKind::boson(), 2.0, 0.7) ==
          momentum_bound(StatisticsKind::bosonic_anyon(0.0), 2.0, 0.7));
    CHECK(momentum_bound(StatisticsKind::fermion(), 2.0, 0.7) ==
          momentum_bound(StatisticsKind::fermionic_anyon(0.0), 2.0, 0.7));
}

TEST_CASE("momentum_bound chiral mirror and formal shift") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ad(0.0, 1.0), kd(-6.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        double alpha = ad(rng), k = kd(rng);
        double lhs = momentum_bound(StatisticsKind::bosonic_anyon(alpha), 1.4, k);
        double rhs = momentum_bound(StatisticsKind::fermionic_anyon(1.0 - alpha), 1.4, -k);
        CHECK(std::abs(lhs - rhs) < 1e-14 * std::max(1.0, lhs));
        // n_{alpha,+}(k) = n_{alpha+1,-}(k) with the extended-parameter formula
        double shifted = momentum_bound_raw(false, alpha + 1.0, 1.4, k);
        CHECK(std::abs(lhs - shifted) < 1e-13 * std::max(1.0, lhs));
        double lhs_m = momentum_bound(StatisticsKind::fermionic_anyon(alpha), 1.4, k);
        double shifted_m = momentum_bound_raw(true, alpha - 1.0, 1.4, k);
        CHECK(std::abs(lhs_m - shifted_m) < 1e-13 * std::max(1.0, lhs_m));
    }
}

TEST_CASE("momentum_bound normalization with analytic tail remainder") {
    for (double alpha : {0.0, 0.3, 0.5, 0.8, 1.0}) {
        for (bool plus : {true, false}) {
            auto kind = plus ? StatisticsKind::bosonic_anyon(alpha)
                             : StatisticsKind::fermionic_anyon(alpha);
            double a = 1.7;
            double K = 200.0 / a;
            num::QuadratureSpec spec;
            spec.panels = num::split_uniform(-5.0 / a, 5.0 / a, 40);
            auto lo = num::split_geometric(-K, -5.0 / a, 20, -5.0 / a);
            auto hi = num::split_geometric(5.0 / a, K, 20, 5.0 / a);
            spec.panels.insert(spec.panels.begin(), lo.begin(), lo.end());
            spec.panels.insert(spec.panels.end(), hi.begin(), hi.end());
            double core = num::integrate_real(
                [&](double k) { return momentum_bound(kind, a, k); }, spec);
            auto tail = tail_bound(kind, a);
            double remainder = 2.0 * tail.c2 / K + 2.0 * tail.c4 / (3.0 * K * K * K);
            double total = (core + remainder) / (2.0 * kPi);
            CHECK(std::abs(total - 2.0) < 1e-8);
        }
    }
}

TEST_CASE("extrema_bound closed forms") {
    auto ba0 = extrema_bound(StatisticsKind::bosonic_anyon(0.0), 1.0);
    CHECK(ba0[0].location_k == 0.0);
    CHECK(ba0[0].value == doctest::Approx(8.0));
    CHECK(ba0[0].which == ExtremumWhich::GlobalMax);
    CHECK(ba0[1].value == doctest::Approx(0.0));
    CHECK(std::isinf(ba0[1].location_k));

    auto fa0 = extrema_bound(StatisticsKind::fermionic_anyon(0.0), 1.0);
    CHECK(fa0[0].value == doctest::Approx(2.0));
    CHECK(fa0[1].value == doctest::Approx(2.0));
    CHECK(fa0[0].location_k == doctest::Approx(-1.0));
    CHECK(fa0[1].location_k == doctest::Approx(1.0));

    auto ba5 = extrema_bound(StatisticsKind::bosonic_anyon(0.5), 1.0);
    CHECK(ba5[0].location_k == doctest::Approx(std::tan(kPi / 8.0)).epsilon(1e-12));
    CHECK(ba5[0].value == doctest::Approx(5.828427124746190).epsilon(1e-12));
}

TEST_CASE("extrema_bound agrees with golden-section maximization") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (bool plus : {true, false}) {
            auto kind = plus ? StatisticsKind::bosonic_anyon(alpha)
                             : StatisticsKind::fermionic_anyon(alpha);
            double a = 1.3;
            auto recs = extrema_bound(kind, a);
            auto n = [&](double k) { return momentum_bound(kind, a, k); };
            for (const auto& r : recs) {
                double k0 = golden_max(n, r.location_k - 0.4 / a, r.location_k + 0.4 / a);
                // location localization by value comparison is sqrt(eps)-limited
                CHECK(std::abs(k0 - r.location_k) < 1e-6);
                CHECK(std::abs(n(k0) - r.value) < 1e-9 * std::max(1.0, r.value));
            }
        }
    }
}

TEST_CASE("the minus-family local-max table entry is non-negative") {
    // a [3 - cos(alpha pi) - 4 sin(pi alpha / 2)] rewritten stably equals
    // 8 a sin^4(pi (1-alpha)/4) >= 0
    for (double alpha : {0.0, 0.2, 0.5, 0.77, 0.95, 1.0}) {
        auto recs = extrema_bound(StatisticsKind::fermionic_anyon(alpha), 1.0);
        double naive = 3.0 - std::cos(alpha * kPi) - 4.0 * std::sin(0.5 * kPi * alpha);
        CHECK(recs[1].value >= 0.0);
        CHECK(std::abs(recs[1].value - naive) < 1e-12);
    }
}

TEST_CASE("contact_bound") {
    CHECK(contact_bound(1.0) == doctest::Approx(2.0));
    CHECK(contact_bound(2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(contact_bound(-1.0), DomainError);
}

TEST_CASE("contact_from_wavefunction on the bound-state quartet") {
    double a = 1.0;
    double L = 60.0 * a;
    num::QuadratureSpec quad;
    quad.panels = num::split_uniform(-0.5 * L, 0.5 * L, 48);
    quad.points_per_panel = 8;
    for (double alpha : {0.0, 0.5}) {
        for (bool plus : {true, false}) {
            auto kind = plus ? StatisticsKind::bosonic_anyon(alpha)
                             : StatisticsKind::fermionic_anyon(alpha);
            auto bs = zerorange::bound_state(kind, zerorange::ScatteringModel::finite(a));
            auto psi = bs.wavefunction;
            auto psi2 = [psi, L](double z1, double z2) {
                return psi(z1 - z2) / std::sqrt(L);
            };
            auto est = contact_from_wavefunction(psi2, L, quad);
            CHECK(est.normalized);
            CHECK(std::abs(est.c2 - contact_bound(a)) < 1e-8);
        }
    }
}

TEST_CASE("contact_from_wavefunction flags unnormalized input") {
    double L = 40.0;
    num::QuadratureSpec quad;
    quad.panels = num::split_uniform(-0.5 * L, 0.5 * L, 32);
    auto bs = zerorange::bound_state(StatisticsKind::boson(),
                                     zerorange::ScatteringModel::finite(1.0));
    auto psi = bs.wavefunction;
    auto psi2 = [psi, L](double z1, double z2) { return 1.3 * psi(z1 - z2) / std::sqrt(L); };
    auto est = contact_from_wavefunction(psi2, L, quad);
    CHECK_FALSE(est.normalized);
}

TEST_CASE("tail_bound closed forms") {
    auto t0 = tail_bound(StatisticsKind::bosonic_anyon(0.0), 1.0);
    CHECK(t0.c2 == 0.0);
    CHECK(t0.c3 == 0.0);
    CHECK(t0.c4 == doctest::Approx(8.0));
    CHECK(t0.u2 == Universality::Absent);
    CHECK(t0.u4 == Universality::Universal);

    auto t1 = tail_bound(StatisticsKind::bosonic_anyon(1.0), 1.0);
    CHECK(t1.c2 == doctest::Approx(8.0));
    CHECK(std::abs(t1.c3) < 1e-14);
    CHECK(t1.c4 == doctest::Approx(-16.0));
    CHECK(t1.u4 == Universality::MixedUniversality);

    auto tf = tail_bound(StatisticsKind::fermionic_anyon(0.5), 2.0);
    CHECK(tf.c2 == doctest::Approx(2.0));
    CHECK(tf.c3 == doctest::Approx(-2.0));
    CHECK(tf.c4 == doctest::Approx(-0.5));
    CHECK(tf.u4 == Universality::MixedUniversality);
}

TEST_CASE("tail_bound matches high-k behaviour of momentum_bound") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (bool plus : {true, false}) {
            auto kind = plus ? StatisticsKind::bosonic_anyon(alpha)
                             : StatisticsKind::fermionic_anyon(alpha);
            double a = 2.0;
            auto t = tail_bound(kind, a);
            auto upsilon = [&](double k) {
                double n = momentum_bound(kind, a, k);
                return (n - t.c2 / (k * k) - t.c3 / (k * k * k)) * k * k * k * k;
            };
            // Richardson in 1/k removes the k^-5 remainder
            double k1 = 500.0 / a, k2 = 1000.0 / a;
            double c4 = 2.0 * upsilon(k2) - upsilon(k1);
            CHECK(std::abs(c4 - t.c4) < 1e-3 * std::abs(t.c4));
        }
    }
}

TEST_SUITE_END();
