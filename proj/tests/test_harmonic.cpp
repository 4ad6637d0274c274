#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "anyon1d/harmonic.hpp"
#include "anyon1d/numerics.hpp"
#include "anyon1d/zerorange.hpp"
#include "test_helpers.hpp"

using namespace anyon1d;
using namespace anyon1d::harmonic;
using statistics::StatisticsKind;
namespace num = anyon1d::numerics;

namespace {

constexpr double kPi = 3.14159265358979323846;
using C = std::complex<double>;

std::vector<double> sample_grid() {
    std::vector<double> zs;
    for (int i = 0; i < 50; ++i) {
        double z = 1e-3 * std::pow(10.0, 3.9 * i / 49.0);
        zs.push_back(z);
        zs.push_back(-z);
    }
    return zs;
}

double wf_norm(const TrapRelativeState& st) {
    num::QuadratureSpec spec;
    spec.panels = num::split_uniform(-18.0, 0.0, 36);
    auto right = num::split_uniform(0.0, 18.0, 36);
    spec.panels.insert(spec.panels.end(), right.begin(), right.end());
    return num::integrate_real(
        [&](double z) { return std::norm(relative_wavefunction(st, z)); }, spec);
}

} // namespace

TEST_SUITE_BEGIN("harmonic");

TEST_CASE("asc_from_epsilon limits and values") {
    CHECK(asc_from_epsilon(0.5).infinite);
    CHECK(asc_from_epsilon(4.5).infinite);
    CHECK_FALSE(asc_from_epsilon(1.5).infinite);
    CHECK(asc_from_epsilon(1.5).value == 0.0);
    CHECK(asc_from_epsilon(7.5).value == 0.0);
    CHECK(asc_from_epsilon(-0.5).value ==
          doctest::Approx(std::sqrt(0.5 * kPi)).epsilon(1e-12));
}

TEST_CASE("epsilon_from_asc at the exact limits") {
    for (int n = 0; n <= 3; ++n) {
        CHECK(epsilon_from_asc(ScatteringLength::infinite_a(), n) == 0.5 + 2.0 * n);
        CHECK(epsilon_from_asc(ScatteringLength::finite(0.0), n) == 1.5 + 2.0 * n);
    }
    CHECK_THROWS_AS(epsilon_from_asc(ScatteringLength::finite(1.0), -1), BranchOutOfRange);
}

TEST_CASE("epsilon_from_asc inverts asc_from_epsilon") {
    CHECK(epsilon_from_asc(ScatteringLength::finite(std::sqrt(0.5 * kPi)), 0) ==
          doctest::Approx(-0.5).epsilon(1e-10));
    // round trip across three branches, positive and negative a
    std::vector<std::pair<double, int>> cases;
    for (int i = 0; i < 9; ++i) cases.push_back({-8.0 + 0.83 * i, 0});          // eps < 1/2
    for (int i = 0; i < 8; ++i) cases.push_back({0.52 + 0.12 * i, 0});          // a < 0 branch
    for (int i = 0; i < 8; ++i) cases.push_back({1.55 + 0.11 * i, 1});          // a > 0 branch 1
    for (int i = 0; i < 8; ++i) cases.push_back({2.55 + 0.11 * i, 1});          // a < 0 branch 1
    for (int i = 0; i < 8; ++i) cases.push_back({3.55 + 0.11 * i, 2});          // a > 0 branch 2
    for (int i = 0; i < 9; ++i) cases.push_back({4.52 + 0.105 * i, 2});         // a < 0 branch 2
    for (auto [eps, branch] : cases) {
        auto a = asc_from_epsilon(eps);
        REQUIRE_FALSE(a.infinite);
        int b = a.value > 0.0 ? branch : branch;
        double back = epsilon_from_asc(a, b);
        CHECK(std::abs(back - eps) < 1e-9);
        double resid = asc_from_epsilon(back).value - a.value;
        CHECK(std::abs(resid) < 1e-10 * std::max(1.0, std::abs(a.value)));
    }
}

TEST_CASE("trap state quantum numbers") {
    auto st = make_trap_state(StatisticsKind::bosonic_anyon(0.5), -0.5);
    CHECK(st.nu_plus == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(st.nu_minus == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(st.nu_plus - st.nu_minus == 0.5);  // exact by construction
    CHECK(st.a_sc.value == doctest::Approx(std::sqrt(0.5 * kPi)).epsilon(1e-12));
}

TEST_CASE("relative_wavefunction closed forms at the spectrum limits") {
    // eps = 1/2 boson: (2 pi)^(-1/4) exp(-z^2/4)
    auto st = make_trap_state(StatisticsKind::boson(), 0.5);
    for (double z : {0.3, -1.1, 2.7}) {
        double want = std::pow(2.0 * kPi, -0.25) * std::exp(-0.25 * z * z);
        CHECK(std::abs(relative_wavefunction(st, z) - C(want, 0.0)) < 1e-11);
    }
    // eps = 3/2 fermion: odd function proportional to z exp(-z^2/4)
    auto stf = make_trap_state(StatisticsKind::fermion(), 1.5);
    auto w = as_wavefunction(stf);
    auto zs = sample_grid();
    CHECK(statistics::exchange_residual(w, zs) < 1e-12);
    double r = relative_wavefunction(stf, 1.0).real() / (1.0 * std::exp(-0.25));
    for (double z : {0.4, -0.9, 1.8}) {
        double want = r * z * std::exp(-0.25 * z * z);
        CHECK(std::abs(relative_wavefunction(stf, z) - C(want, 0.0)) < 1e-11);
    }
}

TEST_CASE("relative wavefunctions are normalized") {
    for (double eps : {-1.3, -0.5, 0.5, 0.9, 1.5, 2.1}) {
        auto st = make_trap_state(StatisticsKind::bosonic_anyon(0.5), eps);
        CHECK(wf_norm(st) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("trap states are eigenstates of the relative Hamiltonian") {
    for (double eps : {-0.5, 0.9, 1.5}) {
        for (double alpha : {0.0, 0.5}) {
            auto st = make_trap_state(StatisticsKind::bosonic_anyon(alpha), eps);
            double h = 1e-2;
            for (double z : {0.4, -0.8, 1.5, 2.6, -3.4}) {
                auto psi = [&](double x) { return relative_wavefunction(st, x); };
                C d2 = (-psi(z + 2 * h) + 16.0 * psi(z + h) - 30.0 * psi(z) +
                        16.0 * psi(z - h) - psi(z - 2 * h)) / (12.0 * h * h);
                C hpsi = -d2 + 0.25 * z * z * psi(z);
                CHECK(std::abs(hpsi - eps * psi(z)) < 1e-6 * std::max(1.0, std::abs(psi(z))));
            }
        }
    }
}

TEST_CASE("anyonic trap states satisfy exchange and boundary conditions") {
    auto zs = sample_grid();
    for (double eps : {-0.5, 0.9}) {
        for (double alpha : {0.25, 0.5, 0.75}) {
            for (bool plus : {true, false}) {
                auto kind = plus ? StatisticsKind::bosonic_anyon(alpha)
                                 : StatisticsKind::fermionic_anyon(alpha);
                auto st = make_trap_state(kind, eps);
                auto w = as_wavefunction(st);
                CHECK(statistics::exchange_residual(w, zs) < 1e-12);
                auto model = zerorange::ScatteringModel::finite(st.a_sc.value);
                CHECK(zerorange::boundary_residual(w, model) < 1e-8);
            }
        }
    }
}

TEST_CASE("ba_fa_map connects the trapped anyon pair") {
    auto ba = make_trap_state(StatisticsKind::bosonic_anyon(0.3), -0.5);
    auto fa = make_trap_state(StatisticsKind::fermionic_anyon(0.3), -0.5);
    auto mapped = statistics::ba_fa_map(as_wavefunction(ba));
    for (double z : {0.2, -0.2, 1.3, -2.4})
        CHECK(std::abs(mapped(z) - relative_wavefunction(fa, z)) < 1e-12);
}

TEST_CASE("com_wavefunction") {
    CHECK(com_wavefunction(0, 0.0) == doctest::Approx(std::pow(2.0 / kPi, 0.25)).epsilon(1e-14));
    CHECK(com_wavefunction(1, 0.0) == 0.0);
    // explicit small-M cross-check against the raw Hermite formula
    for (int m : {0, 1, 2, 3}) {
        double fact = 1.0;
        for (int k = 1; k <= m; ++k) fact *= k;
        for (double Z : {0.3, -0.7, 1.4}) {
            double want = std::sqrt(std::sqrt(2.0) / (std::pow(2.0, m) * fact * std::sqrt(kPi))) *
                          std::exp(-Z * Z) * num::hermite(m, std::sqrt(2.0) * Z);
            CHECK(com_wavefunction(m, Z) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    // normalization for assorted M, including large
    for (int m : {0, 1, 5, 40, 200}) {
        num::QuadratureSpec spec;
        spec.panels = num::split_uniform(-22.0, 22.0, 300);
        double nrm = num::integrate_real(
            [m](double Z) { double p = com_wavefunction(m, Z); return p * p; }, spec);
        CHECK(nrm == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("contact_ho at the non-interacting point") {
    CHECK(contact_ho(0.5) == doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(1e-9));
    // Appendix-style Pochhammer forms on the higher limits
    CHECK(contact_ho(2.5) ==
          doctest::Approx(std::sqrt(2.0 / kPi) * 0.5).epsilon(1e-9));  // (1/2)_1/(1)_1
    CHECK(contact_ho(3.5) == doctest::Approx(0.0));
    CHECK(contact_ho_over_asc2(3.5) ==
          doctest::Approx(std::sqrt(2.0 / kPi) * 1.5).epsilon(1e-9));  // (3/2)_1/(1)_1
    CHECK(contact_ho_over_asc2(1.5) == doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(1e-9));
}

TEST_CASE("contact_ho at eps = -1/2 against an erfc oracle") {
    // profile in closed form: sqrt(pi) e^{z^2/4} erfc(z/sqrt(2))
    num::QuadratureSpec spec;
    spec.panels = num::split_uniform(0.0, 40.0, 160);
    double integral = 2.0 * num::integrate_real(
        [](double z) {
            double v = std::sqrt(kPi) * std::exp(0.25 * z * z) * std::erfc(z / std::sqrt(2.0));
            return v * v;
        },
        spec);
    double m2 = 1.0 / integral;
    double want = 2.0 * kPi * m2;  // Gamma(3/4 - eps/2) = Gamma(1) = 1
    CHECK(contact_ho(-0.5) == doctest::Approx(want).epsilon(1e-9));
    // same number from the coincidence amplitude of the wavefunction
    auto st = make_trap_state(StatisticsKind::boson(), -0.5);
    double c2_wf = 2.0 * std::norm(relative_wavefunction(st, 1e-9));
    CHECK(contact_ho(-0.5) == doctest::Approx(c2_wf).epsilon(1e-7));
}

TEST_CASE("k2_coefficient") {
    CHECK(k2_coefficient(-0.5) == doctest::Approx(-kPi / 8.0).epsilon(1e-12));
    CHECK(k2_coefficient(1.5) == 0.0);
    CHECK(k2_coefficient(0.5) == doctest::Approx(1.75));  // ratio form at |a| = inf
}

TEST_CASE("tail_ho spec cells") {
    using freespace::Universality;
    // generic cell, alpha = 1 bosonic anyons
    double eps = -0.5;
    double c2 = contact_ho(eps);
    double a = asc_from_epsilon(eps).value;
    double K = k2_coefficient(eps);
    auto t1 = tail_ho(StatisticsKind::bosonic_anyon(1.0), eps);
    CHECK(t1.c2 == doctest::Approx(4.0 * c2).epsilon(1e-10));
    CHECK(std::abs(t1.c3) < 1e-12);
    CHECK(t1.c4 == doctest::Approx(4.0 * c2 * K / (a * a)).epsilon(1e-9));

    // non-interacting limit, alpha = 1/2
    auto t2 = tail_ho(StatisticsKind::bosonic_anyon(0.5), 0.5);
    double c2_half = std::sqrt(2.0 / kPi);
    CHECK(t2.c2 == doctest::Approx(2.0 * c2_half).epsilon(1e-9));
    CHECK(std::abs(t2.c3) < 1e-12);
    CHECK(t2.c4 == doctest::Approx(3.5 * c2_half).epsilon(1e-9));
    CHECK(t2.u4 == Universality::MixedUniversality);

    // fermionic anyons at alpha = 0, generic eps
    auto t3 = tail_ho(StatisticsKind::fermionic_anyon(0.0), eps);
    CHECK(t3.c2 == doctest::Approx(4.0 * c2).epsilon(1e-10));
    CHECK(std::abs(t3.c3) < 1e-12);
    CHECK(t3.c4 == doctest::Approx(4.0 * c2 * K / (a * a)).epsilon(1e-9));

    // hard-core limit: universal k^-4 only
    auto t4 = tail_ho(StatisticsKind::bosonic_anyon(0.5), 1.5);
    CHECK(t4.c2 == doctest::Approx(0.0));
    CHECK(t4.c4 == doctest::Approx(4.0 * std::sqrt(2.0 / kPi) * 0.5).epsilon(1e-9));
    CHECK(t4.u4 == Universality::Universal);
}

TEST_CASE("contact is independent of the statistics kind") {
    for (double eps : {-0.5, 0.9}) {
        std::vector<double> values;
        for (auto kind : {StatisticsKind::boson(), StatisticsKind::fermion(),
                          StatisticsKind::bosonic_anyon(0.5),
                          StatisticsKind::fermionic_anyon(0.25)}) {
            auto st = make_trap_state(kind, eps);
            values.push_back(2.0 * std::norm(relative_wavefunction(st, 1e-9)));
        }
        for (double v : values) CHECK(std::abs(v - values.front()) < 1e-9);
        CHECK(std::abs(values.front() - contact_ho(eps)) < 1e-7);
    }
}

TEST_CASE("short_distance_expansion coefficients") {
    auto st = make_trap_state(StatisticsKind::bosonic_anyon(0.5), -0.5);
    TrapTwoBodyState two{0, st};
    double a = st.a_sc.value;

    auto c0 = short_distance_expansion(two, 0.0);
    CHECK(std::abs(c0[1] / c0[0] - C(-1.0 / a, 0.0)) < 1e-12);  // -sqrt(2)/J = -1/a
    CHECK(std::abs(c0[2]) == 0.0);                              // xi z2 term vanishes at z2 = 0

    // finite-difference oracle on the assembled product Phi_0 psi
    for (double z2 : {0.0, 0.5, 1.0}) {
        auto coef = short_distance_expansion(two, z2);
        auto f = [&](double xi) {
            return C(com_wavefunction(0, z2 + 0.5 * xi), 0.0) * relative_wavefunction(st, xi);
        };
        double alpha = 0.5;
        auto plus = testutil::one_sided_expansion(f, +1.0);
        auto minus_raw = testutil::one_sided_expansion(f, -1.0);
        // fold out the opposite-side exchange phase
        C minus_p = minus_raw.p * std::polar(1.0, kPi * alpha);
        CHECK(std::abs(plus.p - coef[0]) < 1e-6 * std::abs(coef[0]));
        CHECK(std::abs(minus_p - coef[0]) < 1e-6 * std::abs(coef[0]));
        double abs_xi = 0.5 * (plus.c1 - minus_raw.c1);
        double xi_z2 = 0.5 * (plus.c1 + minus_raw.c1);
        CHECK(std::abs(plus.p * abs_xi - coef[1]) < 1e-6 * std::abs(coef[0]));
        CHECK(std::abs(plus.p * xi_z2 - coef[2]) < 1e-6 * std::abs(coef[0]));
        double even2 = 0.5 * (plus.c2 + minus_raw.c2);
        CHECK(std::abs(plus.p * even2 - (coef[3] + coef[4])) < 1e-6 * std::abs(coef[0]));
        // cross term of the product form: sqrt(2) z2 / J per side
        double odd2 = 0.5 * (plus.c2 - minus_raw.c2);
        CHECK(std::abs(odd2 - std::sqrt(2.0) * z2 / (std::sqrt(2.0) * a)) < 1e-6);
    }
}

TEST_SUITE_END();
