#include "anyon1d/zerorange.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace anyon1d::zerorange {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using statistics::RefKind;

// Neville extrapolation to h = 0 of samples (h_j, y_j).
Complex neville_to_zero(const std::vector<double>& h, const std::vector<Complex>& y,
                        double* last_change) {
    size_t n = h.size();
    std::vector<Complex> t = y;
    Complex prev = t[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t j = 0; j + k < n; ++j)
            t[j] = t[j + 1] + (t[j + 1] - t[j]) * (h[j + k] / (h[j] - h[j + k]));
        prev = (k + 1 < n) ? t[0] : prev;
    }
    if (last_change) *last_change = std::abs(t[0] - prev);
    return t[0];
}

Complex stencil_derivative(const RelativeWavefunction& w, double x, double d) {
    return (-w(x + 2.0 * d) + 8.0 * w(x + d) - 8.0 * w(x - d) + w(x - 2.0 * d)) / (12.0 * d);
}

} // namespace

double tan_phase_shift(const ScatteringModel& model, double k) {
    if (!(k > 0.0)) throw DomainError("tan_phase_shift: requires k > 0");
    if (model.infinite) return -std::numeric_limits<double>::infinity();
    return -model.a_sc * k;
}

Couplings couplings(const ScatteringModel& model) {
    if (model.infinite) return {0.0, std::numeric_limits<double>::infinity(), true};
    if (model.a_sc == 0.0)
        throw ZeroScatteringLength("couplings: g+ diverges at a_sc = 0");
    return {-1.0 / model.a_sc, model.a_sc, false};
}

Complex outside_solution(const StatisticsKind& kind, const ScatteringModel& model, double k,
                         double z) {
    if (model.infinite) return statistics::reference_function(kind, RefKind::Irregular, k, z);
    double t = tan_phase_shift(model, k);
    return statistics::reference_function(kind, RefKind::Regular, k, z) +
           t * statistics::reference_function(kind, RefKind::Irregular, k, z);
}

double boundary_residual(const RelativeWavefunction& w, const ScatteringModel& model) {
    if (model.infinite || model.a_sc == 0.0)
        throw DomainError("boundary_residual: requires finite non-zero a_sc");
    double a = model.a_sc;
    double h0 = 1e-2 * std::min(1.0, std::abs(a));
    constexpr int kLevels = 6;

    // value and slope on both sides of the contact
    std::array<Complex, 2> value, slope;
    for (int side = 0; side < 2; ++side) {
        double s = side == 0 ? 1.0 : -1.0;
        std::vector<double> hs(kLevels);
        std::vector<Complex> vs(kLevels), ds(kLevels);
        for (int j = 0; j < kLevels; ++j) {
            double h = h0 * std::ldexp(1.0, -j);
            hs[j] = h;
            vs[j] = w(s * h);
            ds[j] = stencil_derivative(w, s * h, h / 8.0);
        }
        double cv = 0.0, cd = 0.0;
        value[side] = neville_to_zero(hs, vs, &cv);
        slope[side] = neville_to_zero(hs, ds, &cd);
        double scale = std::max(1.0, std::abs(value[side]));
        if (!(cv < 1e-9 * scale) || !(cd < 1e-6 * scale))
            throw ExtrapolationFailure("boundary_residual: Richardson ladder did not converge");
    }

    // model: psi(0+-) = A e^{+-i theta} (x side sign for the minus family),
    // psi'(0+) = -psi(0+)/a, psi'(0-) = +-psi(0-)/a
    double theta = 0.5 * kPi * w.kind.exchange_alpha();
    Complex eip = std::polar(1.0, theta), eim = std::polar(1.0, -theta);
    std::array<Complex, 4> proto;
    if (w.kind.plus_family())
        proto = {eip, -eip / a, eim, eim / a};
    else
        proto = {eip, -eip / a, -eim, -eim / a};

    Complex amp = value[0] / proto[0];
    std::array<Complex, 4> measured = {value[0], slope[0], value[1], slope[1]};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(measured[i] - amp * proto[i]));
    return worst / std::max(std::abs(amp), 1e-300);
}

BoundState bound_state(const StatisticsKind& kind, const ScatteringModel& model) {
    if (model.infinite || model.a_sc <= 0.0)
        throw NoBoundState("bound_state: requires a_sc > 0");
    if (model.a_sc <= 1e-12)
        throw BreakdownRegime("bound_state: zero-range treatment breaks down as a_sc -> 0+");

    double a = model.a_sc;
    double kappa = 1.0 / a;
    double energy = -0.5 / (a * a);

    double alpha = kind.exchange_alpha();
    Complex norm = statistics::anyon_norm(alpha) / std::sqrt(a);
    bool plus = kind.plus_family();
    RelativeWavefunction psi{
        [norm, alpha, a, plus](double z) {
            double s = statistics::sign(z);
            Complex phase = std::polar(1.0, 0.5 * kPi * alpha * s);
            Complex v = norm * phase * std::exp(-std::abs(z) / a);
            return plus ? v : s * v;
        },
        kind,
        "bound",
    };
    return BoundState{kappa, energy, std::move(psi), kind};
}

} // namespace anyon1d::zerorange
