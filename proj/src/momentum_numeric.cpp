#include "anyon1d/momentum_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <thread>

#include "anyon1d/numerics.hpp"

namespace anyon1d::momentum {

namespace num = anyon1d::numerics;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

int thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ANYON1D_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return static_cast<int>(hw);
}

// map f over [0, n) on the configured number of threads, deterministic layout
void parallel_for(int n, const std::function<void(int)>& f) {
    int threads = std::min(thread_budget(), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::future<void>> futs;
    for (int t = 0; t < threads; ++t) {
        futs.push_back(std::async(std::launch::async, [&, t]() {
            for (int i = t; i < n; i += threads) f(i);
        }));
    }
    for (auto& fu : futs) fu.get();
}

// Panels for Int e^{-ikz} g(z) dz with a kink at `split`: at least 8 panels
// per oscillation period, capped by the envelope scale.
struct OscNodes {
    std::vector<double> z;
    std::vector<double> w;  // plain quadrature weights (no phase)
};

OscNodes oscillation_nodes(double lo, double hi, double k, double split) {
    const num::GlRule& rule = num::gl_rule(8);
    double width = std::min(0.35, 2.0 * kPi / (8.0 * std::max(std::abs(k), 1e-9)));
    OscNodes out;
    auto add_range = [&](double a, double b) {
        if (!(b > a)) return;
        int n = static_cast<int>(std::ceil((b - a) / width));
        for (int p = 0; p < n; ++p) {
            double plo = a + (b - a) * p / n;
            double phi = a + (b - a) * (p + 1) / n;
            double mid = 0.5 * (plo + phi), half = 0.5 * (phi - plo);
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                out.z.push_back(mid + half * rule.nodes[i]);
                out.w.push_back(half * rule.weights[i]);
            }
        }
    };
    if (split > lo && split < hi) {
        add_range(lo, split);
        add_range(split, hi);
    } else {
        add_range(lo, hi);
    }
    return out;
}

// Gauss-Legendre panels over the grid span for the smooth outer integral;
// panel boundaries follow every 8th grid node so that grid refinement
// propagates to the outer rule.
std::vector<num::Panel> outer_panels(const NonUniformGrid& grid) {
    std::vector<num::Panel> panels;
    const auto& n = grid.nodes;
    size_t step = 8;
    double prev = -grid.window;
    for (size_t i = step; i < n.size(); i += step) {
        if (n[i] > prev) {
            panels.push_back({prev, n[i]});
            prev = n[i];
        }
    }
    if (prev < grid.window) panels.push_back({prev, grid.window});
    return panels;
}

void check_window(const statistics::RelativeWavefunction& rel, double window) {
    double peak = 0.0;
    for (double z = 0.05; z < window; z += std::max(0.05, window / 200.0))
        peak = std::max(peak, std::abs(rel(z)));
    double edge = std::max(std::abs(rel(0.999 * window)), std::abs(rel(-0.999 * window)));
    if (edge > 1e-8 * peak)
        throw WindowTooSmall("momentum: wavefunction magnitude at the window edge exceeds "
                             "1e-8 of its peak");
}

double com_ground(double Z) {
    return std::pow(2.0 / kPi, 0.25) * std::exp(-Z * Z);
}

// shared worker: given the two parity transforms G+ and G- at fixed k over
// the outer nodes, assemble n(k) for one mixing angle
struct OuterRule {
    std::vector<double> z2, w;
};

OuterRule outer_rule(const NonUniformGrid& grid) {
    OuterRule r;
    const num::GlRule& gl = num::gl_rule(8);
    for (const auto& p : outer_panels(grid)) {
        double mid = 0.5 * (p.lo + p.hi), half = 0.5 * (p.hi - p.lo);
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            r.z2.push_back(mid + half * gl.nodes[i]);
            r.w.push_back(half * gl.weights[i]);
        }
    }
    return r;
}

} // namespace

NonUniformGrid build_grid(double window, int n_coarse, int n_fine, double fine_scale) {
    if (!(window > 0.0) || n_coarse < 8 || n_fine < 8 || !(fine_scale > 0.0) ||
        fine_scale >= window)
        throw DomainError("build_grid: bad arguments");
    std::vector<double> nodes;
    double cutoff = fine_scale * std::ldexp(1.0, -n_fine);
    for (int i = 0; i <= n_coarse; ++i) {
        double x = -window + 2.0 * window * i / n_coarse;
        if (std::abs(x) > 0.5 * cutoff) nodes.push_back(x);
    }
    for (int j = 0; j <= n_fine; ++j) {
        double x = fine_scale * std::ldexp(1.0, -j);
        nodes.push_back(x);
        nodes.push_back(-x);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [window](double a, double b) {
                                return std::abs(a - b) < 1e-15 * window;
                            }),
                nodes.end());

    NonUniformGrid grid;
    grid.nodes = std::move(nodes);
    grid.window = window;
    grid.n_coarse = n_coarse;
    grid.n_fine = n_fine;
    grid.fine_scale = fine_scale;
    grid.weights.resize(grid.nodes.size());
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        double lo = i == 0 ? grid.nodes.front() : grid.nodes[i - 1];
        double hi = i + 1 == grid.nodes.size() ? grid.nodes.back() : grid.nodes[i + 1];
        grid.weights[i] = 0.5 * (hi - lo);
    }
    return grid;
}

double grid_integrate(const NonUniformGrid& grid, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) acc += grid.weights[i] * f(grid.nodes[i]);
    return acc;
}

MomentumDistribution momentum_distribution(const std::function<Complex(double, double)>& psi2,
                                           const NonUniformGrid& grid,
                                           const std::vector<double>& k_nodes,
                                           const StatisticsKind& kind) {
    MomentumDistribution nd;
    nd.k_nodes = k_nodes;
    nd.values.assign(k_nodes.size(), 0.0);
    nd.kind = kind;
    OuterRule outer = outer_rule(grid);
    double W = grid.window;

    parallel_for(static_cast<int>(k_nodes.size()), [&](int ik) {
        double k = k_nodes[ik];
        double total = 0.0;
        for (size_t j = 0; j < outer.z2.size(); ++j) {
            double z2 = outer.z2[j];
            OscNodes inner = oscillation_nodes(-W, W, k, z2);
            Complex acc = 0.0;
            for (size_t i = 0; i < inner.z.size(); ++i) {
                double z1 = inner.z[i];
                acc += inner.w[i] * std::polar(1.0, -k * z1) * psi2(z1, z2);
            }
            total += outer.w[j] * std::norm(acc);
        }
        nd.values[ik] = 2.0 * total;
    });
    return nd;
}

MomentumDistribution momentum_distribution(const ProductState& state, const NonUniformGrid& grid,
                                           const std::vector<double>& k_nodes) {
    check_window(state.rel, grid.window);
    MomentumDistribution nd;
    nd.k_nodes = k_nodes;
    nd.values.assign(k_nodes.size(), 0.0);
    nd.kind = state.rel.kind;
    double W = grid.window;
    OuterRule outer = outer_rule(grid);

    parallel_for(static_cast<int>(k_nodes.size()), [&](int ik) {
        double k = k_nodes[ik];
        OscNodes inner = oscillation_nodes(-W, W, k, 0.0);
        size_t m = inner.z.size();
        std::vector<Complex> amp(m);
        for (size_t i = 0; i < m; ++i)
            amp[i] = inner.w[i] * std::polar(1.0, -k * inner.z[i]) * state.rel(inner.z[i]);

        if (state.com == ProductState::Com::PlaneWaveZero) {
            Complex g = 0.0;
            for (size_t i = 0; i < m; ++i) g += amp[i];
            nd.values[ik] = 2.0 * std::norm(g);
            return;
        }
        double total = 0.0;
        for (size_t j = 0; j < outer.z2.size(); ++j) {
            double z2 = outer.z2[j];
            Complex g = 0.0;
            for (size_t i = 0; i < m; ++i) g += amp[i] * com_ground(z2 + 0.5 * inner.z[i]);
            total += outer.w[j] * std::norm(g);
        }
        nd.values[ik] = 2.0 * total;
    });
    return nd;
}

std::vector<MomentumDistribution> momentum_alpha_sweep(const harmonic::TrapRelativeState& base,
                                                       bool plus_family,
                                                       const std::vector<double>& alphas,
                                                       const NonUniformGrid& grid,
                                                       const std::vector<double>& k_nodes) {
    auto even_state = base;
    even_state.kind = StatisticsKind::boson();
    auto even = harmonic::as_wavefunction(even_state);
    check_window(even, grid.window);

    std::vector<MomentumDistribution> out(alphas.size());
    for (size_t ia = 0; ia < alphas.size(); ++ia) {
        out[ia].k_nodes = k_nodes;
        out[ia].values.assign(k_nodes.size(), 0.0);
        out[ia].kind = plus_family ? StatisticsKind::bosonic_anyon(alphas[ia])
                                   : StatisticsKind::fermionic_anyon(alphas[ia]);
    }
    double W = grid.window;
    OuterRule outer = outer_rule(grid);

    parallel_for(static_cast<int>(k_nodes.size()), [&](int ik) {
        double k = k_nodes[ik];
        OscNodes inner = oscillation_nodes(-W, W, k, 0.0);
        size_t m = inner.z.size();
        std::vector<Complex> amp_even(m);
        std::vector<double> sgn(m);
        for (size_t i = 0; i < m; ++i) {
            amp_even[i] = inner.w[i] * std::polar(1.0, -k * inner.z[i]) * even(inner.z[i]);
            sgn[i] = inner.z[i] > 0.0 ? 1.0 : -1.0;
        }
        std::vector<double> totals(alphas.size(), 0.0);
        for (size_t j = 0; j < outer.z2.size(); ++j) {
            double z2 = outer.z2[j];
            Complex gp = 0.0, gm = 0.0;
            for (size_t i = 0; i < m; ++i) {
                Complex term = amp_even[i] * com_ground(z2 + 0.5 * inner.z[i]);
                gp += term;
                gm += sgn[i] * term;
            }
            for (size_t ia = 0; ia < alphas.size(); ++ia) {
                double c = std::cos(0.5 * kPi * alphas[ia]);
                double s = std::sin(0.5 * kPi * alphas[ia]);
                Complex g = plus_family ? (c * gp + Complex(0, 1) * s * gm)
                                        : (c * gm + Complex(0, 1) * s * gp);
                totals[ia] += outer.w[j] * std::norm(g);
            }
        }
        for (size_t ia = 0; ia < alphas.size(); ++ia) out[ia].values[ik] = 2.0 * totals[ia];
    });
    return out;
}

KRule normalization_k_rule(double k_extent) {
    KRule rule;
    rule.extent = k_extent;
    const num::GlRule& gl = num::gl_rule(8);
    std::vector<num::Panel> panels;
    double core = std::min(6.0, 0.5 * k_extent);
    auto lo = num::split_geometric(-k_extent, -core, 12, -core);
    auto mid = num::split_uniform(-core, core, 24);
    auto hi = num::split_geometric(core, k_extent, 12, core);
    panels.insert(panels.end(), lo.begin(), lo.end());
    panels.insert(panels.end(), mid.begin(), mid.end());
    panels.insert(panels.end(), hi.begin(), hi.end());
    for (const auto& p : panels) {
        double m = 0.5 * (p.lo + p.hi), h = 0.5 * (p.hi - p.lo);
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            rule.k.push_back(m + h * gl.nodes[i]);
            rule.w.push_back(h * gl.weights[i]);
        }
    }
    return rule;
}

double normalization_from_samples(const KRule& rule, const std::vector<double>& n_values,
                                  const freespace::TailCoefficients& tail) {
    double integral = 0.0;
    for (size_t i = 0; i < rule.k.size(); ++i) integral += rule.w[i] * n_values[i];
    double K = rule.extent;
    double remainder = 2.0 * tail.c2 / K + 2.0 * tail.c4 / (3.0 * K * K * K);
    return (integral + remainder) / (2.0 * kPi);
}

double momentum_normalization(const ProductState& state, const NonUniformGrid& grid,
                              double k_extent, const freespace::TailCoefficients& tail) {
    KRule rule = normalization_k_rule(k_extent);
    auto nd = momentum_distribution(state, grid, rule.k);
    return normalization_from_samples(rule, nd.values, tail);
}

TailScalings theta_xi_upsilon(const MomentumDistribution& nd, double contact,
                              const harmonic::ScatteringLength& a_sc, double alpha) {
    bool plus = nd.kind.plus_family();
    double s = std::sin(0.5 * kPi * alpha), c = std::cos(0.5 * kPi * alpha);
    double c2 = 4.0 * contact * (plus ? s * s : c * c);
    double c3 = 0.0;
    if (!a_sc.infinite && a_sc.value != 0.0)
        c3 = (plus ? 1.0 : -1.0) * 4.0 * contact * std::sin(kPi * alpha) / a_sc.value;

    TailScalings out;
    out.k = nd.k_nodes;
    out.theta.resize(nd.k_nodes.size());
    out.xi.resize(nd.k_nodes.size());
    out.upsilon.resize(nd.k_nodes.size());
    for (size_t i = 0; i < nd.k_nodes.size(); ++i) {
        double k = nd.k_nodes[i];
        double k2 = k * k, k3 = k2 * k, k4 = k2 * k2;
        double n = nd.values[i];
        out.theta[i] = n * k2;
        out.xi[i] = (n - c2 / k2) * k3;
        out.upsilon[i] = (n - c2 / k2 - c3 / k3) * k4;
    }
    return out;
}

freespace::TailCoefficients fit_tail(const MomentumDistribution& nd, double k_min, double k_max) {
    if (!(k_max / k_min >= 10.0))
        throw DomainError("fit_tail: requires k_max/k_min >= 10");

    // collect (+k, -k) pairs within range
    std::vector<double> k, even, odd;
    for (size_t i = 0; i < nd.k_nodes.size(); ++i) {
        double kp = nd.k_nodes[i];
        if (kp < k_min || kp > k_max) continue;
        for (size_t j = 0; j < nd.k_nodes.size(); ++j) {
            if (std::abs(nd.k_nodes[j] + kp) < 1e-9 * kp) {
                k.push_back(kp);
                even.push_back(0.5 * (nd.values[i] + nd.values[j]));
                odd.push_back(0.5 * (nd.values[i] - nd.values[j]));
                break;
            }
        }
    }
    if (k.size() < 6) throw DomainError("fit_tail: needs at least 6 +-k sample pairs in range");

    // even part: E k^2 = c2 + c4 u + c6 u^2 with u = 1/k^2 (scaled by u_max);
    // odd part: O k^3 = c3 + c5 u
    double umax = 1.0 / (k_min * k_min);
    auto solve3 = [](double m[3][3], double r[3], double out[3]) {
        double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        double inv[3][3];
        inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
        inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
        inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
        inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
        inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
        inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
        inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
        inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
        inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
        for (int i = 0; i < 3; ++i)
            out[i] = inv[i][0] * r[0] + inv[i][1] * r[1] + inv[i][2] * r[2];
        // Frobenius condition estimate
        double na = 0.0, ni = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                na += m[i][j] * m[i][j];
                ni += inv[i][j] * inv[i][j];
            }
        return std::sqrt(na * ni);
    };

    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double r[3] = {0, 0, 0};
    for (size_t i = 0; i < k.size(); ++i) {
        double u = 1.0 / (k[i] * k[i]) / umax;
        double y = even[i] * k[i] * k[i];
        double basis[3] = {1.0, u, u * u};
        for (int a = 0; a < 3; ++a) {
            r[a] += basis[a] * y;
            for (int b = 0; b < 3; ++b) m[a][b] += basis[a] * basis[b];
        }
    }
    double ce[3];
    double cond = solve3(m, r, ce);
    if (cond > 1e10) throw IllConditioned("fit_tail: even design matrix is ill-conditioned");

    double m2[2][2] = {{0, 0}, {0, 0}};
    double r2[2] = {0, 0};
    for (size_t i = 0; i < k.size(); ++i) {
        double u = 1.0 / (k[i] * k[i]) / umax;
        double y = odd[i] * k[i] * k[i] * k[i];
        double basis[2] = {1.0, u};
        for (int a = 0; a < 2; ++a) {
            r2[a] += basis[a] * y;
            for (int b = 0; b < 2; ++b) m2[a][b] += basis[a] * basis[b];
        }
    }
    double det2 = m2[0][0] * m2[1][1] - m2[0][1] * m2[1][0];
    double c3 = (r2[0] * m2[1][1] - r2[1] * m2[0][1]) / det2;

    using freespace::Universality;
    freespace::TailCoefficients out;
    out.c2 = ce[0];
    out.c3 = c3;
    out.c4 = ce[1] / umax;
    out.u2 = out.c2 == 0.0 ? Universality::Absent : Universality::Universal;
    out.u3 = out.c3 == 0.0 ? Universality::Absent : Universality::Universal;
    out.u4 = out.c4 == 0.0 ? Universality::Absent : Universality::MixedUniversality;
    return out;
}

} // namespace anyon1d::momentum
