#include "anyon1d/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace anyon1d::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

bool near_nonpositive_integer(double x, double tol) {
    if (x > 0.5) return false;
    double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= tol;
}

// Lanczos approximation, g = 7, 9 coefficients (relative error ~1e-14 on the
// positive axis).
double gamma_positive(double x) {
    static const std::array<double, 9> c = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    // x >= 0.5 assumed
    double z = x - 1.0;
    double sum = c[0];
    for (int i = 1; i < 9; ++i) sum += c[i] / (z + i);
    double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

} // namespace

double sinpi(double x) {
    double r = x - std::round(x);          // r in [-0.5, 0.5]
    double s = std::sin(kPi * r);
    long long n = static_cast<long long>(std::llround(x - r));
    return (n % 2 == 0) ? s : -s;
}

double gamma(double x) {
    if (near_nonpositive_integer(x, 1e-14))
        throw PoleError("gamma: pole at non-positive integer x");
    if (x >= 0.5) return gamma_positive(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (sinpi(x) * gamma_positive(1.0 - x));
}

double rgamma(double x) {
    if (near_nonpositive_integer(x, 1e-14)) return 0.0;
    if (x >= 0.5) return 1.0 / gamma_positive(x);
    return sinpi(x) * gamma_positive(1.0 - x) / kPi;
}

double hermite(int m, double y) {
    if (m < 0 || m > 200) throw DomainError("hermite: order must be in [0, 200]");
    if (m == 0) return 1.0;
    double hm1 = 1.0;        // H_0
    double h = 2.0 * y;      // H_1
    for (int k = 1; k < m; ++k) {
        double hp1 = 2.0 * y * h - 2.0 * k * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

double pochhammer(double lam, int n) {
    if (n < 0) throw DomainError("pochhammer: n must be non-negative");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= lam + k;
    return p;
}

// ---------------------------------------------------------------------------
// Kummer U(a, 1/2, x)
// ---------------------------------------------------------------------------

namespace {

// U(-n, 1/2, x) = (-1)^n n! L_n^(-1/2)(x)
double u_polynomial(int n, double x) {
    constexpr double alpha = -0.5;
    double lm1 = 1.0;                 // L_0
    if (n == 0) return 1.0;
    double l = 1.0 + alpha - x;       // L_1
    for (int k = 1; k < n; ++k) {
        double lp1 = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    double factor = 1.0;
    for (int k = 1; k <= n; ++k) factor *= k;
    return (n % 2 == 0 ? factor : -factor) * l;
}

// Kummer M(a, b, x) by direct series.
double kummer_m(double a, double b, double x) {
    double term = 1.0, sum = 1.0, peak = 1.0;
    for (int n = 1; n <= 600; ++n) {
        term *= (a + n - 1.0) * x / ((b + n - 1.0) * n);
        sum += term;
        peak = std::max(peak, std::abs(term));
        if (std::abs(term) < 1e-18 * std::max(std::abs(sum), peak) && n > x) break;
    }
    return sum;
}

// Connection formula for b = 1/2; loses ~ e^x of precision, used for x <= 8.
double u_via_m(double a, double x) {
    double t1 = kSqrtPi * rgamma(a + 0.5) * kummer_m(a, 0.5, x);
    double t2 = 2.0 * kSqrtPi * rgamma(a) * std::sqrt(x) * kummer_m(a + 0.5, 1.5, x);
    return t1 - t2;
}

// Poincare expansion U ~ x^-a sum_s (a)_s (a+1/2)_s / s! (-x)^-s.
// Returns false when the optimal truncation error exceeds the target.
bool u_asymptotic(double a, double x, double* out) {
    double sum = 1.0, term = 1.0;
    double best = 1.0;
    for (int s = 1; s <= 400; ++s) {
        term *= -(a + s - 1.0) * (a + s - 0.5) / (s * x);
        double mag = std::abs(term);
        if (mag >= best) break;   // series started diverging
        sum += term;
        best = mag;
        if (mag < 1e-13 * std::abs(sum)) {
            *out = std::exp(-a * std::log(x)) * sum;
            return true;
        }
    }
    if (best < 1e-12 * std::abs(sum)) {
        *out = std::exp(-a * std::log(x)) * sum;
        return true;
    }
    return false;
}

// I(a, x) = Integral_0^1 2 exp(-x(1-s^2)/s^2) (1-s^2)^(a-1) ds = U(a,1/2,x) Gamma(a),
// obtained from the t-integral representation by t -> (1-w)/w, w -> s^2.
// Valid for a > 0; panels handle the exponential cliff near s = sqrt(x/(x+E))
// and the (1-s^2)^(a-1) endpoint at s = 1.
double u_integral(double a, double x) {
    const GlRule& rule = gl_rule(16);

    auto eval_panel = [&](double lo, double hi) {
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            double s = mid + half * rule.nodes[i];
            double rho = 1.0 - s;                 // exact near the s=1 endpoint
            double oms2 = rho * (1.0 + s);        // 1 - s^2
            double expo = -x * oms2 / (s * s);
            double val = 2.0 * std::exp(expo + (a - 1.0) * std::log(oms2));
            acc += rule.weights[i] * val;
        }
        return acc * half;
    };

    double total = 0.0;

    // Region 1: from the cliff (exponent ~ 50) up to s = 0.8, panel edges at
    // equal exponent increments, capped in width.
    double s_cut = std::sqrt(x / (x + 50.0));
    double s_mid = std::max(0.8, s_cut);
    if (s_cut < s_mid) {
        std::vector<double> edges;
        double e_mid = x * (1.0 - s_mid * s_mid) / (s_mid * s_mid);
        for (double e = 50.0; e > e_mid; e -= 4.0)
            edges.push_back(std::sqrt(x / (x + e)));
        edges.push_back(s_mid);
        // enforce max width 0.05
        std::vector<double> refined{edges.front()};
        for (size_t i = 1; i < edges.size(); ++i) {
            double prev = refined.back(), next = edges[i];
            int extra = static_cast<int>(std::ceil((next - prev) / 0.05));
            for (int j = 1; j <= extra; ++j)
                refined.push_back(prev + (next - prev) * j / extra);
        }
        for (size_t i = 0; i + 1 < refined.size(); ++i)
            total += eval_panel(refined[i], refined[i + 1]);
    }

    // Region 2: [max(0.8, s_cut), 1), geometric approach to the endpoint.
    double rho0 = 1.0 - s_mid;
    for (int j = 0; j < 56 && rho0 > 1e-17; ++j) {
        double rho1 = 0.5 * rho0;
        total += eval_panel(1.0 - rho0, 1.0 - rho1);
        rho0 = rho1;
    }

    return total * rgamma(a);
}

double u_dispatch(double a, double x);

// Seeds must have a in (1, 3].
double u_seed(double a, double x) {
    if (x <= 8.0) return u_via_m(a, x);
    double out;
    if (x > 40.0 && u_asymptotic(a, x, &out)) return out;
    return u_integral(a, x);
}

// DLMF 13.3.7 rearranged: U(a-1) = (2a - 1/2 + x) U(a) - a (a + 1/2) U(a+1).
// Downward in a is the stable direction (U is minimal as a -> +infinity).
double u_recur_down(double a, double x) {
    int m = static_cast<int>(std::ceil(1.0 - a - 1e-12));
    double a0 = a + m;                      // in (1, 2]
    double u_hi = u_seed(a0 + 1.0, x);
    double u_lo = u_seed(a0, x);
    double ac = a0;
    for (int step = 0; step < m; ++step) {
        double u_m1 = (2.0 * ac - 0.5 + x) * u_lo - ac * (ac + 0.5) * u_hi;
        u_hi = u_lo;
        u_lo = u_m1;
        ac -= 1.0;
    }
    return u_lo;
}

double u_dispatch(double a, double x) {
    if (a > 1.0) {
        if (x <= 8.0) return u_via_m(a, x);
        double out;
        if (x > 40.0 && u_asymptotic(a, x, &out)) return out;
        return u_integral(a, x);
    }
    // a <= 1, non-integer (integer handled by the caller)
    if (a >= -6.0 && x <= 8.0) return u_via_m(a, x);
    double out;
    if (x > 40.0 && u_asymptotic(a, x, &out)) return out;
    return u_recur_down(a, x);
}

} // namespace

double kummer_u(double a, double x) {
    if (!(x > 0.0)) throw DomainError("kummer_u: requires x > 0");
    if (a > kKummerAMax) throw DomainError("kummer_u: a exceeds supported range");
    double r = std::round(a);
    if (r <= 0.0 && std::abs(a - r) < 1e-12)
        return u_polynomial(static_cast<int>(-r), x);
    return u_dispatch(a, x);
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

RootBracket::RootBracket(double lo_, double hi_, int sign_lo, int sign_hi)
    : lo(lo_), hi(hi_), f_lo_sign(sign_lo), f_hi_sign(sign_hi) {
    if (!(lo < hi)) throw DomainError("RootBracket: requires lo < hi");
    if (sign_lo == sign_hi || sign_lo * sign_hi != -1)
        throw NoSignChange("RootBracket: endpoint signs must differ");
}

RootBracket make_bracket(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0 || fhi == 0.0 || (flo < 0.0) == (fhi < 0.0))
        throw NoSignChange("make_bracket: no sign change on [lo, hi]");
    return RootBracket(lo, hi, flo < 0.0 ? -1 : 1, fhi < 0.0 ? -1 : 1);
}

double find_root(const std::function<double(double)>& f, const RootBracket& bracket, double tol) {
    double a = bracket.lo, b = bracket.hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) == (fb < 0.0))
        throw NoSignChange("find_root: no sign change on bracket");

    // Brent's method.
    double c = a, fc = fa, d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= tol) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc, rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb < 0.0) == (fc < 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

std::vector<Panel> split_uniform(double lo, double hi, int n_panels) {
    if (!(hi > lo) || n_panels < 1) throw DomainError("split_uniform: bad arguments");
    std::vector<Panel> out(n_panels);
    for (int i = 0; i < n_panels; ++i) {
        out[i].lo = lo + (hi - lo) * i / n_panels;
        out[i].hi = lo + (hi - lo) * (i + 1) / n_panels;
    }
    out.front().lo = lo;
    out.back().hi = hi;
    return out;
}

std::vector<Panel> split_geometric(double lo, double hi, int n_levels, double toward) {
    if (!(hi > lo) || n_levels < 1) throw DomainError("split_geometric: bad arguments");
    std::vector<Panel> out;
    double len = hi - lo;
    if (toward == lo) {
        double prev = hi;
        for (int j = 1; j < n_levels; ++j) {
            double edge = lo + len * std::ldexp(1.0, -j);
            out.push_back({edge, prev});
            prev = edge;
        }
        out.push_back({lo, prev});
        std::reverse(out.begin(), out.end());
    } else if (toward == hi) {
        double prev = lo;
        for (int j = 1; j < n_levels; ++j) {
            double edge = hi - len * std::ldexp(1.0, -j);
            out.push_back({prev, edge});
            prev = edge;
        }
        out.push_back({prev, hi});
    } else {
        throw DomainError("split_geometric: toward must be an endpoint");
    }
    return out;
}

namespace {

void validate(const QuadratureSpec& spec) {
    if (spec.points_per_panel < 2)
        throw DomainError("QuadratureSpec: points_per_panel must be >= 2");
    for (size_t i = 0; i < spec.panels.size(); ++i) {
        if (!(spec.panels[i].hi > spec.panels[i].lo))
            throw DomainError("QuadratureSpec: degenerate panel");
        if (i > 0 && spec.panels[i].lo < spec.panels[i - 1].hi - 1e-15)
            throw DomainError("QuadratureSpec: panels must be ordered and disjoint");
    }
}

// Gauss-Legendre nodes/weights by Newton iteration on P_n.
GlRule compute_gl(int n) {
    GlRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GlRule& gl_rule(int n) {
    if (n < 2 || n > 64) throw DomainError("gl_rule: n must be in [2, 64]");
    static std::map<int, GlRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

Complex integrate(const std::function<Complex(double)>& f, const QuadratureSpec& spec) {
    validate(spec);
    Complex total = 0.0;
    if (spec.scheme == QuadScheme::GaussLegendre) {
        const GlRule& rule = gl_rule(spec.points_per_panel);
        for (const Panel& p : spec.panels) {
            double mid = 0.5 * (p.lo + p.hi), half = 0.5 * (p.hi - p.lo);
            Complex acc = 0.0;
            for (size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
            total += acc * half;
        }
    } else {
        int n = spec.points_per_panel;
        for (const Panel& p : spec.panels) {
            double h = (p.hi - p.lo) / (n - 1);
            Complex acc = 0.5 * (f(p.lo) + f(p.hi));
            for (int i = 1; i < n - 1; ++i) acc += f(p.lo + h * i);
            total += acc * h;
        }
    }
    return total;
}

double integrate_real(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    return integrate([&f](double x) { return Complex(f(x), 0.0); }, spec).real();
}

} // namespace anyon1d::numerics
