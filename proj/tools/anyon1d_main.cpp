// anyon1d: two identical 1D anyons with zero-range interactions.
// Emits CSV/JSON tables for the free-space bound state and the harmonically
// trapped pair, and runs the built-in property-verification suite.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "anyon1d/freespace.hpp"
#include "anyon1d/harmonic.hpp"
#include "anyon1d/momentum_numeric.hpp"
#include "anyon1d/properties.hpp"
#include "anyon1d/zerorange.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace anyon1d;
using statistics::StatisticsKind;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::string fmt(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw Error("cannot open " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_table(const fs::path& dir, const std::string& stem, const Table& table,
                 const std::string& format) {
    if (format == "csv") {
        std::string out;
        for (size_t c = 0; c < table.columns.size(); ++c) {
            out += table.columns[c];
            out += (c + 1 == table.columns.size()) ? "\n" : ",";
        }
        for (const auto& row : table.rows) {
            for (size_t c = 0; c < row.size(); ++c) {
                out += fmt(row[c]);
                out += (c + 1 == row.size()) ? "\n" : ",";
            }
        }
        write_atomic(dir / (stem + ".csv"), out);
    } else {
        json j;
        j["columns"] = table.columns;
        auto rows = json::array();
        for (const auto& row : table.rows) {
            auto r = json::array();
            for (double v : row) r.push_back(std::isinf(v) ? json(fmt(v)) : json(v));
            rows.push_back(r);
        }
        j["rows"] = rows;
        write_atomic(dir / (stem + ".json"), j.dump(2) + "\n");
    }
}

void write_json(const fs::path& dir, const std::string& name, const json& j) {
    write_atomic(dir / name, j.dump(2) + "\n");
}

StatisticsKind make_kind(const std::string& stats, double alpha) {
    if (stats == "boson") return StatisticsKind::boson();
    if (stats == "fermion") return StatisticsKind::fermion();
    if (stats == "ba") return StatisticsKind::bosonic_anyon(alpha);
    if (stats == "fa") return StatisticsKind::fermionic_anyon(alpha);
    throw CLI::ValidationError("--stats must be one of boson|fermion|ba|fa");
}

const char* universality_name(freespace::Universality u) {
    switch (u) {
        case freespace::Universality::Universal: return "universal";
        case freespace::Universality::MixedUniversality: return "mixed";
        case freespace::Universality::Absent: return "absent";
    }
    return "absent";
}

json tail_json(const freespace::TailCoefficients& t) {
    return json{{"c2", t.c2},           {"c3", t.c3},           {"c4", t.c4},
                {"u2", universality_name(t.u2)}, {"u3", universality_name(t.u3)},
                {"u4", universality_name(t.u4)}};
}

std::vector<double> log_symmetric(double lo, double hi, int n) {
    std::vector<double> k;
    for (int i = n - 1; i >= 0; --i) k.push_back(-lo * std::pow(hi / lo, double(i) / (n - 1)));
    for (int i = 0; i < n; ++i) k.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return k;
}

// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string stats = "ba";
    double alpha = 0.5;
    std::string format = "csv";
    std::string out = ".";
    double kmax = 0.0;
    int grid_coarse = 512;
    int grid_fine = 32;
    double window = 0.0;
};

int cmd_boundstate(const CommonOpts& opt, double a_sc) {
    if (!(a_sc > 0.0)) throw CLI::ValidationError("boundstate requires --asc > 0");
    auto kind = make_kind(opt.stats, opt.alpha);
    fs::path dir(opt.out);
    fs::create_directories(dir);

    auto bs = zerorange::bound_state(kind, zerorange::ScatteringModel::finite(a_sc));
    double kmax = opt.kmax > 0.0 ? opt.kmax : 10.0 / a_sc;

    Table obdm;
    obdm.columns = {"z1_over_asc", "re_rho", "im_rho"};
    for (int i = 0; i <= 320; ++i) {
        double z1 = a_sc * (-4.0 + 8.0 * i / 320.0);
        auto rho = freespace::obdm_bound(kind, a_sc, z1, -z1);
        obdm.rows.push_back({z1 / a_sc, rho.real(), rho.imag()});
    }
    write_table(dir, "obdm", obdm, opt.format);

    Table nk;
    nk.columns = {"asc_k", "n_over_asc"};
    for (int i = 0; i <= 800; ++i) {
        double k = -kmax + 2.0 * kmax * i / 800.0;
        nk.rows.push_back({a_sc * k, freespace::momentum_bound(kind, a_sc, k) / a_sc});
    }
    write_table(dir, "nk", nk, opt.format);

    auto extrema = freespace::extrema_bound(kind, a_sc);
    auto tail = freespace::tail_bound(kind, a_sc);
    json summary = {
        {"command", "boundstate"},
        {"statistics", opt.stats},
        {"alpha", kind.exchange_alpha()},
        {"a_sc", a_sc},
        {"energy", bs.energy},
        {"kappa", bs.kappa},
        {"contact", freespace::contact_bound(a_sc)},
        {"tail", tail_json(tail)},
    };
    auto ext = json::array();
    for (const auto& r : extrema) {
        json e = {{"value", r.value},
                  {"which", r.which == freespace::ExtremumWhich::GlobalMax ? "global_max"
                                                                           : "local_max"}};
        e["location_k"] = std::isinf(r.location_k) ? json(fmt(r.location_k)) : json(r.location_k);
        ext.push_back(e);
    }
    summary["extrema"] = ext;
    write_json(dir, "summary.json", summary);
    return kExitOk;
}

int cmd_ho(const CommonOpts& opt, bool have_eps, double epsilon, const std::string& asc_str,
           int branch) {
    if (have_eps == !asc_str.empty())
        throw CLI::ValidationError("ho requires exactly one of --epsilon or --asc");
    harmonic::ScatteringLength a_target;
    if (!asc_str.empty()) {
        if (asc_str == "inf") {
            a_target = harmonic::ScatteringLength::infinite_a();
        } else {
            a_target = harmonic::ScatteringLength::finite(std::stod(asc_str));
        }
        epsilon = harmonic::epsilon_from_asc(a_target, branch);
    }
    auto kind = make_kind(opt.stats, opt.alpha);
    fs::path dir(opt.out);
    fs::create_directories(dir);

    auto state = harmonic::make_trap_state(kind, epsilon);
    double contact = harmonic::contact_ho(epsilon);
    auto tail = harmonic::tail_ho(kind, epsilon);
    double kmax = opt.kmax > 0.0 ? opt.kmax : 40.0;
    double window = opt.window > 0.0 ? opt.window : 14.0;
    auto grid = momentum::build_grid(window, opt.grid_coarse, opt.grid_fine, 0.1);

    json spectrum = {
        {"command", "ho"},
        {"statistics", opt.stats},
        {"alpha", kind.exchange_alpha()},
        {"epsilon", epsilon},
        {"nu_plus", state.nu_plus},
        {"nu_minus", state.nu_minus},
        {"total_energy_M0", 0.5 + epsilon},
        {"contact", contact},
        {"k2", harmonic::k2_coefficient(epsilon)},
        {"k2_is_ratio", state.a_sc.infinite},
        {"tail", tail_json(tail)},
    };
    spectrum["a_sc"] = state.a_sc.infinite ? json("inf") : json(state.a_sc.value);

    momentum::ProductState ps{harmonic::as_wavefunction(state),
                              momentum::ProductState::Com::HarmonicGround};
    double norm_check = momentum::momentum_normalization(ps, grid, 30.0, tail);
    spectrum["norm_check"] = norm_check;
    write_json(dir, "spectrum.json", spectrum);

    auto k_nodes = log_symmetric(0.25, kmax, 48);
    auto nd = momentum::momentum_distribution(ps, grid, k_nodes);
    nd.norm_check = norm_check;
    Table nk;
    nk.columns = {"aho_k", "n"};
    for (size_t i = 0; i < k_nodes.size(); ++i) nk.rows.push_back({k_nodes[i], nd.values[i]});
    write_table(dir, "nk", nk, opt.format);

    std::vector<double> tail_k;
    double tlo = std::max(2.0, kmax / 30.0);
    for (int i = 0; i < 32; ++i) tail_k.push_back(tlo * std::pow(kmax / tlo, i / 31.0));
    auto ndt = momentum::momentum_distribution(ps, grid, tail_k);
    auto scal = momentum::theta_xi_upsilon(ndt, contact, state.a_sc, kind.exchange_alpha());
    Table tails;
    tails.columns = {"aho_k", "theta", "xi", "upsilon", "theta_inf", "xi_inf", "upsilon_inf"};
    for (size_t i = 0; i < tail_k.size(); ++i)
        tails.rows.push_back({tail_k[i], scal.theta[i], scal.xi[i], scal.upsilon[i], tail.c2,
                              tail.c3, tail.c4});
    write_table(dir, "tails", tails, opt.format);
    return kExitOk;
}

int cmd_verify(const CommonOpts& opt, const std::string& suite, bool inject_sign_flip) {
    fs::path dir(opt.out);
    fs::create_directories(dir);
    auto corpus = properties::shipped_corpus();
    properties::VerifyOptions vopt;
    vopt.suite = suite;
    vopt.inject_sign_flip = inject_sign_flip;
    auto reports = properties::run_all(corpus, vopt);

    bool all_passed = true;
    auto arr = json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        arr.push_back({{"name", r.name},
                       {"max_residual", r.max_residual},
                       {"tolerance", r.tolerance},
                       {"passed", r.passed},
                       {"states_tested", r.states_tested}});
        std::printf("%-24s %s  residual %.3e (tol %.1e, %d states)\n", r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.max_residual, r.tolerance, r.states_tested);
    }
    json report = {{"suite", suite}, {"all_passed", all_passed}, {"properties", arr}};
    write_json(dir, "report.json", report);
    return all_passed ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two identical 1D anyons with zero-range interactions"};
    app.require_subcommand(1);

    CommonOpts opt;
    double asc_num = 1.0;
    std::string asc_str;
    double epsilon = 0.0;
    bool have_eps = false;
    int branch = 0;
    std::string suite = "all";
    bool inject = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--stats", opt.stats, "statistics kind: boson|fermion|ba|fa");
        cmd->add_option("--alpha", opt.alpha, "statistical parameter in [0, 1]")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--format", opt.format, "output format: csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "output directory");
        cmd->add_option("--kmax", opt.kmax, "largest |k| emitted");
        cmd->add_option("--grid-coarse", opt.grid_coarse, "coarse spatial grid points");
        cmd->add_option("--grid-fine", opt.grid_fine, "geometric refinement levels");
        cmd->add_option("--window", opt.window, "spatial window half-width");
    };

    auto* bound = app.add_subcommand("boundstate", "free-space two-anyon bound state tables");
    add_common(bound);
    bound->add_option("--asc", asc_num, "1D scattering length (> 0)");

    auto* ho = app.add_subcommand("ho", "harmonically trapped two-anyon tables");
    add_common(ho);
    ho->add_option("--epsilon", epsilon, "relative energy (hbar omega)")
        ->each([&](const std::string&) { have_eps = true; });
    ho->add_option("--asc", asc_str, "scattering length (a_HO units), a number or inf or 0");
    ho->add_option("--branch", branch, "spectrum branch index (with --asc)");

    auto* verify = app.add_subcommand("verify", "run the property-verification suite");
    add_common(verify);
    verify->add_option("--suite", suite,
                       "all|formal_shift|chiral_mirror|contacts|normalizations|exchange|boundary");
    verify->add_flag("--inject-sign-flip", inject,
                     "debug: flip a sign in the mirror comparison (negative control)");

    try {
        app.parse(argc, argv);
        if (bound->parsed()) return cmd_boundstate(opt, asc_num);
        if (ho->parsed()) return cmd_ho(opt, have_eps, epsilon, asc_str, branch);
        if (verify->parsed()) return cmd_verify(opt, suite, inject);
        return kExitConfig;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    } catch (const anyon1d::Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
