#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphon/densities.hpp"
#include "graphon/entropy.hpp"
#include "graphon/io.hpp"
#include "graphon/named.hpp"
#include "graphon/optimize.hpp"
#include "graphon/scan.hpp"
#include "graphon/spectral.hpp"
#include "graphon/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitVerifyFailed = 4;

struct GlobalOpts {
    std::uint64_t seed = 42;
    int threads = 0;
    bool json = false;
    std::string out;
};

void emit(const GlobalOpts& opts, const std::string& data) {
    if (!opts.out.empty()) {
        std::ofstream f(opts.out, std::ios::binary);
        if (!f) throw graphon::validation_error("cannot open output file: " + opts.out);
        f << data;
    } else {
        std::cout << data;
    }
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw graphon::validation_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string join_reports(const std::vector<graphon::VerifyReport>& reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string one = graphon::write_verify(reports[i]);
        if (!one.empty() && one.back() == '\n') one.pop_back();
        if (i) out += ',';
        out += one;
    }
    out += "]\n";
    return out;
}

void summarize(const GlobalOpts& opts, const std::vector<graphon::VerifyReport>& reports) {
    if (opts.json) return;
    for (const auto& r : reports) {
        std::cerr << "suite " << r.suite << ": " << r.passed() << " passed, " << r.failed()
                  << " failed\n";
        for (const auto& c : r.cases)
            if (!c.pass)
                std::cerr << "  FAIL " << c.name << " (measured " << c.measured << ", expected "
                          << c.expected << " tol " << c.tolerance << ")\n";
    }
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"edge/triangle constrained graphon entropy toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--seed, --threads, ...) after the subcommand

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "RNG seed for every stochastic component")
        ->capture_default_str();
    app.add_option("--threads", opts.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    app.add_flag("--json", opts.json, "machine output only; suppress human summaries");
    app.add_option("--out", opts.out, "write data to PATH instead of stdout");

    // ---- make ----
    auto* make = app.add_subcommand("make", "construct a named graphon as JSON");
    make->require_subcommand(1);
    double mk_p = 0.5, mk_e = 0.5, mk_sigma = 0.2, mk_a = 0.2, mk_b = 0.4, mk_c = 0.25,
           mk_d = 0.6, mk_A = 0.05;
    std::optional<double> mk_B;
    auto* mk_const = make->add_subcommand("constant", "constant graphon");
    mk_const->add_option("--p", mk_p, "block value")->required();
    auto* mk_sym = make->add_subcommand("symbipodal", "symmetric bipodal e +/- sigma");
    mk_sym->add_option("--e", mk_e)->required();
    mk_sym->add_option("--sigma", mk_sigma)->required();
    auto* mk_bip = make->add_subcommand("bipodal", "two pods (a, b diagonal, d off, mass c)");
    mk_bip->add_option("--a", mk_a)->required();
    mk_bip->add_option("--b", mk_b)->required();
    mk_bip->add_option("--c", mk_c)->required();
    mk_bip->add_option("--d", mk_d)->required();
    auto* mk_ser = make->add_subcommand("bipodal-series", "series bipodal for e > 1/2");
    mk_ser->add_option("--e", mk_e)->required();
    mk_ser->add_option("--sigma", mk_sigma)->required();
    auto* mk_tri = make->add_subcommand("tripodal", "rank-2 tripodal construction");
    mk_tri->add_option("--e", mk_e)->required();
    mk_tri->add_option("--sigma", mk_sigma)->required();
    mk_tri->add_option("--A", mk_A)->required();
    mk_tri->add_option("--B", [&mk_B](const std::vector<std::string>& vals) {
        mk_B = std::stod(vals[0]);
        return true;
    }, "override the default B = -H'''(e)/(2H''(e)) A^2");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "densities/entropy report for a graphon JSON");
    std::string eval_input;
    bool eval_spectral = false;
    int eval_moments = 0;
    double eval_center = 0.5;
    eval->add_option("--input", eval_input, "graphon JSON (default: stdin)");
    eval->add_flag("--spectral", eval_spectral, "include the spectrum of g - edge_density");
    eval->add_option("--moments", eval_moments, "include central moments k = 1..K");
    eval->add_option("--center", eval_center, "moment center (default 0.5)")
        ->capture_default_str();

    // ---- optimize ----
    auto* opt = app.add_subcommand("optimize", "constrained entropy maximization");
    graphon::ConstraintProblem problem;
    std::string warm_path;
    opt->add_option("--e", problem.target_e, "target edge density")->required();
    opt->add_option("--t", problem.target_t, "target triangle density")->required();
    opt->add_option("--pods", problem.pods)->capture_default_str();
    opt->add_option("--restarts", problem.restarts)->capture_default_str();
    opt->add_option("--tol", problem.constraint_tol, "constraint tolerance")
        ->capture_default_str();
    opt->add_option("--stat-tol", problem.stationarity_tol, "stationarity tolerance")
        ->capture_default_str();
    opt->add_option("--max-iter", problem.max_iterations)->capture_default_str();
    opt->add_option("--warm", warm_path, "graphon JSON used as warm start");

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "phase-diagram sweep, CSV output");
    graphon::ScanGrid grid;
    int scan_pods = 4, scan_restarts = 16;
    double scan_tol = 1e-9;
    scan->add_option("--e-min", grid.e_min)->required();
    scan->add_option("--e-max", grid.e_max)->required();
    scan->add_option("--e-steps", grid.e_steps)->required();
    scan->add_option("--t-min", grid.t_min)->required();
    scan->add_option("--t-max", grid.t_max)->required();
    scan->add_option("--t-steps", grid.t_steps)->required();
    scan->add_option("--pods", scan_pods)->capture_default_str();
    scan->add_option("--restarts", scan_restarts)->capture_default_str();
    scan->add_option("--tol", scan_tol)->capture_default_str();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "theorem verification suites");
    std::string suite;
    verify
        ->add_option("--suite", suite,
                     "one of upper-bound|tripodal|b11|vary-v|series|e0|all")
        ->required()
        ->check(CLI::IsMember(
            {"upper-bound", "tripodal", "b11", "vary-v", "series", "e0", "all"}));
    std::vector<double> v_e, v_sigma;
    int v_samples = 1000, v_asteps = 20, v_terms = 60, v_restarts = 16;
    double v_amin = 0.01, v_amax = 0.08;
    verify->add_option("--e", v_e, "edge densities (suite-dependent default)");
    verify->add_option("--sigma", v_sigma, "sigma values (suite-dependent default)");
    verify->add_option("--samples", v_samples)->capture_default_str();
    verify->add_option("--a-min", v_amin)->capture_default_str();
    verify->add_option("--a-max", v_amax)->capture_default_str();
    verify->add_option("--a-steps", v_asteps)->capture_default_str();
    verify->add_option("--terms", v_terms)->capture_default_str();
    verify->add_option("--restarts", v_restarts)->capture_default_str();

    // ---- f-scan ----
    auto* fscan = app.add_subcommand("f-scan", "F(A,B) sweep along B = -H'''/(2H'')A^2");
    double f_e = 0.15, f_amin = 0.005, f_amax = 0.02;
    int f_steps = 20;
    fscan->add_option("--e", f_e)->required();
    fscan->add_option("--a-min", f_amin)->required();
    fscan->add_option("--a-max", f_amax)->required();
    fscan->add_option("--steps", f_steps)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    using namespace graphon;

    if (make->parsed()) {
        MultipodalGraphon g = constant_graphon(0.5);
        std::optional<std::string> label;
        if (mk_const->parsed()) {
            g = constant_graphon(mk_p);
            label = "constant";
        } else if (mk_sym->parsed()) {
            g = symmetric_bipodal(mk_e, mk_sigma);
            label = "symmetric_bipodal";
        } else if (mk_bip->parsed()) {
            g = bipodal(mk_a, mk_b, mk_c, mk_d);
            label = "bipodal";
        } else if (mk_ser->parsed()) {
            g = bipodal_series(mk_e, mk_sigma);
            label = "bipodal_series";
        } else if (mk_tri->parsed()) {
            auto [tg, spec] = tripodal_counterexample(mk_e, mk_sigma, mk_A, mk_B);
            g = tg;
            label = "tripodal";
        }
        emit(opts, write_graphon(g, label));
        return kExitOk;
    }

    if (eval->parsed()) {
        MultipodalGraphon g = read_graphon(read_input(eval_input));
        DensityReport report = density_report(g);
        std::optional<Spectrum> spec;
        if (eval_spectral) spec = spectrum(g, report.edge);
        std::optional<std::vector<double>> moments;
        if (eval_moments > 0) {
            moments.emplace();
            for (int k = 1; k <= eval_moments; ++k)
                moments->push_back(central_moment(g, k, eval_center));
        }
        emit(opts, write_report(report, spec ? &*spec : nullptr,
                                moments ? &*moments : nullptr,
                                moments ? std::optional<double>(eval_center) : std::nullopt));
        return kExitOk;
    }

    if (opt->parsed()) {
        problem.seed = opts.seed;
        problem.threads = opts.threads;
        if (!warm_path.empty()) problem.warm = read_graphon(read_input(warm_path));
        OptimizerResult res = maximize_entropy(problem);
        emit(opts, write_result(res));
        if (!opts.json)
            std::cerr << "optimize: " << to_string(res.classification, res.class_pods)
                      << ", entropy " << res.entropy << ", el_residual " << res.el_residual
                      << "\n";
        return kExitOk;
    }

    if (scan->parsed()) {
        ConstraintProblem base;
        base.pods = scan_pods;
        base.restarts = scan_restarts;
        base.constraint_tol = scan_tol;
        base.seed = opts.seed;
        base.threads = opts.threads;
        auto records = run_scan(grid, base);
        emit(opts, scan_csv(records));
        return kExitOk;
    }

    if (verify->parsed()) {
        std::vector<VerifyReport> reports;
        auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
        if (want("e0")) reports.push_back(verify_e0());
        if (want("vary-v")) {
            std::vector<double> sig = v_sigma;
            if (sig.empty())
                for (int i = 1; i <= 100; ++i) sig.push_back(0.49 * i / 100.0);
            reports.push_back(verify_vary_v(sig));
        }
        if (want("series"))
            reports.push_back(verify_entropy_series(
                suite == "series" ? v_samples : std::min(v_samples, 200), v_terms, opts.seed,
                opts.threads));
        if (want("upper-bound")) {
            std::vector<double> es = v_e.empty() ? std::vector<double>{0.48, 0.5, 0.52} : v_e;
            double sigma = v_sigma.empty() ? 0.2 : v_sigma.front();
            for (double e : es)
                reports.push_back(verify_upper_bound(e, sigma, v_samples, opts.seed,
                                                     opts.threads));
        }
        if (want("tripodal")) {
            double e = v_e.empty() ? 0.15 : v_e.front();
            std::vector<double> sig =
                v_sigma.empty() ? std::vector<double>{0.02, 0.01, 0.005} : v_sigma;
            reports.push_back(verify_tripodal_beats_symmetric(e, sig, v_amin, v_amax, v_asteps));
        }
        if (want("b11")) {
            double e = v_e.empty() ? 0.6 : v_e.front();
            std::vector<double> sig =
                v_sigma.empty() ? std::vector<double>{0.04, 0.02, 0.01} : v_sigma;
            reports.push_back(verify_b11_series(e, sig, v_restarts, opts.seed, opts.threads));
        }
        emit(opts, join_reports(reports));
        summarize(opts, reports);
        for (const auto& r : reports)
            if (!r.all_passed()) return kExitVerifyFailed;
        return kExitOk;
    }

    if (fscan->parsed()) {
        std::ostringstream csv;
        csv << "A,B,F,F_minus_Hpp\n";
        double h2 = h_derivative(2, f_e);
        for (int k = 0; k < f_steps; ++k) {
            double A = f_steps == 1
                           ? f_amin
                           : f_amin + (f_amax - f_amin) * static_cast<double>(k) / (f_steps - 1);
            double B = -h_derivative(3, f_e) / (2.0 * h2) * A * A;
            double F = f_of_ab(f_e, A, B);
            csv << format_double17(A) << ',' << format_double17(B) << ',' << format_double17(F)
                << ',' << format_double17(F - h2) << '\n';
        }
        emit(opts, csv.str());
        return kExitOk;
    }

    return kExitUsage;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const graphon::non_convergence_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNonConvergence;
    } catch (const graphon::feasibility_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const graphon::validation_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitValidation;
    }
}
