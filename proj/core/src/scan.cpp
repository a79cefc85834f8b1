#include "graphon/scan.hpp"

#include <cmath>
#include <sstream>

#include "graphon/densities.hpp"
#include "graphon/entropy.hpp"
#include "graphon/io.hpp"
#include "graphon/named.hpp"
#include "graphon/parallel.hpp"

namespace graphon {

namespace {

constexpr double kMargin = 1e-6;

/// Piecewise-linear chord through the lattice points (k/(k+1), t_k) where the
/// Goodman parabola and the true lower boundary meet; between those points the
/// scalloped boundary lies above the parabola, so the verdict there is
/// boundary_unknown.
double goodman_chord(double e) {
    // find k with k/(k+1) <= e < (k+1)/(k+2)
    double ratio = e >= 1.0 ? 1e6 : e / (1.0 - e);
    int k = static_cast<int>(std::floor(std::min(ratio, 1e6)));
    if (k < 1) k = 1;
    double e_lo = static_cast<double>(k) / (k + 1);
    double e_hi = static_cast<double>(k + 1) / (k + 2);
    double t_lo = e_lo * (2.0 * e_lo - 1.0);
    double t_hi = e_hi * (2.0 * e_hi - 1.0);
    double w = (e - e_lo) / (e_hi - e_lo);
    return t_lo + w * (t_hi - t_lo);
}

}  // namespace

std::string to_string(Feasibility f) {
    switch (f) {
        case Feasibility::feasible: return "feasible";
        case Feasibility::infeasible: return "infeasible";
        case Feasibility::boundary_unknown: return "boundary_unknown";
    }
    return "infeasible";
}

Feasibility feasibility(double e, double t) {
    if (e < 0.0 || e > 1.0 || t < 0.0 || t > 1.0) return Feasibility::infeasible;
    double kk = std::pow(e, 1.5);
    if (t > kk + kMargin) return Feasibility::infeasible;
    if (t > kk - kMargin) return Feasibility::boundary_unknown;
    if (e <= 0.5) return Feasibility::feasible;  // lower bound t >= 0 is achieved
    double goodman = e * (2.0 * e - 1.0);
    if (t < goodman - kMargin) return Feasibility::infeasible;
    if (t < goodman_chord(e) + kMargin) return Feasibility::boundary_unknown;
    return Feasibility::feasible;
}

std::vector<ScanRecord> run_scan(const ScanGrid& grid, const ConstraintProblem& base) {
    if (grid.e_steps < 1 || grid.t_steps < 1)
        throw validation_error("run_scan: grid steps must be >= 1");
    auto coord = [](double lo, double hi, int steps, int i) {
        if (steps == 1) return lo;
        return lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    };

    std::vector<ScanRecord> records(static_cast<std::size_t>(grid.e_steps) * grid.t_steps);
    parallel_for(static_cast<std::size_t>(grid.e_steps), base.threads, [&](std::size_t row) {
        std::optional<MultipodalGraphon> chain;  // previous cell's solution in this row
        double e = coord(grid.e_min, grid.e_max, grid.e_steps, static_cast<int>(row));
        for (int col = 0; col < grid.t_steps; ++col) {
            double t = coord(grid.t_min, grid.t_max, grid.t_steps, col);
            ScanRecord& rec = records[row * grid.t_steps + col];
            rec.e = e;
            rec.t = t;
            rec.feasible = feasibility(e, t);

            double gap = e * e * e - t;
            if (gap > 0.0) {
                double sigma = std::cbrt(gap);
                if (sigma <= std::min(e, 1.0 - e))
                    rec.sym_bipodal_entropy = 0.5 * (binary_entropy(e + sigma) +
                                                     binary_entropy(e - sigma));
            }
            if (rec.feasible != Feasibility::feasible) continue;

            ConstraintProblem problem = base;
            problem.target_e = e;
            problem.target_t = t;
            problem.threads = 1;  // rows own their cells; restarts stay serial per cell
            problem.seed = base.seed ^ (0x9e3779b97f4a7c15ULL * (row * 1000003ULL + col + 1));
            problem.warm = chain;
            try {
                OptimizerResult res = maximize_entropy(problem);
                rec.optimized = true;
                rec.pods_used = res.graphon.pod_count();
                rec.entropy = res.entropy;
                rec.classification = res.classification;
                rec.class_pods = res.class_pods;
                rec.order_q = density_report(res.graphon).order_q;
                rec.lambda_e = res.lambda_e;
                rec.lambda_t = res.lambda_t;
                rec.el_residual = res.el_residual;
                rec.restarts_agreeing = res.restarts_agreeing;
                if (rec.sym_bipodal_entropy)
                    rec.delta_s = res.entropy - *rec.sym_bipodal_entropy;
                chain = res.graphon;
            } catch (const std::exception& ex) {
                rec.error = ex.what();
                chain.reset();
            }
        }
    });
    return records;
}

std::vector<std::pair<int, int>> boundary_trace(const std::vector<ScanRecord>& records,
                                                int e_steps, int t_steps) {
    if (static_cast<int>(records.size()) != e_steps * t_steps)
        throw validation_error("boundary_trace: records do not match the grid shape");
    std::vector<std::pair<int, int>> edges;
    auto differs = [&](int a, int b) {
        const auto& ra = records[a];
        const auto& rb = records[b];
        if (!ra.optimized || !rb.optimized) return false;
        return ra.classification != rb.classification || ra.class_pods != rb.class_pods;
    };
    for (int row = 0; row < e_steps; ++row)
        for (int col = 0; col < t_steps; ++col) {
            int idx = row * t_steps + col;
            if (col + 1 < t_steps && differs(idx, idx + 1)) edges.emplace_back(idx, idx + 1);
            if (row + 1 < e_steps && differs(idx, idx + t_steps))
                edges.emplace_back(idx, idx + t_steps);
        }
    return edges;
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "e,t,feasible,pods_used,entropy,classification,order_q,sym_bipodal_entropy,"
           "delta_s,lambda_e,lambda_t,el_residual,restarts_agreeing\n";
    for (const auto& r : records) {
        out << format_double17(r.e) << ',' << format_double17(r.t) << ','
            << to_string(r.feasible) << ',';
        if (r.optimized) {
            out << r.pods_used << ',' << format_double17(r.entropy) << ','
                << to_string(r.classification, r.class_pods) << ','
                << format_double17(r.order_q) << ',';
            if (r.sym_bipodal_entropy) out << format_double17(*r.sym_bipodal_entropy);
            out << ',';
            if (r.delta_s) out << format_double17(*r.delta_s);
            out << ',' << format_double17(r.lambda_e) << ',' << format_double17(r.lambda_t)
                << ',' << format_double17(r.el_residual) << ',' << r.restarts_agreeing;
        } else {
            out << ",,,,";
            if (r.sym_bipodal_entropy) out << format_double17(*r.sym_bipodal_entropy);
            out << ",,,,,";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace graphon
