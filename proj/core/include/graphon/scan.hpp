#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphon/optimize.hpp"

namespace graphon {

enum class Feasibility { feasible, infeasible, boundary_unknown };

std::string to_string(Feasibility f);

/// Screens (e,t) against the Kruskal-Katona upper bound t <= e^(3/2) and the
/// Goodman lower bound t >= max(0, e(2e-1)). For e <= 1/2 the lower bound is
/// achieved (t = 0 is feasible). For e > 1/2 the true lower boundary is the
/// scalloped curve, not computed here; the band between the Goodman parabola
/// and the chords through (k/(k+1), t_k) reports boundary_unknown rather than
/// a verdict. Margin 1e-6 around the screening curves also reports
/// boundary_unknown.
Feasibility feasibility(double e, double t);

struct ScanRecord {
    double e = 0.0;
    double t = 0.0;
    Feasibility feasible = Feasibility::infeasible;
    int pods_used = 0;
    double entropy = 0.0;
    Classification classification = Classification::other;
    int class_pods = 0;
    double order_q = 0.0;
    std::optional<double> sym_bipodal_entropy;  // present when sigma <= min(e,1-e)
    std::optional<double> delta_s;              // entropy - sym_bipodal_entropy
    double lambda_e = 0.0;
    double lambda_t = 0.0;
    double el_residual = 0.0;
    int restarts_agreeing = 0;
    bool optimized = false;
    std::string error;  // per-cell failure; never aborts the scan
};

struct ScanGrid {
    double e_min = 0.0, e_max = 0.0;
    int e_steps = 1;
    double t_min = 0.0, t_max = 0.0;
    int t_steps = 1;
};

/// One record per grid cell, row-major (e outer, t inner, both ascending).
/// Within a row each feasible cell's optimizer is warm-started from the
/// previous cell's solution in addition to the canonical starts; rows are
/// independent and run concurrently. Deterministic for a fixed seed and any
/// thread count.
std::vector<ScanRecord> run_scan(const ScanGrid& grid, const ConstraintProblem& base);

/// Pairs of adjacent cells (row-major indices) whose classifications differ;
/// cells that were not optimized never contribute edges.
std::vector<std::pair<int, int>> boundary_trace(const std::vector<ScanRecord>& records,
                                                int e_steps, int t_steps);

/// CSV with the fixed header
/// e,t,feasible,pods_used,entropy,classification,order_q,sym_bipodal_entropy,
/// delta_s,lambda_e,lambda_t,el_residual,restarts_agreeing
/// and 17-significant-digit floats. Unavailable fields are empty.
std::string scan_csv(const std::vector<ScanRecord>& records);

}  // namespace graphon
