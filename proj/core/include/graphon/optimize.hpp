#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphon/multipodal.hpp"

namespace graphon {

enum class Classification { constant, symmetric_bipodal, asymmetric_bipodal, tripodal, other };

/// "other" renders as other(m).
std::string to_string(Classification kind, int pods);

struct ClassifyResult {
    Classification kind = Classification::other;
    int pods = 0;               // pod count after merging
    MultipodalGraphon merged;   // compacted, canonically ordered
};

/// Merges pods whose rows agree within tol, then classifies by merged pod
/// count; a 2-pod graphon is symmetric_bipodal when |c - 1/2| <= tol and the
/// diagonal blocks agree within tol.
ClassifyResult classify(const MultipodalGraphon& g, double tol = 1e-5);

/// Least-squares fit of the stationarity relation H'(p_ij) = L_e + L_t G_ij
/// over non-saturated blocks, weighted by c_i c_j. Saturated blocks
/// (p within 1e-12 of 0 or 1) are excluded and counted; at such blocks the
/// boundary inequality holds trivially because H' is unbounded there, so the
/// certificate reports the count rather than a meaningful direction check.
struct ElCertificate {
    double lambda_e = 0.0;
    double lambda_t = 0.0;
    double residual = 0.0;   // weighted RMS misfit
    int saturated_blocks = 0;
};

/// Throws std::domain_error when every block is saturated (degenerate fit).
/// Underdetermined fits (e.g. a constant graphon) return the minimal-norm
/// multiplier pair.
ElCertificate el_certificate(const MultipodalGraphon& g);

class feasibility_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConstraintProblem {
    double target_e = 0.5;
    double target_t = 0.117;
    int pods = 4;
    int restarts = 32;
    std::uint64_t seed = 42;
    double constraint_tol = 1e-9;
    double stationarity_tol = 1e-7;
    int max_iterations = 2000;
    /// Extra warm start (used as restart 0); canonical starts (symmetric
    /// bipodal and the series bipodal, when constructible for the target) are
    /// injected after it unless disabled; remaining restarts are random.
    std::optional<MultipodalGraphon> warm;
    bool canonical_starts = true;
    int threads = 0;  // 0 = hardware concurrency
};

struct OptimizerResult {
    MultipodalGraphon graphon;  // compacted, canonical pod order
    double achieved_e = 0.0;
    double achieved_t = 0.0;
    double entropy = 0.0;
    double lambda_e = 0.0;      // from el_certificate
    double lambda_t = 0.0;
    double el_residual = 0.0;
    Classification classification = Classification::other;
    int class_pods = 0;
    int restarts_converged = 0;
    int restarts_agreeing = 0;  // converged restarts with entropy within 1e-6 of best
    bool converged = false;
};

class non_convergence_error : public std::runtime_error {
public:
    non_convergence_error(const std::string& msg, OptimizerResult best)
        : std::runtime_error(msg), best_attempt(std::move(best)) {}
    OptimizerResult best_attempt;
};

/// Best-of-restarts maximization of S over m-podal graphons subject to
/// edge = target_e and triangle = target_t.
///
/// Each restart restores feasibility by damped Gauss-Newton, climbs S with a
/// projected-gradient ascent on the feasible manifold (every accepted iterate
/// is feasible, so the merit S is non-decreasing), and finishes with a Newton
/// polish of the KKT system. Ties within 1e-10 in entropy resolve toward
/// fewer effective pods. Deterministic given (seed, restarts, tolerances)
/// regardless of thread count.
///
/// Throws feasibility_error for screened-infeasible targets and
/// non_convergence_error (carrying the best attempt) when no restart meets
/// the tolerances.
OptimizerResult maximize_entropy(const ConstraintProblem& problem);

namespace detail {

/// One optimization run from a fixed start; exposed for the solver tests.
/// Convergence requires the constraints within constraint_tol, the
/// certificate residual within stationarity_tol, and the internal KKT
/// max-norm within 100x stationarity_tol (the slack covers directions that
/// are only quadratically determined, e.g. the symmetry-breaking mode at
/// e = 1/2 where the asymmetric branch bifurcates).
struct SingleSolve {
    MultipodalGraphon graphon;
    double entropy = 0.0;
    double e_err = 0.0;
    double t_err = 0.0;
    double kkt = 0.0;                 // max-norm of the internal KKT residual
    double el_residual = 0.0;         // certificate misfit at the final point
    bool converged = false;
    std::vector<double> merit_trace;  // S at accepted feasible iterates
};

SingleSolve solve_from(const ConstraintProblem& problem, const MultipodalGraphon& start);

}  // namespace detail

}  // namespace graphon
