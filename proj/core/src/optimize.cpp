#include "graphon/optimize.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "graphon/densities.hpp"
#include "graphon/entropy.hpp"
#include "graphon/named.hpp"
#include "graphon/parallel.hpp"
#include "graphon/rng.hpp"
#include "graphon/scan.hpp"

namespace graphon {

namespace {

constexpr double kSaturationEps = 1e-12;
constexpr double kThetaClamp = 34.0;
constexpr double kSoftmaxClamp = 60.0;
constexpr double kPodDropTol = 1e-8;
constexpr double kMergeTol = 1e-5;
constexpr double kAgreementTol = 1e-6;
constexpr double kEntropyTieTol = 1e-10;

double logit(double p) {
    p = std::clamp(p, 1e-12, 1.0 - 1e-12);
    return std::log(p / (1.0 - p));
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/// Unconstrained coordinates: one logit per block (i <= j) plus a softmax
/// chart for the masses with s_0 pinned to zero. Box and simplex constraints
/// are structural, so iterates never leave the valid set.
struct Chart {
    int m = 0;
    Eigen::VectorXd theta;  // size m(m+1)/2, row-major over i <= j
    Eigen::VectorXd s;      // size m-1

    int dim() const { return static_cast<int>(theta.size() + s.size()); }
};

Chart chart_from(const MultipodalGraphon& g) {
    Chart z;
    z.m = g.pod_count();
    z.theta.resize(z.m * (z.m + 1) / 2);
    int k = 0;
    for (int i = 0; i < z.m; ++i)
        for (int j = i; j < z.m; ++j) z.theta[k++] = logit(g.values(i, j));
    z.s.resize(z.m - 1);
    for (int i = 1; i < z.m; ++i) z.s[i - 1] = std::log(g.pods[i] / g.pods[0]);
    for (int i = 0; i < z.s.size(); ++i) z.s[i] = std::clamp(z.s[i], -kSoftmaxClamp, kSoftmaxClamp);
    return z;
}

MultipodalGraphon graphon_from(const Chart& z) {
    const int m = z.m;
    Eigen::MatrixXd p(m, m);
    int k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double v = sigmoid(std::clamp(z.theta[k++], -kThetaClamp, kThetaClamp));
            p(i, j) = p(j, i) = v;
        }
    Eigen::VectorXd es(m);
    es[0] = 1.0;
    for (int i = 1; i < m; ++i) es[i] = std::exp(std::clamp(z.s[i - 1], -kSoftmaxClamp, kSoftmaxClamp));
    Eigen::VectorXd c = es / es.sum();
    return MultipodalGraphon{std::move(c), std::move(p)};
}

struct Functionals {
    double e = 0.0, t = 0.0, s = 0.0;
};

Functionals functionals(const MultipodalGraphon& g) {
    return Functionals{edge_density(g), triangle_density(g), entropy(g)};
}

/// Gradient of coef_e*edge + coef_t*triangle + coef_s*entropy in chart
/// coordinates. The softmax chain rule yields the simplex-projected mass
/// derivative automatically.
Eigen::VectorXd chart_grad(const Chart& z, const MultipodalGraphon& g, double coef_e,
                           double coef_t, double coef_s) {
    const int m = z.m;
    const auto& c = g.pods;
    const auto& p = g.values;
    Eigen::MatrixXd G = p * c.asDiagonal() * p;

    Eigen::VectorXd grad(z.dim());
    int k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double w = (i == j) ? c[i] * c[i] : 2.0 * c[i] * c[j];
            double mix = coef_e * w + coef_t * 3.0 * w * G(i, j);
            double v = p(i, j);
            if (coef_s != 0.0 && v > 0.0 && v < 1.0)
                mix += coef_s * w * std::log((1.0 - v) / v);
            grad[k++] = mix * v * (1.0 - v);  // d sigmoid
        }

    if (m > 1) {
        Eigen::VectorXd d = p * c;
        Eigen::VectorXd vc(m);
        for (int a = 0; a < m; ++a) {
            double de = 2.0 * d[a];
            double dt = 0.0;
            double ds = 0.0;
            for (int j = 0; j < m; ++j) {
                dt += c[j] * (p.row(a).dot((c.array() * p.col(j).array()).matrix())) * p(j, a);
                ds += c[j] * binary_entropy(p(a, j));
            }
            vc[a] = coef_e * de + coef_t * 3.0 * dt + coef_s * 2.0 * ds;
        }
        double mean = c.dot(vc);
        for (int a = 1; a < m; ++a) grad[z.theta.size() + a - 1] = c[a] * (vc[a] - mean);
    }
    return grad;
}

struct ConstraintState {
    Eigen::Vector2d residual;
    Eigen::MatrixXd jac;  // 2 x dim
};

ConstraintState constraint_state(const Chart& z, const MultipodalGraphon& g, double e,
                                 double t) {
    ConstraintState cs;
    auto f = functionals(g);
    cs.residual << f.e - e, f.t - t;
    cs.jac.resize(2, z.dim());
    cs.jac.row(0) = chart_grad(z, g, 1.0, 0.0, 0.0).transpose();
    cs.jac.row(1) = chart_grad(z, g, 0.0, 1.0, 0.0).transpose();
    return cs;
}

/// Damped Gauss-Newton restoration onto {edge = e, triangle = t}; minimal-norm
/// steps via the pseudo-inverse of J J^T.
bool restore(Chart& z, MultipodalGraphon& g, double e, double t, double tol, int iters = 80) {
    for (int it = 0; it < iters; ++it) {
        auto cs = constraint_state(z, g, e, t);
        double viol = cs.residual.cwiseAbs().maxCoeff();
        if (viol < tol) return true;
        Eigen::Matrix2d jjt = cs.jac * cs.jac.transpose();
        Eigen::Vector2d lam = jjt.completeOrthogonalDecomposition().solve(cs.residual);
        Eigen::VectorXd step = -cs.jac.transpose() * lam;
        double norm0 = cs.residual.norm();
        double tfac = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            Chart zn = z;
            zn.theta += tfac * step.head(zn.theta.size());
            zn.s += tfac * step.tail(zn.s.size());
            MultipodalGraphon gn = graphon_from(zn);
            auto fn = functionals(gn);
            double nn = std::hypot(fn.e - e, fn.t - t);
            if (nn < norm0) {
                z = std::move(zn);
                g = std::move(gn);
                accepted = true;
                break;
            }
            tfac /= 2.0;
        }
        if (!accepted) return false;
    }
    auto cs = constraint_state(z, g, e, t);
    return cs.residual.cwiseAbs().maxCoeff() < tol;
}

struct KktState {
    Eigen::VectorXd F;  // [grad(-S) + le*gradE + lt*gradT ; e-err ; t-err]
};

Eigen::VectorXd kkt_residual(const Chart& z, double e, double t, double le, double lt) {
    MultipodalGraphon g = graphon_from(z);
    Eigen::VectorXd stat = chart_grad(z, g, le, lt, -1.0);
    auto f = functionals(g);
    Eigen::VectorXd F(z.dim() + 2);
    F.head(z.dim()) = stat;
    F[z.dim()] = f.e - e;
    F[z.dim() + 1] = f.t - t;
    return F;
}

/// Newton iteration on the KKT system with a finite-difference Jacobian of
/// the (analytic) residual; minimal-norm least-squares steps tolerate the
/// rank deficiency of duplicated pods.
double polish(Chart& z, double e, double t, double& le, double& lt, int iters = 250) {
    const int n = z.dim();
    Eigen::VectorXd F = kkt_residual(z, e, t, le, lt);
    for (int it = 0; it < iters; ++it) {
        double worst = F.cwiseAbs().maxCoeff();
        if (worst < 1e-13) break;
        Eigen::MatrixXd J(n + 2, n + 2);
        const double h = 1e-6;
        auto eval = [&](int k, double delta) {
            Chart zp = z;
            double lep = le, ltp = lt;
            if (k < zp.theta.size())
                zp.theta[k] += delta;
            else if (k < n)
                zp.s[k - zp.theta.size()] += delta;
            else if (k == n)
                lep += delta;
            else
                ltp += delta;
            return kkt_residual(zp, e, t, lep, ltp);
        };
        for (int k = 0; k < n + 2; ++k)
            J.col(k) = (eval(k, h) - eval(k, -h)) / (2.0 * h);
        // minimal-norm least-squares step; duplicated pods make J rank-deficient,
        // so small singular values must be truncated rather than inverted
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-12);
        Eigen::VectorXd step = svd.solve(-F);
        double tfac = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            Chart zn = z;
            zn.theta += tfac * step.head(zn.theta.size());
            zn.s += tfac * step.segment(zn.theta.size(), zn.s.size());
            double len = le + tfac * step[n];
            double ltn = lt + tfac * step[n + 1];
            Eigen::VectorXd Fn = kkt_residual(zn, e, t, len, ltn);
            if (Fn.norm() < F.norm()) {
                z = std::move(zn);
                le = len;
                lt = ltn;
                F = std::move(Fn);
                accepted = true;
                break;
            }
            tfac /= 2.0;
        }
        if (!accepted) break;
    }
    return F.cwiseAbs().maxCoeff();
}

MultipodalGraphon drop_negligible_pods(const MultipodalGraphon& g, double tol) {
    std::vector<int> keep;
    for (int i = 0; i < g.pod_count(); ++i)
        if (g.pods[i] > tol) keep.push_back(i);
    if (static_cast<int>(keep.size()) == g.pod_count() || keep.empty()) return g;
    const int k = static_cast<int>(keep.size());
    Eigen::VectorXd c(k);
    Eigen::MatrixXd p(k, k);
    double mass = 0.0;
    for (int a = 0; a < k; ++a) mass += g.pods[keep[a]];
    for (int a = 0; a < k; ++a) {
        c[a] = g.pods[keep[a]] / mass;
        for (int b = 0; b < k; ++b) p(a, b) = g.values(keep[a], keep[b]);
    }
    return MultipodalGraphon{std::move(c), std::move(p)};
}

}  // namespace

std::string to_string(Classification kind, int pods) {
    switch (kind) {
        case Classification::constant: return "constant";
        case Classification::symmetric_bipodal: return "symmetric_bipodal";
        case Classification::asymmetric_bipodal: return "asymmetric_bipodal";
        case Classification::tripodal: return "tripodal";
        case Classification::other: return "other(" + std::to_string(pods) + ")";
    }
    return "other(" + std::to_string(pods) + ")";
}

ClassifyResult classify(const MultipodalGraphon& g, double tol) {
    validate(g);
    ClassifyResult r;
    r.merged = canonicalize(compact_pods(g, tol));
    r.pods = r.merged.pod_count();
    switch (r.pods) {
        case 1:
            r.kind = Classification::constant;
            break;
        case 2: {
            bool symmetric = std::abs(r.merged.pods[0] - 0.5) <= tol &&
                             std::abs(r.merged.values(0, 0) - r.merged.values(1, 1)) <= tol;
            r.kind = symmetric ? Classification::symmetric_bipodal
                               : Classification::asymmetric_bipodal;
            break;
        }
        case 3:
            r.kind = Classification::tripodal;
            break;
        default:
            r.kind = Classification::other;
            break;
    }
    return r;
}

ElCertificate el_certificate(const MultipodalGraphon& g) {
    validate(g);
    const int m = g.pod_count();
    Eigen::MatrixXd G = g.values * g.pods.asDiagonal() * g.values;

    ElCertificate cert;
    std::vector<double> w, hp, gsq;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double v = g.values(i, j);
            if (v <= kSaturationEps || v >= 1.0 - kSaturationEps) {
                if (j >= i) ++cert.saturated_blocks;
                continue;
            }
            w.push_back(g.pods[i] * g.pods[j]);
            hp.push_back(h_derivative(1, v));
            gsq.push_back(G(i, j));
        }
    if (w.empty()) throw std::domain_error("el_certificate: all blocks saturated");

    const int n = static_cast<int>(w.size());
    Eigen::MatrixXd X(n, 2);
    Eigen::VectorXd y(n);
    for (int k = 0; k < n; ++k) {
        double sw = std::sqrt(w[k]);
        X(k, 0) = sw;
        X(k, 1) = sw * gsq[k];
        y[k] = sw * hp[k];
    }
    auto cod = X.completeOrthogonalDecomposition();
    Eigen::Vector2d lambda = cod.solve(y);
    cert.lambda_e = lambda[0];
    cert.lambda_t = lambda[1];
    double wsum = 0.0, sq = 0.0;
    for (int k = 0; k < n; ++k) {
        double r = hp[k] - cert.lambda_e - cert.lambda_t * gsq[k];
        sq += w[k] * r * r;
        wsum += w[k];
    }
    cert.residual = std::sqrt(sq / wsum);
    return cert;
}

namespace detail {

namespace {

/// Projected-gradient ascent of S along the feasible manifold; every accepted
/// iterate is restored to feasibility first, so the merit S is non-decreasing.
void climb(Chart& z, MultipodalGraphon& g, double e, double t, double restore_tol,
           double pg_tol, int max_iterations, std::vector<double>& merit_trace) {
    double step = 1.0;
    double merit = entropy(g);
    merit_trace.push_back(merit);
    for (int it = 0; it < max_iterations; ++it) {
        Eigen::VectorXd gs = chart_grad(z, g, 0.0, 0.0, 1.0);
        auto cs = constraint_state(z, g, e, t);
        Eigen::Matrix2d jjt = cs.jac * cs.jac.transpose();
        Eigen::Vector2d lam = jjt.completeOrthogonalDecomposition().solve(cs.jac * gs);
        Eigen::VectorXd pg = gs - cs.jac.transpose() * lam;
        if (pg.lpNorm<Eigen::Infinity>() < pg_tol) break;
        double dir2 = pg.squaredNorm();
        bool accepted = false;
        double tfac = step;
        for (int ls = 0; ls < 50; ++ls) {
            Chart zn = z;
            zn.theta += tfac * pg.head(zn.theta.size());
            zn.s += tfac * pg.tail(zn.s.size());
            MultipodalGraphon gn = graphon_from(zn);
            if (restore(zn, gn, e, t, restore_tol)) {
                double mn = entropy(gn);
                if (mn > merit + 1e-4 * tfac * dir2) {
                    z = std::move(zn);
                    g = std::move(gn);
                    merit = mn;
                    merit_trace.push_back(merit);
                    step = std::min(tfac * 2.0, 256.0);
                    accepted = true;
                    break;
                }
            }
            tfac /= 2.0;
        }
        if (!accepted) break;  // stalled; the polish decides
    }
}

/// Least-squares multiplier estimate at the current point.
std::pair<double, double> estimate_multipliers(const Chart& z, const MultipodalGraphon& g,
                                               double e, double t) {
    Eigen::VectorXd gs = chart_grad(z, g, 0.0, 0.0, -1.0);
    auto cs = constraint_state(z, g, e, t);
    Eigen::Matrix2d jjt = cs.jac * cs.jac.transpose();
    Eigen::Vector2d lam = jjt.completeOrthogonalDecomposition().solve(cs.jac * (-gs));
    return {lam[0], lam[1]};
}

}  // namespace

SingleSolve solve_from(const ConstraintProblem& problem, const MultipodalGraphon& start) {
    const double e = problem.target_e;
    const double t = problem.target_t;
    const double restore_tol = std::min(1e-12, problem.constraint_tol * 1e-2);
    const double pg_tol = std::min(1e-8, problem.stationarity_tol * 0.1);

    SingleSolve out;
    Chart z = chart_from(start.pod_count() == problem.pods
                             ? start
                             : embed_in_pods(start, problem.pods));
    MultipodalGraphon g = graphon_from(z);

    if (restore(z, g, e, t, restore_tol))
        climb(z, g, e, t, restore_tol, pg_tol, problem.max_iterations, out.merit_trace);
    auto [le, lt] = estimate_multipliers(z, g, e, t);
    out.kkt = polish(z, e, t, le, lt);
    g = graphon_from(z);

    // Duplicated or slowly dying pods make the KKT system rank-deficient and
    // strand the Newton polish short of tolerance; retry on progressively
    // coarser compactions and keep the best stationarity reached.
    const std::pair<double, double> compactions[] = {{kPodDropTol, 1e-3}, {1e-2, 1e-2}};
    for (auto [drop_tol, merge_tol] : compactions) {
        if (out.kkt <= std::min(1e-10, problem.stationarity_tol)) break;
        MultipodalGraphon gc = compact_pods(drop_negligible_pods(g, drop_tol), merge_tol);
        if (gc.pod_count() >= graphon_from(z).pod_count()) continue;
        Chart zc = chart_from(gc);
        MultipodalGraphon gcc = graphon_from(zc);
        if (!restore(zc, gcc, e, t, restore_tol)) continue;
        std::vector<double> trace;
        climb(zc, gcc, e, t, restore_tol, pg_tol, std::min(problem.max_iterations, 500),
              trace);
        auto [le2, lt2] = estimate_multipliers(zc, gcc, e, t);
        double kkt2 = polish(zc, e, t, le2, lt2);
        if (kkt2 < out.kkt) {
            z = std::move(zc);
            g = graphon_from(z);
            out.kkt = kkt2;
            out.merit_trace = std::move(trace);
        }
    }

    auto certify = [&](const MultipodalGraphon& gg) {
        try {
            return el_certificate(gg).residual;
        } catch (const std::domain_error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    auto gates = [&](const Functionals& f, double el, double kkt) {
        return std::abs(f.e - e) <= problem.constraint_tol &&
               std::abs(f.t - t) <= problem.constraint_tol &&
               el <= problem.stationarity_tol && kkt <= 100.0 * problem.stationarity_tol;
    };

    Functionals f = functionals(g);
    double el = certify(g);

    // At e = 1/2 the symmetry-breaking mode is only quadratically determined
    // and iterates stall ~1e-5 short of the symmetric point. When the stalled
    // point classifies as symmetric bipodal, re-polish from the exact
    // construction and keep it only if it certifies better.
    if (!gates(f, el, out.kkt) && e * e * e - t > 0.0) {
        double sigma = std::cbrt(e * e * e - t);
        if (sigma <= std::min(e, 1.0 - e) &&
            classify(drop_negligible_pods(g, kPodDropTol), 1e-3).kind ==
                Classification::symmetric_bipodal) {
            Chart zs = chart_from(symmetric_bipodal(e, sigma));
            MultipodalGraphon gs = graphon_from(zs);
            auto [le3, lt3] = estimate_multipliers(zs, gs, e, t);
            double kkt3 = polish(zs, e, t, le3, lt3);
            MultipodalGraphon g3 = graphon_from(zs);
            Functionals f3 = functionals(g3);
            double el3 = certify(g3);
            if (gates(f3, el3, kkt3)) {
                g = std::move(g3);
                f = f3;
                el = el3;
                out.kkt = kkt3;
            }
        }
    }

    out.graphon = std::move(g);
    out.entropy = f.s;
    out.e_err = f.e - e;
    out.t_err = f.t - t;
    out.el_residual = el;
    out.converged = gates(f, el, out.kkt);
    return out;
}

}  // namespace detail

namespace {

std::vector<MultipodalGraphon> canonical_starts(const ConstraintProblem& problem) {
    std::vector<MultipodalGraphon> starts;
    if (problem.warm) starts.push_back(*problem.warm);
    if (!problem.canonical_starts) return starts;
    const double e = problem.target_e;
    const double t = problem.target_t;
    double gap = e * e * e - t;
    if (problem.pods >= 2 && gap > 0.0) {
        double sigma = std::cbrt(gap);
        try {
            starts.push_back(symmetric_bipodal(e, sigma));
        } catch (const std::domain_error&) {
        }
        if (e > 0.5) {
            try {
                starts.push_back(bipodal_series(e, sigma));
            } catch (const std::domain_error&) {
            }
        }
    }
    if (std::abs(gap) <= 1e-9) starts.push_back(constant_graphon(e));
    return starts;
}

MultipodalGraphon random_start(int pods, Rng& rng) {
    Eigen::MatrixXd p(pods, pods);
    for (int i = 0; i < pods; ++i)
        for (int j = i; j < pods; ++j) p(i, j) = p(j, i) = rng.uniform(0.05, 0.95);
    Eigen::VectorXd c(pods);
    double sum = 0.0;
    for (int i = 0; i < pods; ++i) {
        c[i] = -std::log(1.0 - rng.uniform());  // Exp(1) -> Dirichlet(1,..,1)
        c[i] = std::max(c[i], 1e-6);
        sum += c[i];
    }
    c /= sum;
    return MultipodalGraphon{std::move(c), std::move(p)};
}

int effective_pods(const MultipodalGraphon& g) {
    return classify(drop_negligible_pods(g, kPodDropTol), kMergeTol).pods;
}

}  // namespace

OptimizerResult maximize_entropy(const ConstraintProblem& problem) {
    if (problem.pods < 1) throw feasibility_error("maximize_entropy: pods must be >= 1");
    if (problem.restarts < 1) throw feasibility_error("maximize_entropy: restarts must be >= 1");
    if (feasibility(problem.target_e, problem.target_t) == Feasibility::infeasible)
        throw feasibility_error("maximize_entropy: target (e=" + std::to_string(problem.target_e) +
                                ", t=" + std::to_string(problem.target_t) +
                                ") fails the feasibility screen");

    auto canon = canonical_starts(problem);
    const int n = problem.restarts;
    std::vector<detail::SingleSolve> runs(n);
    parallel_for(static_cast<std::size_t>(n), problem.threads, [&](std::size_t r) {
        MultipodalGraphon start = r < canon.size()
                                      ? canon[r]
                                      : [&] {
                                            Rng rng = Rng::stream(problem.seed, r);
                                            return random_start(problem.pods, rng);
                                        }();
        runs[r] = detail::solve_from(problem, start);
    });

    int best = -1;
    int best_pods = 0;
    for (int r = 0; r < n; ++r) {
        if (!runs[r].converged) continue;
        if (best < 0) {
            best = r;
            best_pods = effective_pods(runs[r].graphon);
            continue;
        }
        double ds = runs[r].entropy - runs[best].entropy;
        if (ds > kEntropyTieTol) {
            best = r;
            best_pods = effective_pods(runs[r].graphon);
        } else if (ds > -kEntropyTieTol) {
            int pods_r = effective_pods(runs[r].graphon);
            if (pods_r < best_pods) {
                best = r;
                best_pods = pods_r;
            }
        }
    }

    auto finalize = [&](const detail::SingleSolve& run, bool converged) {
        OptimizerResult res;
        MultipodalGraphon g = drop_negligible_pods(run.graphon, kPodDropTol);
        g = canonicalize(compact_pods(g, kMergeTol));
        double kkt = run.kkt;
        if (g.pod_count() != run.graphon.pod_count()) {
            // compaction perturbs the constraints; re-polish in the reduced chart
            ConstraintProblem sub = problem;
            sub.pods = g.pod_count();
            auto polished = detail::solve_from(sub, g);
            if (polished.converged || !converged) {
                g = canonicalize(drop_negligible_pods(polished.graphon, kPodDropTol));
                kkt = polished.kkt;
            } else {
                g = canonicalize(run.graphon);
            }
        }
        res.graphon = g;
        res.achieved_e = edge_density(res.graphon);
        res.achieved_t = triangle_density(res.graphon);
        res.entropy = entropy(res.graphon);
        try {
            auto cert = el_certificate(res.graphon);
            res.lambda_e = cert.lambda_e;
            res.lambda_t = cert.lambda_t;
            res.el_residual = cert.residual;
        } catch (const std::domain_error&) {
            res.el_residual = std::numeric_limits<double>::quiet_NaN();
        }
        auto cls = classify(res.graphon, kMergeTol);
        res.classification = cls.kind;
        res.class_pods = cls.pods;
        res.converged = converged &&
                        std::abs(res.achieved_e - problem.target_e) <= problem.constraint_tol &&
                        std::abs(res.achieved_t - problem.target_t) <= problem.constraint_tol;
        (void)kkt;
        return res;
    };

    if (best < 0) {
        // report the least-infeasible attempt
        int fallback = 0;
        double score = std::numeric_limits<double>::infinity();
        for (int r = 0; r < n; ++r) {
            double viol = std::max(std::abs(runs[r].e_err), std::abs(runs[r].t_err));
            if (viol < score) {
                score = viol;
                fallback = r;
            }
        }
        OptimizerResult attempt = finalize(runs[fallback], false);
        attempt.converged = false;
        throw non_convergence_error(
            "maximize_entropy: no restart converged (best violation " + std::to_string(score) + ")",
            std::move(attempt));
    }

    OptimizerResult res = finalize(runs[best], true);
    res.restarts_converged = 0;
    res.restarts_agreeing = 0;
    for (int r = 0; r < n; ++r) {
        if (!runs[r].converged) continue;
        ++res.restarts_converged;
        if (std::abs(runs[r].entropy - runs[best].entropy) <= kAgreementTol)
            ++res.restarts_agreeing;
    }
    return res;
}

}  // namespace graphon
