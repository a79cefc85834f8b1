#include "graphon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graphon/densities.hpp"
#include "graphon/entropy.hpp"
#include "graphon/kahan.hpp"
#include "graphon/named.hpp"
#include "graphon/optimize.hpp"
#include "graphon/parallel.hpp"
#include "graphon/rng.hpp"
#include "graphon/spectral.hpp"

namespace graphon {

int VerifyReport::passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass ? 1 : 0;
    return n;
}

int VerifyReport::failed() const { return static_cast<int>(cases.size()) - passed(); }

namespace {

MultipodalGraphon random_graphon(Rng& rng, int max_pods, double lo, double hi) {
    int m = 1 + static_cast<int>(rng.uniform() * max_pods);
    m = std::min(m, max_pods);
    Eigen::MatrixXd p(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) p(i, j) = p(j, i) = rng.uniform(lo, hi);
    Eigen::VectorXd c(m);
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        c[i] = std::max(-std::log(1.0 - rng.uniform()), 1e-6);
        sum += c[i];
    }
    c /= sum;
    return MultipodalGraphon{std::move(c), std::move(p)};
}

/// Affine value-space map reaching edge density e without leaving [0,1]:
/// scale toward 0 when too dense, toward 1 when too sparse.
MultipodalGraphon rescale_to_edge(const MultipodalGraphon& g, double e) {
    double eps = edge_density(g);
    MultipodalGraphon out = g;
    if (eps <= 0.0 || eps >= 1.0) return out;
    if (eps >= e) {
        out.values *= e / eps;
    } else {
        double scale = (1.0 - e) / (1.0 - eps);
        out.values = (1.0 - scale) + scale * out.values.array();
    }
    out.values = out.values.cwiseMax(0.0).cwiseMin(1.0);
    for (int i = 0; i < out.pod_count(); ++i)
        for (int j = i + 1; j < out.pod_count(); ++j) out.values(j, i) = out.values(i, j);
    return out;
}

double entropy_series_around_half(const MultipodalGraphon& g, int terms) {
    KahanSum s;
    s.add(binary_entropy(0.5));
    for (int k = 1; k <= terms; ++k) {
        double coeff = h_derivative(2 * k, 0.5) / std::tgamma(2.0 * k + 1.0);
        s.add(coeff * central_moment(g, 2 * k, 0.5));
    }
    return s.value();
}

}  // namespace

VerifyReport verify_upper_bound(double e, double sigma, int n_samples, std::uint64_t seed,
                                int threads) {
    VerifyReport report;
    report.suite = "upper-bound";
    report.seed = seed;
    const double delta = e - 0.5;

    {
        VerifyCase c;
        c.name = "symmetric-bipodal slack at (e,sigma)";
        c.inputs = {{"e", e}, {"sigma", sigma}};
        c.tolerance = 1e-12;
        try {
            auto g = symmetric_bipodal(e, sigma);
            double bound = binary_entropy(0.5 + std::sqrt(delta * delta + sigma * sigma));
            c.measured = bound - entropy(g);
            c.expected = 0.0;  // slack must be non-negative; it is O(delta^2)
            c.pass = c.measured >= -c.tolerance;
        } catch (const std::domain_error& ex) {
            c.pass = true;
            c.note = std::string("skipped: ") + ex.what();
        }
        report.cases.push_back(std::move(c));
    }

    std::vector<int> accepted(n_samples, 0);
    std::vector<double> violation(n_samples, 0.0);
    parallel_for(static_cast<std::size_t>(n_samples), threads, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        MultipodalGraphon g = rescale_to_edge(random_graphon(rng, 5, 0.0, 1.0), e);
        double eps = edge_density(g);
        double tau = triangle_density(g);
        double gap = eps * eps * eps - tau;
        if (gap < 0.0) return;  // oversaturated; not in scope of the bound
        accepted[i] = 1;
        double sigma_g = std::cbrt(gap);
        double d = eps - 0.5;
        double bound = binary_entropy(0.5 + std::sqrt(d * d + sigma_g * sigma_g));
        violation[i] = entropy(g) - bound;
    });

    int n_accepted = 0, n_violations = 0;
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        if (!accepted[i]) continue;
        ++n_accepted;
        if (violation[i] > 1e-12) ++n_violations;
        worst = std::max(worst, violation[i]);
    }

    VerifyCase c;
    c.name = "random rescaled samples: bound violations";
    c.inputs = {{"e", e}, {"samples", static_cast<double>(n_samples)},
                {"accepted", static_cast<double>(n_accepted)}};
    c.measured = n_violations;
    c.expected = 0.0;
    c.tolerance = 0.0;
    if (n_accepted == 0) {
        c.pass = true;
        c.note = "inconclusive: no sample had t <= e^3";
    } else {
        c.pass = n_violations == 0;
        c.note = "worst S - bound = " + std::to_string(worst);
    }
    report.cases.push_back(std::move(c));
    return report;
}

VerifyReport verify_tripodal_beats_symmetric(double e, const std::vector<double>& sigmas,
                                             double a_min, double a_max, int a_steps) {
    VerifyReport report;
    report.suite = "tripodal";
    const bool below_e0 = e < e0();
    const double h2 = h_derivative(2, e);

    struct Best {
        double margin = -1e300;
        double A = 0.0;
        double f = 0.0;
        int skipped = 0;
        bool any = false;
    };
    std::vector<Best> bests(sigmas.size());

    for (std::size_t si = 0; si < sigmas.size(); ++si) {
        double sigma = sigmas[si];
        double sym = 0.5 * (binary_entropy(e + sigma) + binary_entropy(e - sigma));
        Best& best = bests[si];
        for (int k = 0; k < a_steps; ++k) {
            double A = a_steps == 1 ? a_min
                                    : a_min + (a_max - a_min) * static_cast<double>(k) /
                                                  (a_steps - 1);
            try {
                auto [g, spec] = tripodal_counterexample(e, sigma, A);
                double margin = entropy(g) - sym;
                if (!best.any || margin > best.margin) {
                    best.margin = margin;
                    best.A = A;
                    best.f = f_of_ab(e, spec.A, spec.B);
                    best.any = true;
                }
            } catch (const std::domain_error&) {
                ++best.skipped;
            }
        }

        VerifyCase c;
        c.name = "tripodal margin > 0";
        c.inputs = {{"e", e}, {"sigma", sigma}, {"a_min", a_min}, {"a_max", a_max},
                    {"a_steps", static_cast<double>(a_steps)}};
        c.measured = best.any ? best.margin : std::nan("");
        c.expected = 0.0;
        c.tolerance = 0.0;
        if (!best.any) {
            c.pass = false;
            c.note = "all A values infeasible";
        } else if (!below_e0) {
            c.pass = true;
            c.note = "consistent-with: e >= e0, optimality left open by the theorem";
        } else {
            c.pass = best.margin > 0.0;
            c.note = "best A = " + std::to_string(best.A) +
                     (best.skipped ? ", skipped " + std::to_string(best.skipped) +
                                         " infeasible A values"
                                   : "");
        }
        report.cases.push_back(std::move(c));

        if (best.any && below_e0) {
            VerifyCase m;
            m.name = "margin matches (F(A,B)-H''(e)) sigma^2/2 within 25%";
            m.inputs = {{"e", e}, {"sigma", sigma}, {"best_A", best.A}};
            double predicted = 0.5 * (best.f - h2) * sigma * sigma;
            m.measured = best.margin / predicted;
            m.expected = 1.0;
            m.tolerance = 0.25;
            m.pass = std::abs(m.measured - 1.0) <= m.tolerance;
            report.cases.push_back(std::move(m));
        }
    }

    for (std::size_t si = 0; si + 1 < sigmas.size(); ++si) {
        const Best& hi = bests[si];
        const Best& lo = bests[si + 1];
        VerifyCase c;
        c.name = "margin scales as sigma^2 within 25%";
        c.inputs = {{"sigma_hi", sigmas[si]}, {"sigma_lo", sigmas[si + 1]}};
        double expected = (sigmas[si] * sigmas[si]) / (sigmas[si + 1] * sigmas[si + 1]);
        c.expected = expected;
        c.tolerance = 0.25 * expected;
        if (!hi.any || !lo.any || hi.margin <= 0.0 || lo.margin <= 0.0) {
            c.measured = std::nan("");
            c.pass = below_e0 ? false : true;
            c.note = "margins not positive; scaling ratio undefined";
        } else {
            c.measured = hi.margin / lo.margin;
            c.pass = std::abs(c.measured - expected) <= c.tolerance;
        }
        report.cases.push_back(std::move(c));
    }
    return report;
}

VerifyReport verify_b11_series(double e, const std::vector<double>& sigmas, int restarts,
                               std::uint64_t seed, int threads) {
    if (!(e > 0.5)) throw std::domain_error("verify_b11_series: requires e > 1/2");
    VerifyReport report;
    report.suite = "b11";
    report.seed = seed;

    struct Recovered {
        double dev_a, dev_b, dev_c, dev_d;
    };
    std::vector<Recovered> devs(sigmas.size());

    for (std::size_t si = 0; si < sigmas.size(); ++si) {
        double sigma = sigmas[si];
        ConstraintProblem problem;
        problem.target_e = e;
        problem.target_t = e * e * e - sigma * sigma * sigma;
        problem.pods = 2;
        problem.restarts = restarts;
        problem.seed = seed + si;
        problem.threads = threads;
        OptimizerResult res = maximize_entropy(problem);  // non-convergence propagates
        if (res.graphon.pod_count() != 2)
            throw non_convergence_error("verify_b11_series: optimum collapsed to " +
                                            std::to_string(res.graphon.pod_count()) + " pods",
                                        res);
        // canonical order guarantees a <= b
        double a = res.graphon.values(0, 0);
        double b = res.graphon.values(1, 1);
        double c = res.graphon.pods[0];
        double d = res.graphon.values(0, 1);

        double hp = h_derivative(1, e), hpp = h_derivative(2, e);
        double sa = 1.0 - e - sigma;
        double sb = e - sigma * sigma / (2.0 * e - 1.0);
        double sc = sigma / (2.0 * e - 1.0) - 2.0 * sigma * sigma / (2.0 * e - 1.0);
        double sd = e + sigma + sigma * sigma * (hp - (e - 0.5) * hpp) / (e * hp);
        devs[si] = {std::abs(a - sa), std::abs(b - sb), std::abs(c - sc), std::abs(d - sd)};

        VerifyCase st;
        st.name = "structure a < b < d and c < 1/2";
        st.inputs = {{"e", e}, {"sigma", sigma}, {"a", a}, {"b", b}, {"c", c}, {"d", d}};
        st.measured = (a < b && b < d && c < 0.5) ? 1.0 : 0.0;
        st.expected = 1.0;
        st.pass = st.measured == 1.0;
        report.cases.push_back(std::move(st));

        Spectrum s = spectrum(res.graphon, 0.0);
        double prod = s.eigenvalues[0] * s.eigenvalues[1];
        VerifyCase ev;
        ev.name = "lambda1*lambda2 = c(1-c)(ab-d^2)";
        ev.inputs = {{"e", e}, {"sigma", sigma}};
        ev.measured = std::abs(prod - c * (1.0 - c) * (a * b - d * d));
        ev.expected = 0.0;
        ev.tolerance = 1e-10;
        ev.pass = ev.measured <= ev.tolerance;
        report.cases.push_back(std::move(ev));
    }

    struct ParamOrder {
        const char* name;
        double Recovered::*member;
        int order;
    };
    const ParamOrder params[] = {{"a", &Recovered::dev_a, 2},
                                 {"b", &Recovered::dev_b, 3},
                                 {"c", &Recovered::dev_c, 2},
                                 {"d", &Recovered::dev_d, 3}};
    for (const auto& prm : params)
        for (std::size_t si = 0; si + 1 < sigmas.size(); ++si) {
            VerifyCase c;
            c.name = std::string(prm.name) + "-deviation ratio consistent with O(sigma^" +
                     std::to_string(prm.order) + ")";
            c.inputs = {{"sigma_hi", sigmas[si]}, {"sigma_lo", sigmas[si + 1]}};
            double expected = std::pow(sigmas[si] / sigmas[si + 1], prm.order);
            c.expected = expected;
            double hi = devs[si].*prm.member;
            double lo = devs[si + 1].*prm.member;
            c.measured = lo > 0.0 ? hi / lo : std::nan("");
            c.tolerance = expected;  // within a factor 2: [expected/2, expected*2]
            c.pass = std::isfinite(c.measured) && c.measured >= expected / 2.0 &&
                     c.measured <= expected * 2.0;
            report.cases.push_back(std::move(c));
        }
    return report;
}

VerifyReport verify_vary_v(const std::vector<double>& sigma_grid) {
    VerifyReport report;
    report.suite = "vary-v";
    auto gap = [](double sigma) {
        return 2.0 * (binary_entropy(0.5 + sigma) - binary_entropy(0.5)) -
               sigma * h_derivative(1, 0.5 + sigma);
    };
    for (double sigma : sigma_grid) {
        if (!(sigma > 0.0 && sigma < 0.5))
            throw std::domain_error("verify_vary_v: sigma must lie in (0, 1/2)");
        VerifyCase c;
        c.name = "2[H(1/2+s)-H(1/2)] > s H'(1/2+s)";
        c.inputs = {{"sigma", sigma}};
        c.measured = gap(sigma);
        c.expected = 0.0;
        c.tolerance = 0.0;
        c.pass = c.measured > 0.0;
        report.cases.push_back(std::move(c));
    }
    // quartic vanishing rate: gap(s)/gap(s/2) ~ 16
    for (double sigma : {0.04, 0.02}) {
        VerifyCase c;
        c.name = "gap shrinks like sigma^4 across halving";
        c.inputs = {{"sigma", sigma}};
        c.measured = gap(sigma) / gap(sigma / 2.0);
        c.expected = 16.0;
        c.tolerance = 16.0;  // within a factor 2
        c.pass = c.measured >= 8.0 && c.measured <= 32.0;
        report.cases.push_back(std::move(c));
    }
    return report;
}

VerifyReport verify_entropy_series(int n_samples, int terms, std::uint64_t seed, int threads) {
    VerifyReport report;
    report.suite = "series";
    report.seed = seed;

    {
        VerifyCase c;
        c.name = "constant 1/2: series is H(1/2) exactly";
        c.measured = std::abs(entropy_series_around_half(constant_graphon(0.5), terms) -
                              binary_entropy(0.5));
        c.expected = 0.0;
        c.tolerance = 1e-15;
        c.pass = c.measured <= c.tolerance;
        report.cases.push_back(std::move(c));
    }

    std::vector<double> errs(n_samples, 0.0);
    parallel_for(static_cast<std::size_t>(n_samples), threads, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        MultipodalGraphon g = random_graphon(rng, 5, 0.05, 0.95);
        errs[i] = std::abs(entropy(g) - entropy_series_around_half(g, terms));
    });
    VerifyCase c;
    c.name = "random graphons in [0.05,0.95]: truncation error";
    c.inputs = {{"samples", static_cast<double>(n_samples)},
                {"terms", static_cast<double>(terms)}};
    c.measured = *std::max_element(errs.begin(), errs.end());
    c.expected = 0.0;
    c.tolerance = 1e-8;
    c.pass = c.measured <= c.tolerance;
    report.cases.push_back(std::move(c));

    {
        // block values at the edge of the sampled range converge slower
        VerifyCase b;
        b.name = "symmetric bipodal with blocks {0.05, 0.95}";
        b.inputs = {{"sigma", 0.45}, {"terms", static_cast<double>(terms)}};
        auto g = symmetric_bipodal(0.5, 0.45);
        b.measured = std::abs(entropy(g) - entropy_series_around_half(g, terms));
        b.expected = 0.0;
        b.tolerance = 1e-6;
        b.pass = b.measured <= b.tolerance;
        report.cases.push_back(std::move(b));
    }
    return report;
}

VerifyReport verify_e0() {
    VerifyReport report;
    report.suite = "e0";
    double root = e0();

    VerifyCase r;
    r.name = "6 e0^2 - 6 e0 + 1 = 0";
    r.inputs = {{"e0", root}};
    r.measured = std::abs(6.0 * root * root - 6.0 * root + 1.0);
    r.expected = 0.0;
    r.tolerance = 1e-15;
    r.pass = r.measured <= r.tolerance;
    report.cases.push_back(std::move(r));

    VerifyCase id;
    id.name = "3 H'''(e0)^2 = H''(e0) H''''(e0)";
    id.inputs = {{"e0", root}};
    id.measured = std::abs(3.0 * std::pow(h_derivative(3, root), 2) -
                           h_derivative(2, root) * h_derivative(4, root));
    id.expected = 0.0;
    id.tolerance = 1e-9;
    id.pass = id.measured <= id.tolerance;
    report.cases.push_back(std::move(id));

    auto discr = [](double e) {
        return 3.0 * std::pow(h_derivative(3, e), 2) - h_derivative(2, e) * h_derivative(4, e);
    };
    VerifyCase sp;
    sp.name = "3H'''^2 - H''H'''' positive at 0.1";
    sp.measured = discr(0.1);
    sp.expected = 1.0;
    sp.pass = sp.measured > 0.0;
    report.cases.push_back(std::move(sp));

    VerifyCase sn;
    sn.name = "3H'''^2 - H''H'''' negative at 0.4";
    sn.measured = discr(0.4);
    sn.expected = -1.0;
    sn.pass = sn.measured < 0.0;
    report.cases.push_back(std::move(sn));
    return report;
}

}  // namespace graphon
