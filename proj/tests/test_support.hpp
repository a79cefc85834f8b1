#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "graphon/multipodal.hpp"
#include "graphon/rng.hpp"

namespace test_support {

inline graphon::MultipodalGraphon random_graphon(graphon::Rng& rng, int max_pods,
                                                 double lo = 0.0, double hi = 1.0) {
    int m = 1 + static_cast<int>(rng.uniform() * max_pods);
    if (m > max_pods) m = max_pods;
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
    return graphon::MultipodalGraphon{std::move(c), std::move(p)};
}

/// Pod index of a point x in [0,1) under the cumulative-mass layout.
inline int locate_pod(const graphon::MultipodalGraphon& g, double x) {
    double cum = 0.0;
    for (int i = 0; i < g.pod_count(); ++i) {
        cum += g.pods[i];
        if (x < cum) return i;
    }
    return g.pod_count() - 1;
}

/// Deterministic midpoint-rule weights at resolution 1/n: the fraction of
/// grid midpoints landing in each pod. Summing the kernel over the full 2D/3D
/// midpoint grid groups into these weights exactly, because the kernel value
/// depends only on the pod of each coordinate.
inline std::vector<double> midpoint_weights(const graphon::MultipodalGraphon& g, int n) {
    std::vector<double> w(g.pod_count(), 0.0);
    for (int k = 0; k < n; ++k) {
        double x = (k + 0.5) / n;
        w[locate_pod(g, x)] += 1.0 / n;
    }
    return w;
}

inline double quadrature_edge(const graphon::MultipodalGraphon& g, int n) {
    auto w = midpoint_weights(g, n);
    double s = 0.0;
    for (int i = 0; i < g.pod_count(); ++i)
        for (int j = 0; j < g.pod_count(); ++j) s += w[i] * w[j] * g.values(i, j);
    return s;
}

inline double quadrature_triangle(const graphon::MultipodalGraphon& g, int n) {
    auto w = midpoint_weights(g, n);
    double s = 0.0;
    for (int i = 0; i < g.pod_count(); ++i)
        for (int j = 0; j < g.pod_count(); ++j)
            for (int k = 0; k < g.pod_count(); ++k)
                s += w[i] * w[j] * w[k] * g.values(i, j) * g.values(j, k) * g.values(k, i);
    return s;
}

/// Seeded Monte-Carlo edge density (independent of the block-sum path).
inline double mc_edge(const graphon::MultipodalGraphon& g, long samples, std::uint64_t seed) {
    graphon::Rng rng(seed);
    double acc = 0.0;
    for (long s = 0; s < samples; ++s) {
        int i = locate_pod(g, rng.uniform());
        int j = locate_pod(g, rng.uniform());
        acc += g.values(i, j);
    }
    return acc / static_cast<double>(samples);
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace test_support
