#include "graphon/densities.hpp"

#include <cmath>

#include "graphon/entropy.hpp"
#include "graphon/kahan.hpp"

namespace graphon {

double edge_density(const MultipodalGraphon& g) {
    validate(g);
    const int m = g.pod_count();
    KahanSum s;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s.add(g.pods[i] * g.pods[j] * g.values(i, j));
    return s.value();
}

double triangle_density(const MultipodalGraphon& g) {
    validate(g);
    const int m = g.pod_count();
    KahanSum s;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double cij = g.pods[i] * g.pods[j] * g.values(i, j);
            for (int k = 0; k < m; ++k)
                s.add(cij * g.pods[k] * g.values(j, k) * g.values(k, i));
        }
    return s.value();
}

double entropy(const MultipodalGraphon& g) {
    validate(g);
    const int m = g.pod_count();
    KahanSum s;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s.add(g.pods[i] * g.pods[j] * binary_entropy(g.values(i, j)));
    return s.value();
}

Eigen::VectorXd degrees(const MultipodalGraphon& g) {
    validate(g);
    const int m = g.pod_count();
    Eigen::VectorXd d(m);
    for (int i = 0; i < m; ++i) {
        KahanSum s;
        for (int j = 0; j < m; ++j) s.add(g.pods[j] * g.values(i, j));
        d[i] = s.value();
    }
    return d;
}

double central_moment(const MultipodalGraphon& g, int k, double center) {
    validate(g);
    if (k < 1) throw validation_error("central_moment: k must be >= 1");
    const int m = g.pod_count();
    KahanSum s;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s.add(g.pods[i] * g.pods[j] * std::pow(g.values(i, j) - center, k));
    return s.value();
}

DensityReport density_report(const MultipodalGraphon& g) {
    DensityReport r;
    r.edge = edge_density(g);
    r.triangle = triangle_density(g);
    r.entropy = entropy(g);
    r.degrees = degrees(g);
    KahanSum t2, q;
    for (int i = 0; i < g.pod_count(); ++i) {
        t2.add(g.pods[i] * r.degrees[i] * r.degrees[i]);
        double dev = r.degrees[i] - r.edge;
        q.add(g.pods[i] * dev * dev);
    }
    r.two_star = t2.value();
    // Q = T2 - edge^2 algebraically; the centered form is non-negative by
    // construction, which the T2 - e^2 difference is not in floating point.
    r.order_q = q.value();
    return r;
}

}  // namespace graphon
