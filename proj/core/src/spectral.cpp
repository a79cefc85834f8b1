#include "graphon/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "graphon/densities.hpp"
#include "graphon/kahan.hpp"

namespace graphon {

Spectrum spectrum(const MultipodalGraphon& g, double center) {
    validate(g);
    const int m = g.pod_count();
    Eigen::VectorXd sq = g.pods.array().sqrt();
    Eigen::MatrixXd b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b(i, j) = sq[i] * (g.values(i, j) - center) * sq[j];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    Eigen::VectorXd lam = solver.eigenvalues();
    Eigen::MatrixXd u = solver.eigenvectors();

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int c) {
        double aa = std::abs(lam[a]), ac = std::abs(lam[c]);
        if (aa != ac) return aa > ac;
        return lam[a] > lam[c];
    });

    Spectrum s;
    s.center = center;
    s.eigenvalues.resize(m);
    s.eigvec_pod_values.resize(m, m);
    for (int k = 0; k < m; ++k) {
        int src = order[k];
        s.eigenvalues[k] = lam[src];
        // map back through sqrt(D): v_j(i) = u(i,j)/sqrt(c_i)
        for (int i = 0; i < m; ++i) s.eigvec_pod_values(i, k) = u(i, src) / sq[i];
        // sign convention: first non-negligible pod value positive
        for (int i = 0; i < m; ++i) {
            if (std::abs(s.eigvec_pod_values(i, k)) > 1e-12) {
                if (s.eigvec_pod_values(i, k) < 0.0) s.eigvec_pod_values.col(k) *= -1.0;
                break;
            }
        }
    }
    return s;
}

double triangle_identity_residual(const MultipodalGraphon& g) {
    double e = edge_density(g);
    double tau = triangle_density(g);
    Spectrum s = spectrum(g, e);
    Eigen::VectorXd d = degrees(g);

    KahanSum degree_term;
    for (int i = 0; i < g.pod_count(); ++i) {
        double dev = d[i] - e;
        degree_term.add(g.pods[i] * dev * dev);
    }
    KahanSum cubes;
    for (int j = 0; j < s.eigenvalues.size(); ++j) {
        double l = s.eigenvalues[j];
        cubes.add(l * l * l);
    }
    double reconstructed = e * e * e + 3.0 * e * degree_term.value() + cubes.value();
    return std::abs(tau - reconstructed);
}

}  // namespace graphon
