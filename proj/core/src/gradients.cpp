#include "graphon/gradients.hpp"

#include <cmath>
#include <limits>

#include "graphon/entropy.hpp"

namespace graphon {

FunctionalGradients functional_gradients(const MultipodalGraphon& g) {
    validate(g);
    const int m = g.pod_count();
    const auto& c = g.pods;
    const auto& p = g.values;

    FunctionalGradients out;
    out.kernel_square = p * c.asDiagonal() * p;
    const Eigen::MatrixXd& G = out.kernel_square;

    out.edge_p.resize(m, m);
    out.triangle_p.resize(m, m);
    out.entropy_p.resize(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double w = (i == j) ? c[i] * c[i] : 2.0 * c[i] * c[j];
            out.edge_p(i, j) = w;
            out.triangle_p(i, j) = 3.0 * w * G(i, j);
            double v = p(i, j);
            if (v <= 0.0 || v >= 1.0) {
                if (j >= i) out.saturated.emplace_back(i, j);
                out.entropy_p(i, j) = (v <= 0.0 ? 1.0 : -1.0) *
                                      std::numeric_limits<double>::infinity();
            } else {
                out.entropy_p(i, j) = w * h_derivative(1, v);
            }
        }

    Eigen::VectorXd d = p * c;
    out.edge_c = 2.0 * d;
    out.triangle_c.resize(m);
    for (int a = 0; a < m; ++a) {
        double t = 0.0;
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                t += c[j] * c[k] * p(a, j) * p(j, k) * p(k, a);
        out.triangle_c[a] = 3.0 * t;
    }
    out.entropy_c.resize(m);
    for (int a = 0; a < m; ++a) {
        double s = 0.0;
        for (int j = 0; j < m; ++j) s += c[j] * binary_entropy(p(a, j));
        out.entropy_c[a] = 2.0 * s;
    }

    auto project = [&](const Eigen::VectorXd& raw) -> Eigen::VectorXd {
        double mean = raw.sum() / static_cast<double>(m);
        return raw.array() - mean;
    };
    out.edge_c_proj = project(out.edge_c);
    out.triangle_c_proj = project(out.triangle_c);
    out.entropy_c_proj = project(out.entropy_c);
    return out;
}

}  // namespace graphon
