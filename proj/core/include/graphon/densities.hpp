#pragma once

#include <Eigen/Core>

#include "graphon/multipodal.hpp"

namespace graphon {

/// Edge density: sum_ij c_i c_j p_ij (exact, compensated summation).
double edge_density(const MultipodalGraphon& g);

/// Triangle density: sum_ijk c_i c_j c_k p_ij p_jk p_ki (exact).
double triangle_density(const MultipodalGraphon& g);

/// Graphon entropy: sum_ij c_i c_j H(p_ij), with H(0)=H(1)=0.
double entropy(const MultipodalGraphon& g);

/// Degree of pod i: d_i = sum_j c_j p_ij.
Eigen::VectorXd degrees(const MultipodalGraphon& g);

/// sum_ij c_i c_j (p_ij - center)^k for integer k >= 1.
double central_moment(const MultipodalGraphon& g, int k, double center);

struct DensityReport {
    double edge = 0.0;
    double triangle = 0.0;
    double entropy = 0.0;
    Eigen::VectorXd degrees;
    double two_star = 0.0;  // T2 = sum_i c_i d_i^2
    double order_q = 0.0;   // Q = T2 - edge^2, computed as sum_i c_i (d_i - edge)^2
};

DensityReport density_report(const MultipodalGraphon& g);

}  // namespace graphon
