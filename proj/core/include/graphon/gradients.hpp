#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "graphon/multipodal.hpp"

namespace graphon {

/// Analytic partials of edge density, triangle density and entropy with
/// respect to the block values and the pod masses.
///
/// Block-value partials use the symmetric-coordinate convention: the (i,j)
/// entry with i != j is the derivative when p_ij and p_ji move together (hence
/// the factor 2), the diagonal entry is the plain partial. So
///   edge_p(i,i) = c_i^2,        edge_p(i,j) = 2 c_i c_j,
///   triangle_p  = 3 c_i c_j G_ij (diagonal) / 6 c_i c_j G_ij (off-diagonal),
///   entropy_p   = the same weights times H'(p_ij),
/// with G = P diag(c) P the kernel square.
///
/// Mass partials come in two flavors: raw d/dc_i, and the projection onto the
/// simplex tangent sum(dc) = 0 (raw minus its c-weighted mean), which is the
/// derivative that is well-defined under the mass constraint.
struct FunctionalGradients {
    Eigen::MatrixXd edge_p, triangle_p, entropy_p;
    Eigen::VectorXd edge_c, triangle_c, entropy_c;
    Eigen::VectorXd edge_c_proj, triangle_c_proj, entropy_c_proj;
    Eigen::MatrixXd kernel_square;                  // G_ij = sum_k c_k p_ik p_kj
    std::vector<std::pair<int, int>> saturated;     // blocks with p in {0,1}
};

/// Saturated blocks (p_ij exactly 0 or 1) are listed in `saturated` and their
/// entropy partial is the +/-inf sentinel; everything else is finite.
FunctionalGradients functional_gradients(const MultipodalGraphon& g);

}  // namespace graphon
