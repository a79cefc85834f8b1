#pragma once

#include <Eigen/Core>

#include "graphon/multipodal.hpp"

namespace graphon {

/// Eigendecomposition of the kernel g - center as an integral operator on the
/// pod-weighted space. Eigenfunctions are constant on pods;
/// eigvec_pod_values(i, j) is the value of eigenfunction j on pod i.
///
/// Invariants: sum_i c_i v_j(i) v_k(i) = delta_jk, and
/// center + sum_j lambda_j v_j(i) v_j(k) reconstructs p_ik.
struct Spectrum {
    Eigen::VectorXd eigenvalues;        // sorted by descending |lambda|, ties by value
    Eigen::MatrixXd eigvec_pod_values;  // column j = eigenfunction j on the pods
    double center = 0.0;
};

/// Decomposes g - center via the symmetrized weighted matrix
/// sqrt(D) (P - center J) sqrt(D), D = diag(pods), J all-ones.
Spectrum spectrum(const MultipodalGraphon& g, double center);

/// | tau(g) - [ e^3 + 3 e sum_i c_i (d_i - e)^2 + sum_j lambda_j^3 ] |
/// with e = edge_density(g) and lambda_j from spectrum(g, e).
/// This is an identity; the residual is floating-point noise (<= 1e-10).
double triangle_identity_residual(const MultipodalGraphon& g);

}  // namespace graphon
