#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphon {

/// An invariant of the data model was violated (bad pod masses, asymmetry,
/// out-of-range block values, malformed input documents).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Piecewise-constant symmetric kernel on [0,1]^2: pod i has mass pods[i],
/// and the kernel equals values(i,j) on pod i x pod j.
///
/// Invariants (enforced by validate / make_graphon):
///   - every pod mass is strictly positive and they sum to 1 within 1e-12,
///   - values is exactly symmetric,
///   - every block value lies in [0,1].
struct MultipodalGraphon {
    Eigen::VectorXd pods;
    Eigen::MatrixXd values;

    int pod_count() const { return static_cast<int>(pods.size()); }
};

/// Throws validation_error naming the first violated invariant (with indices).
void validate(const MultipodalGraphon& g);

/// Validating constructor.
MultipodalGraphon make_graphon(Eigen::VectorXd pods, Eigen::MatrixXd values);

/// Splits pod i into two equal halves with identical rows; the kernel is
/// unchanged as a function on [0,1]^2.
MultipodalGraphon split_pod(const MultipodalGraphon& g, int i);

/// Refines by splitting the heaviest pod until there are exactly m pods.
MultipodalGraphon embed_in_pods(const MultipodalGraphon& g, int m);

/// Relabels pods: pod k of the result is pod perm[k] of the input.
MultipodalGraphon permute_pods(const MultipodalGraphon& g, const std::vector<int>& perm);

/// Merges pods whose rows agree entrywise within tol (masses add, block values
/// are mass-weighted means). Used for structural classification.
MultipodalGraphon compact_pods(const MultipodalGraphon& g, double tol);

/// Deterministic pod order: ascending (diagonal value, mass, row).
MultipodalGraphon canonicalize(const MultipodalGraphon& g);

/// L2 distance between the two kernels on the common refinement of the pod
/// partitions (both laid out in pod order on [0,1]). No alignment search.
double l2_distance(const MultipodalGraphon& a, const MultipodalGraphon& b);

}  // namespace graphon
