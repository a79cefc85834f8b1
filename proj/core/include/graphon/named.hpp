#pragma once

#include <optional>
#include <utility>

#include "graphon/multipodal.hpp"

namespace graphon {

/// One pod, value p. Erdos-Renyi reference point.
MultipodalGraphon constant_graphon(double p);

/// Two equal pods, e - sigma on the diagonal blocks and e + sigma off the
/// diagonal, so that edge = e, triangle = e^3 - sigma^3 and
/// S = (H(e+sigma) + H(e-sigma))/2. Requires 0 < sigma <= min(e, 1-e).
MultipodalGraphon symmetric_bipodal(double e, double sigma);

/// General two-pod graphon: masses (c, 1-c), diagonal blocks a and b,
/// off-diagonal d.
MultipodalGraphon bipodal(double a, double b, double c, double d);

/// Bipodal graphon built from the leading asymptotic series of the optimal
/// parameters just below the curve t = e^3 for e > 1/2:
///   a = 1 - e - sigma
///   b = e - sigma^2/(2e-1)
///   c = sigma/(2e-1) - 2 sigma^2/(2e-1)
///   d = e + sigma + sigma^2 (H'(e) - (e-1/2) H''(e)) / (e H'(e))
/// Truncated exactly at these orders; used as optimizer warm start and as an
/// O(sigma^2) oracle for recovered parameters.
MultipodalGraphon bipodal_series(double e, double sigma);

/// Parameters of the rank-2 tripodal construction.
struct TripodalSpec {
    double e = 0.0;
    double sigma = 0.0;
    double A = 0.0;  // strength of the rank-1 step part (A > B >= 0)
    double B = 0.0;  // default -H'''(e)/(2 H''(e)) * A^2
    double c = 0.0;  // pod scale: pods (c/2, c/2, 1-c); c = sigma (A^3-B^3)^(-1/3)
};

/// Tripodal graphon g = e - cA v1 v1 + cB v2 v2 with pods (c/2, c/2, 1-c) and
/// blocks
///   e - A + B(1-c)   on the two small diagonal blocks,
///   e + A + B(1-c)   between the two small pods,
///   e - cB           between small pods and the large pod,
///   e + c^2 B/(1-c)  on the large diagonal block.
/// Has edge = e and triangle = e^3 - sigma^3 exactly (asserted to 1e-12 at
/// build time). B defaults to -H'''(e)/(2H''(e)) A^2; pass override_b to force
/// another value (e.g. 0).
std::pair<MultipodalGraphon, TripodalSpec> tripodal_counterexample(
    double e, double sigma, double A, std::optional<double> override_b = std::nullopt);

/// F(A,B) = [H(e+A+B) + H(e-A+B) - 2H(e) - 2B H'(e)] / (A^3 - B^3)^(2/3).
/// Requires A > B >= 0 and e-A+B, e+A+B in (0,1).
double f_of_ab(double e, double A, double B);

/// e0 = (3 - sqrt 3)/6, root of 6e^2 - 6e + 1 = 0; the unique point where
/// 3 H'''(e)^2 = H''(e) H''''(e) (checked to 1e-9 on every call).
double e0();

}  // namespace graphon
