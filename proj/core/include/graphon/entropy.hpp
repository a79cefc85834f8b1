#pragma once

namespace graphon {

/// Binary entropy H(u) = -[u ln u + (1-u) ln(1-u)], extended continuously by
/// H(0) = H(1) = 0.
double binary_entropy(double u);

/// n-th derivative of the binary entropy.
///
///   n = 0   H(u), defined on [0,1]
///   n = 1   ln((1-u)/u)
///   n >= 2  -(n-2)! * [ (1-u)^-(n-1) + (-1)^n u^-(n-1) ]
///
/// For n >= 1 the domain is the open interval (0,1); u in {0,1} throws
/// std::domain_error. The closed form is unit-tested against central finite
/// differences before anything downstream relies on it.
double h_derivative(int n, double u);

}  // namespace graphon
