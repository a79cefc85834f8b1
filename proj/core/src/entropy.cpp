#include "graphon/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graphon {

double binary_entropy(double u) {
    if (u < 0.0 || u > 1.0)
        throw std::domain_error("binary_entropy: u=" + std::to_string(u) + " outside [0,1]");
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return -(u * std::log(u) + (1.0 - u) * std::log(1.0 - u));
}

double h_derivative(int n, double u) {
    if (n < 0) throw std::domain_error("h_derivative: negative order");
    if (n == 0) return binary_entropy(u);
    if (u <= 0.0 || u >= 1.0)
        throw std::domain_error("h_derivative: order " + std::to_string(n) +
                                " requires u in (0,1), got " + std::to_string(u));
    if (n == 1) return std::log((1.0 - u) / u);
    double fact = std::tgamma(static_cast<double>(n - 1));  // (n-2)!
    double a = std::pow(1.0 - u, -static_cast<double>(n - 1));
    double b = std::pow(u, -static_cast<double>(n - 1));
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return -fact * (a + sign * b);
}

}  // namespace graphon
