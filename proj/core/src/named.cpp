#include "graphon/named.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "graphon/densities.hpp"
#include "graphon/entropy.hpp"

namespace graphon {

namespace {

void assert_densities(const MultipodalGraphon& g, double want_e, double want_t,
                      const char* what) {
    double ge = edge_density(g);
    double gt = triangle_density(g);
    if (std::abs(ge - want_e) > 1e-12 || std::abs(gt - want_t) > 1e-12)
        throw std::logic_error(std::string(what) + ": closed-form densities disagree with " +
                               "block evaluation (edge " + std::to_string(ge) + " vs " +
                               std::to_string(want_e) + ", triangle " + std::to_string(gt) +
                               " vs " + std::to_string(want_t) + ")");
}

void require_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::domain_error(std::string(name) + "=" + std::to_string(v) +
                                " outside [0,1]");
}

}  // namespace

MultipodalGraphon constant_graphon(double p) {
    require_unit(p, "p");
    Eigen::VectorXd c(1);
    c << 1.0;
    Eigen::MatrixXd v(1, 1);
    v << p;
    return make_graphon(std::move(c), std::move(v));
}

MultipodalGraphon symmetric_bipodal(double e, double sigma) {
    if (!(sigma > 0.0))
        throw std::domain_error("symmetric_bipodal: sigma must be positive, got " +
                                std::to_string(sigma));
    if (sigma > std::min(e, 1.0 - e) + 1e-15)
        throw std::domain_error("symmetric_bipodal: sigma=" + std::to_string(sigma) +
                                " exceeds min(e, 1-e)=" + std::to_string(std::min(e, 1.0 - e)));
    double lo = e - sigma, hi = e + sigma;
    require_unit(lo, "e-sigma");
    require_unit(hi, "e+sigma");
    Eigen::VectorXd c(2);
    c << 0.5, 0.5;
    Eigen::MatrixXd p(2, 2);
    p << lo, hi, hi, lo;
    auto g = make_graphon(std::move(c), std::move(p));
    assert_densities(g, e, e * e * e - sigma * sigma * sigma, "symmetric_bipodal");
    return g;
}

MultipodalGraphon bipodal(double a, double b, double c, double d) {
    require_unit(a, "a");
    require_unit(b, "b");
    require_unit(d, "d");
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("bipodal: c=" + std::to_string(c) + " outside (0,1)");
    Eigen::VectorXd masses(2);
    masses << c, 1.0 - c;
    Eigen::MatrixXd p(2, 2);
    p << a, d, d, b;
    return make_graphon(std::move(masses), std::move(p));
}

MultipodalGraphon bipodal_series(double e, double sigma) {
    if (!(e > 0.5))
        throw std::domain_error("bipodal_series: requires e > 1/2, got " + std::to_string(e));
    if (!(sigma > 0.0)) throw std::domain_error("bipodal_series: sigma must be positive");
    double hp = h_derivative(1, e);
    double hpp = h_derivative(2, e);
    double a = 1.0 - e - sigma;
    double b = e - sigma * sigma / (2.0 * e - 1.0);
    double c = sigma / (2.0 * e - 1.0) - 2.0 * sigma * sigma / (2.0 * e - 1.0);
    double d = e + sigma + sigma * sigma * (hp - (e - 0.5) * hpp) / (e * hp);
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("bipodal_series: truncated c=" + std::to_string(c) +
                                " outside (0,1); sigma too large for this e");
    const std::pair<double, const char*> truncated[] = {{a, "a"}, {b, "b"}, {d, "d"}};
    for (auto [v, name] : truncated)
        if (!(v > 0.0 && v < 1.0))
            throw std::domain_error(std::string("bipodal_series: truncated ") + name + "=" +
                                    std::to_string(v) + " outside (0,1)");
    return bipodal(a, b, c, d);
}

std::pair<MultipodalGraphon, TripodalSpec> tripodal_counterexample(
    double e, double sigma, double A, std::optional<double> override_b) {
    if (!(e > 0.0 && e < 1.0)) throw std::domain_error("tripodal: e outside (0,1)");
    if (!(sigma > 0.0)) throw std::domain_error("tripodal: sigma must be positive");
    if (!(A > 0.0)) throw std::domain_error("tripodal: A must be positive");
    double B = override_b ? *override_b
                          : -h_derivative(3, e) / (2.0 * h_derivative(2, e)) * A * A;
    if (!(A > B && B >= 0.0))
        throw std::domain_error("tripodal: requires A > B >= 0, got A=" + std::to_string(A) +
                                " B=" + std::to_string(B));
    double c = sigma * std::pow(A * A * A - B * B * B, -1.0 / 3.0);
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("tripodal: pod scale c=" + std::to_string(c) +
                                " outside (0,1); sigma too large for this A");
    double v_small_diag = e - A + B * (1.0 - c);
    double v_small_off = e + A + B * (1.0 - c);
    double v_cross = e - c * B;
    double v_large = e + c * c * B / (1.0 - c);
    const std::pair<double, const char*> blocks[] = {{v_small_diag, "e-A+B(1-c)"},
                                                     {v_small_off, "e+A+B(1-c)"},
                                                     {v_cross, "e-cB"},
                                                     {v_large, "e+c^2B/(1-c)"}};
    for (auto [v, name] : blocks)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error(std::string("tripodal: block ") + name + "=" +
                                    std::to_string(v) + " outside [0,1]");

    Eigen::VectorXd masses(3);
    masses << c / 2.0, c / 2.0, 1.0 - c;
    Eigen::MatrixXd p(3, 3);
    p << v_small_diag, v_small_off, v_cross,
         v_small_off, v_small_diag, v_cross,
         v_cross, v_cross, v_large;
    auto g = make_graphon(std::move(masses), std::move(p));
    double want_t = e * e * e - c * c * c * (A * A * A - B * B * B);
    assert_densities(g, e, want_t, "tripodal_counterexample");
    if (std::abs(want_t - (e * e * e - sigma * sigma * sigma)) > 1e-12)
        throw std::logic_error("tripodal_counterexample: triangle target mismatch");
    return {std::move(g), TripodalSpec{e, sigma, A, B, c}};
}

double f_of_ab(double e, double A, double B) {
    if (!(A > B && B >= 0.0))
        throw std::domain_error("f_of_ab: requires A > B >= 0 (nonpositive denominator)");
    double lo = e - A + B, hi = e + A + B;
    if (!(lo > 0.0 && lo < 1.0 && hi > 0.0 && hi < 1.0))
        throw std::domain_error("f_of_ab: e+-A+B outside (0,1)");
    double num = binary_entropy(hi) + binary_entropy(lo) - 2.0 * binary_entropy(e) -
                 2.0 * B * h_derivative(1, e);
    return num / std::pow(A * A * A - B * B * B, 2.0 / 3.0);
}

double e0() {
    double root = (3.0 - std::sqrt(3.0)) / 6.0;
    double h2 = h_derivative(2, root);
    double h3 = h_derivative(3, root);
    double h4 = h_derivative(4, root);
    double residual = 3.0 * h3 * h3 - h2 * h4;
    if (std::abs(residual) > 1e-9)
        throw std::logic_error("e0: 3H'''(e0)^2 - H''(e0)H''''(e0) = " +
                               std::to_string(residual) + " exceeds 1e-9");
    return root;
}

}  // namespace graphon
