#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "graphon/densities.hpp"
#include "graphon/entropy.hpp"
#include "graphon/named.hpp"
#include "graphon/optimize.hpp"
#include "graphon/spectral.hpp"

using namespace graphon;

TEST_CASE("constant graphon endpoints") {
    CHECK(entropy(constant_graphon(0.0)) == 0.0);
    CHECK(entropy(constant_graphon(0.5)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(triangle_density(constant_graphon(0.3)) == doctest::Approx(0.027).epsilon(1e-14));
    CHECK_THROWS_AS(constant_graphon(1.2), std::domain_error);
}

TEST_CASE("symmetric bipodal construction and domain") {
    auto g = symmetric_bipodal(0.5, 0.2);
    CHECK(std::abs(triangle_density(g) - 0.117) <= 1e-15);
    CHECK(entropy(g) ==
          doctest::Approx(0.5 * (binary_entropy(0.7) + binary_entropy(0.3))).epsilon(1e-14));

    // sigma = e with e < 1/2: diagonal blocks hit zero and triangles vanish
    auto zero_t = symmetric_bipodal(0.3, 0.3);
    CHECK(zero_t.values(0, 0) == 0.0);
    CHECK(std::abs(triangle_density(zero_t) - 0.0) <= 1e-15);

    CHECK_THROWS_AS(symmetric_bipodal(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(symmetric_bipodal(0.3, 0.31), std::domain_error);
}

TEST_CASE("bipodal construction") {
    CHECK(edge_density(bipodal(0.2, 0.4, 0.25, 0.6)) ==
          doctest::Approx(0.4625).epsilon(1e-14));
    CHECK(l2_distance(bipodal(0.3, 0.3, 0.5, 0.3), constant_graphon(0.3)) <= 1e-15);
    CHECK(classify(bipodal(0.4, 0.4, 0.5, 0.7)).kind == Classification::symmetric_bipodal);
    CHECK_THROWS_AS(bipodal(0.2, 0.4, 0.0, 0.6), std::domain_error);
    CHECK_THROWS_AS(bipodal(1.2, 0.4, 0.5, 0.6), std::domain_error);
}

TEST_CASE("bipodal series truncation values") {
    auto g = bipodal_series(0.6, 0.05);
    CHECK(g.values(0, 0) == doctest::Approx(0.35).epsilon(1e-15));   // a = 1-e-sigma
    CHECK(g.pods[0] == doctest::Approx(0.225).epsilon(1e-14));       // c = 0.25 - 0.025
    double hp = h_derivative(1, 0.6), hpp = h_derivative(2, 0.6);
    double want_d = 0.65 + 0.0025 * (hp - 0.1 * hpp) / (0.6 * hp);
    CHECK(g.values(0, 1) == doctest::Approx(want_d).epsilon(1e-14));
    double want_b = 0.6 - 0.0025 / 0.2;
    CHECK(g.values(1, 1) == doctest::Approx(want_b).epsilon(1e-14));

    CHECK_THROWS_AS(bipodal_series(0.5, 0.05), std::domain_error);
    CHECK_THROWS_AS(bipodal_series(0.45, 0.05), std::domain_error);
}

TEST_CASE("bipodal series satisfies the asymmetric structure") {
    for (double e = 0.55; e <= 0.901; e += 0.05)
        for (double sigma : {0.02, 0.01, 0.005}) {
            auto g = bipodal_series(e, sigma);
            double a = g.values(0, 0), b = g.values(1, 1), d = g.values(0, 1);
            CHECK(a < b);
            CHECK(b < d);
            CHECK(g.pods[0] < 0.5);
        }
}

TEST_CASE("tripodal counterexample construction") {
    auto [g, spec] = tripodal_counterexample(0.15, 0.02, 0.05);
    CHECK(spec.B > 0.0);  // H'''(0.15) > 0 > H''(0.15)
    CHECK(spec.B == doctest::Approx(-h_derivative(3, 0.15) / (2 * h_derivative(2, 0.15)) *
                                    0.05 * 0.05)
                        .epsilon(1e-15));
    CHECK(std::abs(edge_density(g) - 0.15) <= 1e-12);
    CHECK(std::abs(triangle_density(g) - (std::pow(0.15, 3) - std::pow(0.02, 3))) <= 1e-12);

    // rank-2 spectrum with eigenvalues -cA and +cB
    auto s = spectrum(g, 0.15);
    CHECK(s.eigenvalues[0] == doctest::Approx(-spec.c * spec.A).epsilon(1e-10));
    CHECK(s.eigenvalues[1] == doctest::Approx(spec.c * spec.B).epsilon(1e-10));
    CHECK(std::abs(s.eigenvalues[2]) <= 1e-10);

    // forcing B = 0 collapses to the rank-1 tripodal with c = sigma/A
    auto [g0, spec0] = tripodal_counterexample(0.15, 0.02, 0.05, 0.0);
    CHECK(spec0.c == doctest::Approx(0.02 / 0.05).epsilon(1e-14));
    CHECK(std::abs(triangle_density(g0) -
                   (std::pow(0.15, 3) - std::pow(spec0.c, 3) * std::pow(0.05, 3))) <= 1e-12);

    // infeasible pod scale: sigma too large for this A
    CHECK_THROWS_AS(tripodal_counterexample(0.15, 0.2, 0.05), std::domain_error);
}

TEST_CASE("F(A,B) basics") {
    // F(A,0) is a second central difference: -> H''(e) as A -> 0
    double e = 0.3;
    CHECK(std::abs(f_of_ab(e, 1e-3, 0.0) - h_derivative(2, e)) < 1e-3);
    CHECK_THROWS_AS(f_of_ab(e, 0.01, 0.02), std::domain_error);
    CHECK_THROWS_AS(f_of_ab(0.05, 0.2, 0.1), std::domain_error);

    // below e0 the A^2 correction is positive
    double b_rule = -h_derivative(3, 0.15) / (2 * h_derivative(2, 0.15)) * 0.02 * 0.02;
    CHECK(f_of_ab(0.15, 0.02, b_rule) > h_derivative(2, 0.15));
}

namespace {

// fitted A^2 coefficient of F(A, B(A)); the cubic term from the denominator
// expansion must be in the basis or it aliases onto the quadratic one
double fitted_quadratic_coefficient(double e, double a_min, double a_max, int n) {
    Eigen::MatrixXd X(n, 3);
    Eigen::VectorXd y(n);
    for (int k = 0; k < n; ++k) {
        double A = a_min + (a_max - a_min) * k / (n - 1);
        double B = -h_derivative(3, e) / (2 * h_derivative(2, e)) * A * A;
        X(k, 0) = 1.0;
        X(k, 1) = A * A;
        X(k, 2) = A * A * A;
        y[k] = f_of_ab(e, A, B);
    }
    Eigen::Vector3d beta = X.colPivHouseholderQr().solve(y);
    return beta[1];
}

}  // namespace

TEST_CASE("F expansion: quadratic coefficient matches H''''/12 - H'''^2/(4H'')") {
    for (double e : {0.10, 0.15, 0.20}) {
        double kappa = h_derivative(4, e) / 12.0 -
                       std::pow(h_derivative(3, e), 2) / (4.0 * h_derivative(2, e));
        double fit = fitted_quadratic_coefficient(e, 0.005, 0.02, 20);
        CHECK(std::abs(fit - kappa) / std::abs(kappa) <= 0.05);
    }
    // above the midpoint-side threshold the sign flips
    CHECK(fitted_quadratic_coefficient(0.4, 0.005, 0.04, 20) < 0.0);
}

TEST_CASE("e0 root and derivative identity") {
    double root = e0();
    CHECK(root == doctest::Approx((3.0 - std::sqrt(3.0)) / 6.0).epsilon(1e-16));
    CHECK(root == doctest::Approx(0.21132487).epsilon(1e-8));
    CHECK(std::abs(6 * root * root - 6 * root + 1) <= 1e-15);
    CHECK(std::abs(3 * std::pow(h_derivative(3, root), 2) -
                   h_derivative(2, root) * h_derivative(4, root)) <= 1e-9);
    auto discr = [](double e) {
        return 3 * std::pow(h_derivative(3, e), 2) - h_derivative(2, e) * h_derivative(4, e);
    };
    CHECK(discr(0.1) > 0.0);
    CHECK(discr(0.4) < 0.0);
}
