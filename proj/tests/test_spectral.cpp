#include <doctest.h>

#include <cmath>

#include "graphon/densities.hpp"
#include "graphon/named.hpp"
#include "graphon/rng.hpp"
#include "graphon/spectral.hpp"
#include "test_support.hpp"

using namespace graphon;

TEST_CASE("constant graphon has a null spectrum around its own value") {
    auto s = spectrum(constant_graphon(0.3), 0.3);
    CHECK(std::abs(s.eigenvalues[0]) <= 1e-15);
}

TEST_CASE("symmetric bipodal: single eigenvalue -sigma with a step eigenfunction") {
    double e = 0.5, sigma = 0.2;
    auto s = spectrum(symmetric_bipodal(e, sigma), e);
    CHECK(s.eigenvalues[0] == doctest::Approx(-sigma).epsilon(1e-12));
    CHECK(std::abs(s.eigenvalues[1]) <= 1e-12);
    CHECK(std::abs(std::abs(s.eigvec_pod_values(0, 0)) - 1.0) <= 1e-12);
    CHECK(std::abs(std::abs(s.eigvec_pod_values(1, 0)) - 1.0) <= 1e-12);
    CHECK(s.eigvec_pod_values(0, 0) * s.eigvec_pod_values(1, 0) ==
          doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("bipodal trace identities at center zero") {
    double a = 0.2, b = 0.4, c = 0.25, d = 0.6;
    auto s = spectrum(bipodal(a, b, c, d), 0.0);
    double l1 = s.eigenvalues[0], l2 = s.eigenvalues[1];
    CHECK(l1 * l2 == doctest::Approx(c * (1 - c) * (a * b - d * d)).epsilon(1e-12));
    CHECK(l1 + l2 == doctest::Approx(c * a + (1 - c) * b).epsilon(1e-12));
}

TEST_CASE("orthonormality and reconstruction on random graphons") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = test_support::random_graphon(rng, 6);
        double center = trial % 2 == 0 ? edge_density(g) : 0.0;
        auto s = spectrum(g, center);
        const int m = g.pod_count();
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                double dot = 0.0;
                for (int i = 0; i < m; ++i)
                    dot += g.pods[i] * s.eigvec_pod_values(i, j) * s.eigvec_pod_values(i, k);
                CHECK(std::abs(dot - (j == k ? 1.0 : 0.0)) <= 1e-10);
            }
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                double rec = center;
                for (int j = 0; j < m; ++j)
                    rec += s.eigenvalues[j] * s.eigvec_pod_values(i, j) *
                           s.eigvec_pod_values(k, j);
                CHECK(std::abs(rec - g.values(i, k)) <= 1e-10);
            }
    }
}

TEST_CASE("trace identity of the centered kernel") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = test_support::random_graphon(rng, 6);
        double e = edge_density(g);
        auto s = spectrum(g, e);
        double trace = 0.0;
        for (int i = 0; i < g.pod_count(); ++i) trace += g.pods[i] * (g.values(i, i) - e);
        CHECK(std::abs(s.eigenvalues.sum() - trace) <= 1e-12);
    }
}

TEST_CASE("spectral triangle identity") {
    CHECK(triangle_identity_residual(constant_graphon(0.4)) <= 1e-15);

    // symmetric bipodal: degree term vanishes and sum lambda^3 = -sigma^3
    auto g = symmetric_bipodal(0.5, 0.2);
    CHECK(triangle_identity_residual(g) <= 1e-12);
    auto s = spectrum(g, 0.5);
    double cubes = 0.0;
    for (int j = 0; j < 2; ++j) cubes += std::pow(s.eigenvalues[j], 3);
    CHECK(cubes == doctest::Approx(-0.008).epsilon(1e-12));

    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto rnd = test_support::random_graphon(rng, 6);
        CHECK(triangle_identity_residual(rnd) <= 1e-10);
    }
}
