#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dvgauss/theta.hpp"

using namespace dvg;

namespace {

// Brute-force oracle for the 1d theta sum with a generous fixed window.
double theta_1d_brute(double kappa, int d, double n, double shift) {
    double sum = 0.0;
    for (int a = -40; a <= 40; ++a) {
        const double x = n + (a + shift) * d;
        sum += std::exp(-kappa * kPi / d * x * x);
    }
    return sum;
}

double theta_2d_brute(const CovMat2& tau, int d, int n1, int n2, double sh1, double sh2) {
    double sum = 0.0;
    for (int a1 = -40; a1 <= 40; ++a1) {
        for (int a2 = -40; a2 <= 40; ++a2) {
            const double x1 = n1 + (a1 + sh1) * d;
            const double x2 = n2 + (a2 + sh2) * d;
            const double q = tau.s11 * x1 * x1 + 2.0 * tau.s12 * x1 * x2 + tau.s22 * x2 * x2;
            sum += std::exp(-kPi / d * q);
        }
    }
    return sum;
}

}  // namespace

TEST_CASE("CovMat2 validates positive-definiteness and inverts") {
    CHECK_THROWS_AS(CovMat2(1.0, 2.0, 1.0), std::invalid_argument);  // det < 0
    CHECK_THROWS_AS(CovMat2(-1.0, 0.0, -1.0), std::invalid_argument);
    const CovMat2 m(2.0, 1.0, 1.0);
    CHECK(m.det() == Catch::Approx(1.0));
    const CovMat2 inv = m.inverse();
    CHECK(inv.s11 == Catch::Approx(1.0));
    CHECK(inv.s12 == Catch::Approx(-1.0));
    CHECK(inv.s22 == Catch::Approx(2.0));
    const Eigen::Matrix2d prod = m.matrix() * inv.matrix();
    CHECK((prod - Eigen::Matrix2d::Identity()).norm() <= 1e-14);
    CHECK(CovMat2::from_matrix(m.matrix()).s22 == m.s22);
    Eigen::Matrix2d asym;
    asym << 1.0, 0.5, -0.5, 1.0;
    CHECK_THROWS_AS(CovMat2::from_matrix(asym), std::invalid_argument);
}

TEST_CASE("CovMat4 constructors validate and place blocks correctly") {
    CHECK_THROWS_AS(CovMat4(Eigen::Matrix4d::Zero()), std::invalid_argument);

    const CovMat2 tau(2.0, 1.0, 1.0);
    const CovMat4 pure = CovMat4::pure_from_tau(tau);
    CHECK(pure.m(0, 0) == Catch::Approx(1.0));   // (tau^-1)_{11}
    CHECK(pure.m(2, 2) == Catch::Approx(2.0));   // tau_{11}
    CHECK(pure.m.determinant() == Catch::Approx(1.0));

    const CovMat2 a(2.0, 0.5, 3.0);
    const CovMat2 b(4.0, -1.0, 5.0);
    const CovMat4 bd = CovMat4::block_diagonal(a, b);
    // (q1, q2, p1, p2) ordering: mode-1 entries at indices {0, 2}.
    CHECK(bd.m(0, 0) == a.s11);
    CHECK(bd.m(0, 2) == a.s12);
    CHECK(bd.m(2, 2) == a.s22);
    CHECK(bd.m(1, 1) == b.s11);
    CHECK(bd.m(1, 3) == b.s12);
    CHECK(bd.m(3, 3) == b.s22);
    CHECK(bd.m(0, 1) == 0.0);
}

TEST_CASE("theta_1d matches the brute-force oracle") {
    for (double kappa : {0.3, 1.0, 2.0, 5.0}) {
        for (int d : {3, 5, 7, 11}) {
            const LatticeDim dim(d);
            for (int n = -dim.s; n <= dim.s; ++n) {
                CHECK(theta_1d(kappa, dim, n) ==
                      Catch::Approx(theta_1d_brute(kappa, d, n, 0.0)).epsilon(1e-14));
                CHECK(theta_1d(kappa, dim, n, HalfShift::half) ==
                      Catch::Approx(theta_1d_brute(kappa, d, n, 0.5)).epsilon(1e-14));
            }
        }
    }
    CHECK_THROWS_AS(theta_1d(0.0, LatticeDim(5), 0), std::invalid_argument);
}

TEST_CASE("theta_1d is positive, even, and d-periodic") {
    const LatticeDim dim(7);
    for (int n = -20; n <= 20; ++n) {
        const double v = theta_1d(1.3, dim, n);
        CHECK(v > 0.0);
        CHECK(v == Catch::Approx(theta_1d(1.3, dim, n + 7)).epsilon(1e-15));
        CHECK(v == Catch::Approx(theta_1d(1.3, dim, -n)).epsilon(1e-15));
    }
    // Small kappa exercises the adaptive widening (slow decay); the sum is
    // close to the integral value sqrt(1/(kappa*d)) = 18.257...
    CHECK(theta_1d(1e-3, LatticeDim(3), 1) ==
          Catch::Approx(std::sqrt(1.0 / (1e-3 * 3.0))).epsilon(1e-3));
}

TEST_CASE("theta_2d matches the brute-force oracle and factorizes for diagonal tau") {
    const LatticeDim dim(5);
    const CovMat2 tau(2.0, 1.0, 1.0);
    for (int n1 = -2; n1 <= 2; ++n1) {
        for (int n2 = -2; n2 <= 2; ++n2) {
            CHECK(theta_2d(tau, dim, n1, n2) ==
                  Catch::Approx(theta_2d_brute(tau, 5, n1, n2, 0.0, 0.0)).epsilon(1e-14));
            CHECK(theta_2d(tau, dim, n1, n2, HalfShift::half, HalfShift::none) ==
                  Catch::Approx(theta_2d_brute(tau, 5, n1, n2, 0.5, 0.0)).epsilon(1e-14));
        }
    }
    const CovMat2 diag(2.0, 0.0, 3.0);
    for (int n1 = -2; n1 <= 2; ++n1) {
        for (int n2 = -2; n2 <= 2; ++n2) {
            CHECK(theta_2d(diag, dim, n1, n2) ==
                  Catch::Approx(theta_1d(2.0, dim, n1) * theta_1d(3.0, dim, n2)).epsilon(1e-14));
        }
    }
}

TEST_CASE("gaussian_window is a centered continuum Gaussian") {
    const LatticeDim dim(5);
    const CovMat2 sigma(2.0, 0.0, 2.0);
    CHECK(gaussian_window(sigma, dim, 0.0, 0.0) == 1.0);
    CHECK(gaussian_window(sigma, dim, 1.0, 0.0) ==
          Catch::Approx(std::exp(-2.0 * kPi / 5.0 * 0.5)));
    CHECK(gaussian_window(sigma, dim, 3.0, -1.0, 3.0, -1.0) == 1.0);

    const CovMat4 sigma4 = CovMat4::block_diagonal(sigma, sigma);
    CHECK(gaussian_window(sigma4, dim, {1.0, 0.0, 0.0, 0.0}) ==
          Catch::Approx(gaussian_window(sigma, dim, 1.0, 0.0)));
    CHECK(gaussian_window(sigma4, dim, {1.0, 2.0, -1.0, 0.5}, {1.0, 2.0, -1.0, 0.5}) == 1.0);
}

TEST_CASE("gaussian_vector is normalized and even") {
    const LatticeDim dim(7);
    const CVector g = gaussian_vector(1.0, dim);
    CHECK(g.norm() == Catch::Approx(1.0));
    for (int n = 1; n <= 3; ++n) {
        CHECK(g(grid_index(n, dim)).real() == Catch::Approx(g(grid_index(-n, dim)).real()));
    }
    const CVector raw = gaussian_vector(2.0, dim, /*normalized=*/false);
    CHECK(raw(grid_index(0, dim)).real() == Catch::Approx(theta_1d(2.0, dim, 0)));
}

TEST_CASE("gaussian_vector_2d lays out (n1 major, n2 minor)") {
    const LatticeDim dim(3);
    const CovMat2 tau(2.0, 1.0, 1.0);
    const CVector g = gaussian_vector_2d(tau, dim, /*normalized=*/false);
    CHECK(g.size() == 9);
    CHECK(g(grid_index(1, dim) * 3 + grid_index(-1, dim)).real() ==
          Catch::Approx(theta_2d(tau, dim, 1, -1)));
    CHECK(gaussian_vector_2d(tau, dim).norm() == Catch::Approx(1.0));
}
