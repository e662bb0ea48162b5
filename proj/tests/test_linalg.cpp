#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dvgauss/linalg.hpp"
#include "dvgauss/theta.hpp"

using namespace dvg;

namespace {

CMatrix random_hermitian(int n, std::mt19937& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMatrix g(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = complexd(dist(rng), dist(rng));
    return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("basic norms and traces") {
    CHECK(frobenius_norm(CMatrix::Identity(3, 3)) == Catch::Approx(std::sqrt(3.0)));
    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = 1.0; d(1, 1) = 2.0; d(2, 2) = 3.0;
    CHECK(trace(d).real() == Catch::Approx(6.0));
    CHECK(commutator(d, d).norm() == 0.0);
    CHECK_THROWS_AS(trace(CMatrix::Zero(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(commutator(CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("eigh round-trip on random Hermitian matrices up to dimension 121") {
    std::mt19937 rng(42);
    for (int n : {3, 11, 49, 121}) {
        const CMatrix m = random_hermitian(n, rng);
        const EigenDecomposition dec = eigh(m);
        const CMatrix rebuilt =
            dec.eigenvectors * dec.eigenvalues.cast<complexd>().asDiagonal() * dec.eigenvectors.adjoint();
        CHECK((rebuilt - m).norm() <= 1e-10 * m.norm());
        CHECK((dec.eigenvectors.adjoint() * dec.eigenvectors - CMatrix::Identity(n, n)).norm() <= 1e-10);
        for (Eigen::Index i = 0; i + 1 < dec.eigenvalues.size(); ++i) {
            CHECK(dec.eigenvalues(i) <= dec.eigenvalues(i + 1));
        }
    }
}

TEST_CASE("eigh rejects non-Hermitian and non-finite input") {
    CMatrix m(2, 2);
    m << complexd(0, 0), complexd(1, 0), complexd(0, 0), complexd(0, 0);
    CHECK_THROWS_AS(eigh(m), std::invalid_argument);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eigh(m), std::invalid_argument);
}

TEST_CASE("phase fixing makes the decomposition deterministic") {
    std::mt19937 rng(7);
    const CMatrix m = random_hermitian(9, rng);
    const EigenDecomposition a = eigh(m);
    const EigenDecomposition b = eigh(m);
    CHECK((a.eigenvectors - b.eigenvectors).norm() == 0.0);
    for (int c = 0; c < 9; ++c) {
        Eigen::Index imax;
        a.eigenvectors.col(c).cwiseAbs().maxCoeff(&imax);
        CHECK(a.eigenvectors(imax, c).imag() == Catch::Approx(0.0).margin(1e-14));
        CHECK(a.eigenvectors(imax, c).real() > 0.0);
    }
}

TEST_CASE("Hermitian exponential is unitary") {
    std::mt19937 rng(11);
    for (int n : {4, 9, 15}) {
        const CMatrix h = random_hermitian(n, rng);
        const CMatrix u = expm_hermitian_generator(h, complexd(0.0, -1.0));
        CHECK((u * u.adjoint() - CMatrix::Identity(n, n)).norm() <= 1e-10);
        const CMatrix uinv = expm_hermitian_generator(h, complexd(0.0, 1.0));
        CHECK((u * uinv - CMatrix::Identity(n, n)).norm() <= 1e-10);
    }
}

TEST_CASE("spectral norm is below Frobenius norm") {
    std::mt19937 rng(13);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
        CMatrix m(6, 6);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) m(r, c) = complexd(dist(rng), dist(rng));
        CHECK(spectral_norm(m) <= frobenius_norm(m) + 1e-12);
    }
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 3.0; d(1, 1) = -4.0;
    CHECK(spectral_norm(d) == Catch::Approx(4.0));
}

TEST_CASE("real 2x2 exponential closed form") {
    CHECK((expm_real_2x2(Eigen::Matrix2d::Zero()) - Eigen::Matrix2d::Identity()).norm() == 0.0);

    const double phi = kPi / 4.0;
    Eigen::Matrix2d skew;
    skew << 0.0, -phi, phi, 0.0;
    Eigen::Matrix2d rot;
    rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    CHECK((expm_real_2x2(skew) - rot).norm() <= 1e-15);

    Eigen::Matrix2d diag;
    diag << 1.0, 0.0, 0.0, -1.0;
    Eigen::Matrix2d expd;
    expd << std::exp(1.0), 0.0, 0.0, std::exp(-1.0);
    CHECK((expm_real_2x2(diag) - expd).norm() <= 1e-14);

    // Near-degenerate branch: nilpotent part.
    Eigen::Matrix2d nil;
    nil << 0.0, 1e-14, 0.0, 0.0;
    const Eigen::Matrix2d got = expm_real_2x2(nil);
    CHECK(got(0, 1) == Catch::Approx(1e-14));
    CHECK(got(0, 0) == Catch::Approx(1.0));
}

TEST_CASE("kPi is the double-precision pi") {
    CHECK(kPi == Catch::Approx(3.14159265358979323846));
}
