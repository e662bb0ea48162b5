#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "dvgauss/dynamics.hpp"
#include "dvgauss/gaussian.hpp"
#include "dvgauss/lattice.hpp"
#include "dvgauss/linalg.hpp"
#include "dvgauss/operators.hpp"
#include "dvgauss/theta.hpp"
#include "dvgauss/thermal.hpp"
#include "dvgauss/wigner.hpp"

namespace dvg {

/// One invariant suite: the worst residual observed and the bound it must meet.
struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool passed;
};

namespace detail {

inline CheckResult make_result(std::string name, double residual, double tolerance) {
    const bool ok = residual <= tolerance;
    return CheckResult{std::move(name), residual, tolerance, ok};
}

inline CMatrix random_density(int d, std::mt19937& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMatrix g(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) g(r, c) = complexd(dist(rng), dist(rng));
    }
    CMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline CVector random_pure(int d, std::mt19937& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CVector psi(d);
    for (int r = 0; r < d; ++r) psi(r) = complexd(dist(rng), dist(rng));
    return psi / psi.norm();
}

/// Random covariance with det = 1: rotation conjugate of diag(e^t, e^-t).
inline CovMat2 random_unimodular_cov(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> stretch(-0.8, 0.8);
    const double phi = angle(rng);
    const double t = stretch(rng);
    Eigen::Matrix2d r;
    r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    Eigen::Matrix2d d0 = Eigen::Vector2d(std::exp(t), std::exp(-t)).asDiagonal();
    return CovMat2::from_matrix(r * d0 * r.transpose(), 1e-10);
}

}  // namespace detail

/// Round trip reconstruct_density(wigner_of_density(rho)) = rho.
inline CheckResult check_wigner_round_trip() {
    std::mt19937 rng(20260801);
    double worst = 0.0;
    for (int d : {3, 5, 7, 11}) {
        const LatticeDim dim(d);
        for (int rep = 0; rep < 3; ++rep) {
            const CMatrix rho = detail::random_density(d, rng);
            const CMatrix back = reconstruct_density(wigner_of_density(rho, dim));
            worst = std::max(worst, (back - rho).norm());
        }
    }
    return detail::make_result("wigner-round-trip", worst, 1e-12);
}

/// tr(Pi(n,k) Pi(m,l)) = d * delta * delta, and tr Pi = 1.
inline CheckResult check_parity_orthogonality() {
    double worst = 0.0;
    for (int d : {3, 5, 7}) {
        const LatticeDim dim(d);
        std::vector<CMatrix> pis;
        for (int n = -dim.s; n <= dim.s; ++n)
            for (int k = -dim.s; k <= dim.s; ++k) pis.push_back(displaced_parity(dim, n, k));
        for (std::size_t i = 0; i < pis.size(); ++i) {
            worst = std::max(worst, std::abs(pis[i].trace() - complexd(1.0, 0.0)));
            for (std::size_t j = 0; j < pis.size(); ++j) {
                const complexd t = (pis[i] * pis[j]).trace();
                const double expect = i == j ? static_cast<double>(d) : 0.0;
                worst = std::max(worst, std::abs(t - expect));
            }
        }
    }
    return detail::make_result("parity-basis-orthogonality", worst, 1e-12);
}

/// Row sums give |psi(n)|^2 and column sums give |F psi(k)|^2.
inline CheckResult check_marginals() {
    std::mt19937 rng(20260802);
    double worst = 0.0;
    for (int d : {3, 5, 7, 11}) {
        const LatticeDim dim(d);
        const CMatrix f = dft_matrix(dim);
        for (int rep = 0; rep < 3; ++rep) {
            const CVector psi = detail::random_pure(d, rng);
            const CVector fpsi = f * psi;
            const WignerGrid grid = wigner_of_pure(psi, dim);
            const auto [pos, mom] = marginals(grid);
            for (int i = 0; i < d; ++i) {
                worst = std::max(worst, std::abs(pos(i) - std::norm(psi(i))));
                worst = std::max(worst, std::abs(mom(i) - std::norm(fpsi(i))));
            }
        }
    }
    return detail::make_result("marginal-identities", worst, 1e-12);
}

/// (1/d) sum_{n,k} |n,k><n,k| = I.
inline CheckResult check_coherent_resolution() {
    double worst = 0.0;
    for (int d : {3, 5, 7}) {
        const LatticeDim dim(d);
        CMatrix acc = CMatrix::Zero(d, d);
        for (int n = -dim.s; n <= dim.s; ++n) {
            for (int k = -dim.s; k <= dim.s; ++k) {
                const CVector c = coherent_state(dim, n, k);
                acc += c * c.adjoint();
            }
        }
        acc /= static_cast<double>(d);
        worst = std::max(worst, (acc - CMatrix::Identity(d, d)).norm());
    }
    return detail::make_result("coherent-resolution-of-identity", worst, 1e-12);
}

/// F[g_kappa] = kappa^{-1/2} g_{1/kappa}, single- and two-mode.
inline CheckResult check_fourier_theta_identities() {
    double worst = 0.0;
    for (double kappa : {0.5, 1.0, 2.0, 5.0}) {
        for (int d : {3, 5, 7, 11, 31}) {
            worst = std::max(worst, fourier_identity_check(kappa, LatticeDim(d)));
        }
    }
    for (int d : {3, 5}) {
        worst = std::max(worst, fourier_identity_check_2d(CovMat2(2.0, 1.0, 1.0), LatticeDim(d)));
        worst = std::max(worst, fourier_identity_check_2d(CovMat2(1.0, 0.0, 1.0), LatticeDim(d)));
    }
    return detail::make_result("fourier-theta-identities", worst, 1e-12);
}

/// Covariance theorems: synthesized sigma_kappa equals |g_kappa><g_kappa|
/// (T1); displacement shifts the grid modularly (T2/T3); Fourier conjugation
/// maps the grid by (n,k) -> (-k,n) and sigma to Omega sigma Omega^T (T4).
inline CheckResult check_covariance_theorems() {
    double worst = 0.0;

    for (double kappa : {1.0, 2.0}) {
        for (int d : {7, 9}) {
            const LatticeDim dim(d);
            const GaussianState st = synthesize(CovMat2(1.0 / kappa, 0.0, kappa), dim);
            const CVector g = gaussian_vector(kappa, dim);
            worst = std::max(worst, (st.rho - g * g.adjoint()).norm());
        }
    }

    {
        const LatticeDim dim(7);
        const GaussianState st = synthesize(CovMat2(2.0, 1.0, 1.0), dim);
        const CMatrix dm = displacement(dim, 1, 2);
        const WignerGrid shifted = wigner_of_density(dm * st.rho * dm.adjoint(), dim);
        for (int n = -dim.s; n <= dim.s; ++n)
            for (int k = -dim.s; k <= dim.s; ++k)
                worst = std::max(worst, std::abs(shifted.at(n, k) - st.grid.at(n - 1, k - 2)));

        const CMatrix f = dft_matrix(dim);
        const WignerGrid rotated = wigner_of_density(f * st.rho * f.adjoint(), dim);
        for (int n = -dim.s; n <= dim.s; ++n)
            for (int k = -dim.s; k <= dim.s; ++k)
                worst = std::max(worst, std::abs(rotated.at(n, k) - st.grid.at(-k, n)));

        const GaussianState mapped = synthesize(CovMat2(1.0, -1.0, 2.0), dim);  // Omega sigma Omega^T
        for (std::size_t i = 0; i < mapped.grid.values.size(); ++i) {
            worst = std::max(worst, std::abs(mapped.grid.values[i] - rotated.values[i]));
        }
    }
    return detail::make_result("covariance-theorems", worst, 1e-8);
}

/// det sigma = 1 implies a pure synthesized state.
inline CheckResult check_unimodular_purity() {
    std::mt19937 rng(20260803);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const CovMat2 sigma = detail::random_unimodular_cov(rng);
        for (int d : {3, 5, 7}) {
            const GaussianState st = synthesize(sigma, LatticeDim(d));
            worst = std::max(worst, std::abs(purity(st) - 1.0));
            const Eigen::VectorXd spec = spectrum_descending(st);
            if (spec.size() > 1) worst = std::max(worst, std::abs(spec(1)));
        }
    }
    return detail::make_result("unimodular-purity", worst, 1e-8);
}

/// All thermal states commute exactly at d = 3.
inline CheckResult check_thermal_commutation_d3() {
    const LatticeDim dim(3);
    double worst = 0.0;
    for (auto [nu, mu] : {std::pair{2.0, 3.0}, {1.5, 4.0}, {2.5, 2.5}}) {
        worst = std::max(worst, commutation_study(nu, mu, dim));
    }
    return detail::make_result("thermal-commutation-d3", worst, 1e-12);
}

/// S^T Omega S = Omega for the symplectic image of random (A, B).
inline CheckResult check_symplecticity() {
    std::mt19937 rng(20260804);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    Eigen::Matrix2d omega;
    omega << 0.0, 1.0, -1.0, 0.0;
    const LatticeDim dim(5);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        const GaussianTransformSpec spec =
            gaussian_transform(dist(rng), complexd(dist(rng), dist(rng)), dim);
        const Eigen::Matrix2d res =
            spec.symplectic.transpose() * omega * spec.symplectic - omega;
        worst = std::max(worst, res.norm());
    }
    return detail::make_result("symplecticity", worst, 1e-12);
}

/// Two-mode closed-form Wigner function of g_tau against the brute-force
/// double-sum evaluation, relative error at d = 3.
inline CheckResult check_two_mode_closed_form() {
    const LatticeDim dim(3);
    const CovMat2 tau(2.0, 1.0, 1.0);
    const WignerGrid closed = wigner_g_tau_closed_form(tau, dim);
    const CVector g = gaussian_vector_2d(tau, dim, /*normalized=*/false);
    const WignerGrid brute = wigner_of_pure(g, dim, /*modes=*/2);
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < closed.values.size(); ++i) {
        worst = std::max(worst, std::abs(closed.values[i] - brute.values[i]));
        scale = std::max(scale, std::abs(brute.values[i]));
    }
    return detail::make_result("two-mode-closed-form", worst / scale, 1e-12);
}

inline std::vector<CheckResult> run_all_checks() {
    return {check_wigner_round_trip(),      check_parity_orthogonality(),
            check_marginals(),              check_coherent_resolution(),
            check_fourier_theta_identities(), check_covariance_theorems(),
            check_unimodular_purity(),      check_thermal_commutation_d3(),
            check_symplecticity(),          check_two_mode_closed_form()};
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace dvg
