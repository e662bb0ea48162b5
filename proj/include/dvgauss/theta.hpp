#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "dvgauss/lattice.hpp"

namespace dvg {

inline constexpr double kPi = std::numbers::pi;

/// Real symmetric positive-definite 2x2 covariance matrix.
struct CovMat2 {
    double s11, s12, s22;

    CovMat2(double a11, double a12, double a22) : s11(a11), s12(a12), s22(a22) {
        if (!(s11 > 0.0) || !(det() > 0.0)) {
            throw std::invalid_argument("CovMat2: matrix is not positive-definite");
        }
    }

    double det() const { return s11 * s22 - s12 * s12; }

    CovMat2 inverse() const {
        const double dd = det();
        return CovMat2(s22 / dd, -s12 / dd, s11 / dd);
    }

    CovMat2 scaled(double c) const { return CovMat2(c * s11, c * s12, c * s22); }

    Eigen::Matrix2d matrix() const {
        Eigen::Matrix2d m;
        m << s11, s12, s12, s22;
        return m;
    }

    static CovMat2 from_matrix(const Eigen::Matrix2d& m, double sym_tol = 1e-12) {
        if (std::abs(m(0, 1) - m(1, 0)) > sym_tol * (1.0 + m.norm())) {
            throw std::invalid_argument("CovMat2: matrix is not symmetric");
        }
        return CovMat2(m(0, 0), 0.5 * (m(0, 1) + m(1, 0)), m(1, 1));
    }
};

/// Real symmetric positive-definite 4x4 covariance matrix in the
/// (q1, q2, p1, p2) coordinate ordering.
struct CovMat4 {
    Eigen::Matrix4d m;

    explicit CovMat4(const Eigen::Matrix4d& mat) : m(mat) {
        if ((m - m.transpose()).norm() > 1e-12 * (1.0 + m.norm())) {
            throw std::invalid_argument("CovMat4: matrix is not symmetric");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m);
        if (es.eigenvalues().minCoeff() <= 0.0) {
            throw std::invalid_argument("CovMat4: matrix is not positive-definite");
        }
    }

    /// Block-diagonal pure-state matrix diag(tau^-1, tau) in (q1,q2,p1,p2) order.
    static CovMat4 pure_from_tau(const CovMat2& tau) {
        Eigen::Matrix4d m4 = Eigen::Matrix4d::Zero();
        const CovMat2 ti = tau.inverse();
        m4.block<2, 2>(0, 0) = ti.matrix();
        m4.block<2, 2>(2, 2) = tau.matrix();
        return CovMat4(m4);
    }

    /// Two independent single-mode factors sigma_a (mode 1) and sigma_b (mode 2).
    static CovMat4 block_diagonal(const CovMat2& sigma_a, const CovMat2& sigma_b) {
        Eigen::Matrix4d m4 = Eigen::Matrix4d::Zero();
        m4(0, 0) = sigma_a.s11; m4(0, 2) = sigma_a.s12;
        m4(2, 0) = sigma_a.s12; m4(2, 2) = sigma_a.s22;
        m4(1, 1) = sigma_b.s11; m4(1, 3) = sigma_b.s12;
        m4(3, 1) = sigma_b.s12; m4(3, 3) = sigma_b.s22;
        return CovMat4(m4);
    }
};

enum class HalfShift { none, half };

inline double shift_value(HalfShift s) { return s == HalfShift::half ? 0.5 : 0.0; }

/// Periodized Gaussian (theta sum) of one discrete variable:
///   sum_alpha exp(-kappa*pi/d * (n + (alpha+shift)*d)^2).
/// The symmetric summation window is widened until the largest boundary term
/// drops below 1e-18 of the largest term.
inline double theta_1d(double kappa, const LatticeDim& dim, std::int64_t n,
                       HalfShift shift = HalfShift::none) {
    if (!(kappa > 0.0)) throw std::invalid_argument("theta_1d: kappa must be positive");
    const double sh = shift_value(shift);
    const double coeff = kappa * kPi / dim.d;

    int hw = 4;
    for (;;) {
        double sum = 0.0, max_term = 0.0, boundary = 0.0;
        for (int a = -hw; a <= hw; ++a) {
            const double x = static_cast<double>(n) + (a + sh) * dim.d;
            const double t = std::exp(-coeff * x * x);
            sum += t;
            if (t > max_term) max_term = t;
            if ((a == -hw || a == hw) && t > boundary) boundary = t;
        }
        if (boundary <= 1e-18 * max_term || hw >= (1 << 20)) return sum;
        hw *= 2;
    }
}

/// Periodized Gaussian of two discrete variables with the quadratic form tau,
/// including the four half-shifted variants.
inline double theta_2d(const CovMat2& tau, const LatticeDim& dim, std::int64_t n1, std::int64_t n2,
                       HalfShift shift1 = HalfShift::none, HalfShift shift2 = HalfShift::none) {
    const double sh1 = shift_value(shift1);
    const double sh2 = shift_value(shift2);
    const double coeff = kPi / dim.d;

    int hw = 4;
    for (;;) {
        double sum = 0.0, max_term = 0.0, boundary = 0.0;
        for (int a1 = -hw; a1 <= hw; ++a1) {
            for (int a2 = -hw; a2 <= hw; ++a2) {
                const double x1 = static_cast<double>(n1) + (a1 + sh1) * dim.d;
                const double x2 = static_cast<double>(n2) + (a2 + sh2) * dim.d;
                const double q = tau.s11 * x1 * x1 + 2.0 * tau.s12 * x1 * x2 + tau.s22 * x2 * x2;
                const double t = std::exp(-coeff * q);
                sum += t;
                if (t > max_term) max_term = t;
                if ((std::abs(a1) == hw || std::abs(a2) == hw) && t > boundary) boundary = t;
            }
        }
        if (boundary <= 1e-18 * max_term || hw >= (1 << 12)) return sum;
        hw *= 2;
    }
}

/// Continuum Gaussian window w_sigma(q, p) = exp{-(2pi/d) (q-qc, p-pc) sigma^-1 (...)}.
inline double gaussian_window(const CovMat2& sigma, const LatticeDim& dim, double q, double p,
                              double q_center = 0.0, double p_center = 0.0) {
    if (sigma.det() < 1e-14) throw std::invalid_argument("gaussian_window: singular covariance");
    const CovMat2 inv = sigma.inverse();
    const double x = q - q_center;
    const double y = p - p_center;
    const double quad = inv.s11 * x * x + 2.0 * inv.s12 * x * y + inv.s22 * y * y;
    return std::exp(-2.0 * kPi / dim.d * quad);
}

/// Two-mode window over (q1, q2, p1, p2).
inline double gaussian_window(const CovMat4& sigma, const LatticeDim& dim,
                              const std::array<double, 4>& point,
                              const std::array<double, 4>& center = {0.0, 0.0, 0.0, 0.0}) {
    if (sigma.m.determinant() < 1e-14) throw std::invalid_argument("gaussian_window: singular covariance");
    const Eigen::Matrix4d inv = sigma.m.inverse();
    Eigen::Vector4d v;
    for (int i = 0; i < 4; ++i) v(i) = point[i] - center[i];
    return std::exp(-2.0 * kPi / dim.d * v.dot(inv * v));
}

/// The discrete Gaussian g_kappa as a state vector over [-s, s].
inline CVector gaussian_vector(double kappa, const LatticeDim& dim, bool normalized = true) {
    CVector v(dim.d);
    for (int n = -dim.s; n <= dim.s; ++n) {
        v(grid_index(n, dim)) = theta_1d(kappa, dim, n);
    }
    if (normalized) v /= v.norm();
    return v;
}

/// Two-mode discrete Gaussian g_tau as a vector over the d^2-dimensional space,
/// (n1 major, n2 minor) index convention.
inline CVector gaussian_vector_2d(const CovMat2& tau, const LatticeDim& dim, bool normalized = true) {
    CVector v(dim.d * dim.d);
    for (int n1 = -dim.s; n1 <= dim.s; ++n1) {
        for (int n2 = -dim.s; n2 <= dim.s; ++n2) {
            v(grid_index(n1, dim) * dim.d + grid_index(n2, dim)) = theta_2d(tau, dim, n1, n2);
        }
    }
    if (normalized) v /= v.norm();
    return v;
}

}  // namespace dvg
