#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "dvgauss/lattice.hpp"
#include "dvgauss/linalg.hpp"
#include "dvgauss/theta.hpp"

namespace dvg {

namespace detail {
inline void check_lattice_point(int v, const LatticeDim& dim, const char* what) {
    if (v < -dim.s || v > dim.s) {
        throw std::out_of_range(std::string(what) + ": coordinate outside [-s, s]");
    }
}
}  // namespace detail

/// Unitary discrete Fourier matrix F[k, n] = d^{-1/2} exp(-2*pi*i*k*n/d),
/// rows and columns indexed by representatives in [-s, s].
inline CMatrix dft_matrix(const LatticeDim& dim) {
    CMatrix f(dim.d, dim.d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim.d));
    for (int k = -dim.s; k <= dim.s; ++k) {
        for (int n = -dim.s; n <= dim.s; ++n) {
            const double phase = -2.0 * kPi * k * n / dim.d;
            f(grid_index(k, dim), grid_index(n, dim)) = norm * std::polar(1.0, phase);
        }
    }
    return f;
}

/// Parity: (P psi)(n) = psi(-n).
inline CMatrix parity_matrix(const LatticeDim& dim) {
    CMatrix p = CMatrix::Zero(dim.d, dim.d);
    for (int n = -dim.s; n <= dim.s; ++n) {
        p(grid_index(n, dim), grid_index(-n, dim)) = 1.0;
    }
    return p;
}

inline CMatrix position_operator(const LatticeDim& dim) {
    CMatrix q = CMatrix::Zero(dim.d, dim.d);
    for (int n = -dim.s; n <= dim.s; ++n) {
        q(grid_index(n, dim), grid_index(n, dim)) = static_cast<double>(n);
    }
    return q;
}

inline CMatrix momentum_operator(const LatticeDim& dim) {
    const CMatrix f = dft_matrix(dim);
    return f.adjoint() * position_operator(dim) * f;
}

/// Displacement D(n, k): (D psi)(m) = exp(-pi*i*n*k/d) exp(2*pi*i*k*m/d) psi(m - n).
inline CMatrix displacement(const LatticeDim& dim, int n, int k) {
    detail::check_lattice_point(n, dim, "displacement");
    detail::check_lattice_point(k, dim, "displacement");
    CMatrix dmat = CMatrix::Zero(dim.d, dim.d);
    const complexd prefactor = std::polar(1.0, -kPi * n * k / dim.d);
    for (int m = -dim.s; m <= dim.s; ++m) {
        dmat(grid_index(m, dim), grid_index(m - n, dim)) =
            prefactor * std::polar(1.0, 2.0 * kPi * k * m / dim.d);
    }
    return dmat;
}

/// Displaced parity Pi(n, k): (Pi psi)(m) = exp(-2*pi*i/d * 2k(n-m)) psi(2n - m).
/// Hermitian and unitary.
inline CMatrix displaced_parity(const LatticeDim& dim, int n, int k) {
    detail::check_lattice_point(n, dim, "displaced_parity");
    detail::check_lattice_point(k, dim, "displaced_parity");
    CMatrix p = CMatrix::Zero(dim.d, dim.d);
    for (int m = -dim.s; m <= dim.s; ++m) {
        p(grid_index(m, dim), grid_index(2 * n - m, dim)) =
            std::polar(1.0, -2.0 * kPi / dim.d * 2.0 * k * (n - m));
    }
    return p;
}

/// Ladder pair (a, a^dag) with a = sqrt(pi/d) (q + i p).
inline std::pair<CMatrix, CMatrix> ladder_operators(const LatticeDim& dim) {
    const CMatrix q = position_operator(dim);
    const CMatrix p = momentum_operator(dim);
    const double c = std::sqrt(kPi / dim.d);
    CMatrix a = c * (q + complexd(0.0, 1.0) * p);
    CMatrix ad = a.adjoint();
    return {std::move(a), std::move(ad)};
}

/// Discrete coherent state |n, k> = D(n, k) g_1.
inline CVector coherent_state(const LatticeDim& dim, int n, int k) {
    return displacement(dim, n, k) * gaussian_vector(1.0, dim);
}

/// Kronecker product with (mode-1 major, mode-2 minor) index convention.
/// Rejects results above max_result_dim (two-mode d <= 15 by default).
inline CMatrix tensor_product(const CMatrix& a, const CMatrix& b, Eigen::Index max_result_dim = 225) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) {
        throw std::invalid_argument("tensor_product: factors must be square");
    }
    if (a.rows() * b.rows() > max_result_dim) {
        throw std::length_error("tensor_product: result exceeds configured dimension cap");
    }
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Two-mode displaced parity Pi(n1, k1) (x) Pi(n2, k2).
inline CMatrix displaced_parity_2d(const LatticeDim& dim, int n1, int k1, int n2, int k2,
                                   Eigen::Index max_result_dim = 225) {
    return tensor_product(displaced_parity(dim, n1, k1), displaced_parity(dim, n2, k2),
                          max_result_dim);
}

/// Max deviation of F[g_kappa] from kappa^{-1/2} g_{1/kappa}.
inline double fourier_identity_check(double kappa, const LatticeDim& dim) {
    if (!(kappa > 0.0)) throw std::invalid_argument("fourier_identity_check: kappa must be positive");
    const CMatrix f = dft_matrix(dim);
    CVector g(dim.d), g_inv(dim.d);
    for (int n = -dim.s; n <= dim.s; ++n) {
        g(grid_index(n, dim)) = theta_1d(kappa, dim, n);
        g_inv(grid_index(n, dim)) = theta_1d(1.0 / kappa, dim, n);
    }
    const CVector lhs = f * g;
    const CVector rhs = g_inv / std::sqrt(kappa);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

/// Two-mode analog: F2[g_tau] = (det tau)^{-1/2} g_{tau^-1}.
inline double fourier_identity_check_2d(const CovMat2& tau, const LatticeDim& dim) {
    const CMatrix f1 = dft_matrix(dim);
    const CMatrix f2 = tensor_product(f1, f1);
    const CVector g = gaussian_vector_2d(tau, dim, /*normalized=*/false);
    const CVector g_inv = gaussian_vector_2d(tau.inverse(), dim, /*normalized=*/false);
    const CVector lhs = f2 * g;
    const CVector rhs = g_inv / std::sqrt(tau.det());
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

/// Immutable bundle of the frequently reused operators for one dimension.
struct OperatorSet {
    LatticeDim dim;
    CMatrix dft;
    CMatrix position;
    CMatrix momentum;

    explicit OperatorSet(const LatticeDim& d)
        : dim(d), dft(dft_matrix(d)), position(position_operator(d)),
          momentum(dft.adjoint() * position * dft) {}
};

}  // namespace dvg
