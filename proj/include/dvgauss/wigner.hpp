#pragma once

#include <cmath>
#include <stdexcept>

#include "dvgauss/lattice.hpp"
#include "dvgauss/linalg.hpp"
#include "dvgauss/operators.hpp"
#include "dvgauss/theta.hpp"

namespace dvg {

namespace detail {

inline void check_imag_residue(double im, double scale) {
    if (std::abs(im) > 1e-10 * (scale > 1.0 ? scale : 1.0)) {
        throw std::runtime_error("wigner: imaginary residue above tolerance");
    }
}

}  // namespace detail

/// Forward transform of a density operator: W(n,k) = (1/d) tr(rho Pi(n,k)),
/// evaluated through the explicit m-sum. rho must be Hermitian to 1e-10.
/// Pass modes=2 for a d^2 x d^2 two-mode operator.
inline WignerGrid wigner_of_density(const CMatrix& rho, const LatticeDim& dim, int modes = 1) {
    const Eigen::Index expected = modes == 1 ? dim.d : dim.d * dim.d;
    if (rho.rows() != expected || rho.cols() != expected) {
        throw std::invalid_argument("wigner_of_density: operator shape does not match dimension");
    }
    if (!is_hermitian(rho)) {
        throw std::invalid_argument("wigner_of_density: operator is not Hermitian within tolerance");
    }

    WignerGrid grid(dim, modes);
    const double scale = rho.norm();
    if (modes == 1) {
        for (int n = -dim.s; n <= dim.s; ++n) {
            for (int k = -dim.s; k <= dim.s; ++k) {
                complexd acc = 0.0;
                for (int m = -dim.s; m <= dim.s; ++m) {
                    acc += std::polar(1.0, -4.0 * kPi * k * m / dim.d) *
                           rho(grid_index(n + m, dim), grid_index(n - m, dim));
                }
                acc /= dim.d;
                detail::check_imag_residue(acc.imag(), scale);
                grid.at(n, k) = acc.real();
            }
        }
    } else {
        const int d = dim.d;
        for (int n1 = -dim.s; n1 <= dim.s; ++n1)
        for (int n2 = -dim.s; n2 <= dim.s; ++n2)
        for (int k1 = -dim.s; k1 <= dim.s; ++k1)
        for (int k2 = -dim.s; k2 <= dim.s; ++k2) {
            complexd acc = 0.0;
            for (int m1 = -dim.s; m1 <= dim.s; ++m1)
            for (int m2 = -dim.s; m2 <= dim.s; ++m2) {
                const int row = grid_index(n1 + m1, dim) * d + grid_index(n2 + m2, dim);
                const int col = grid_index(n1 - m1, dim) * d + grid_index(n2 - m2, dim);
                acc += std::polar(1.0, -4.0 * kPi * (k1 * m1 + k2 * m2) / dim.d) * rho(row, col);
            }
            acc /= static_cast<double>(d) * d;
            detail::check_imag_residue(acc.imag(), scale);
            grid.at(n1, n2, k1, k2) = acc.real();
        }
    }
    return grid;
}

/// Pure-state Wigner function from the state vector directly.
inline WignerGrid wigner_of_pure(const CVector& psi, const LatticeDim& dim, int modes = 1) {
    const Eigen::Index expected = modes == 1 ? dim.d : dim.d * dim.d;
    if (psi.size() != expected) {
        throw std::invalid_argument("wigner_of_pure: vector length does not match dimension");
    }

    WignerGrid grid(dim, modes);
    if (modes == 1) {
        for (int n = -dim.s; n <= dim.s; ++n) {
            for (int k = -dim.s; k <= dim.s; ++k) {
                complexd acc = 0.0;
                for (int m = -dim.s; m <= dim.s; ++m) {
                    acc += std::polar(1.0, -4.0 * kPi * k * m / dim.d) *
                           psi(grid_index(n + m, dim)) * std::conj(psi(grid_index(n - m, dim)));
                }
                acc /= dim.d;
                detail::check_imag_residue(acc.imag(), 1.0);
                grid.at(n, k) = acc.real();
            }
        }
    } else {
        const int d = dim.d;
        for (int n1 = -dim.s; n1 <= dim.s; ++n1)
        for (int n2 = -dim.s; n2 <= dim.s; ++n2)
        for (int k1 = -dim.s; k1 <= dim.s; ++k1)
        for (int k2 = -dim.s; k2 <= dim.s; ++k2) {
            complexd acc = 0.0;
            for (int m1 = -dim.s; m1 <= dim.s; ++m1)
            for (int m2 = -dim.s; m2 <= dim.s; ++m2) {
                acc += std::polar(1.0, -4.0 * kPi * (k1 * m1 + k2 * m2) / dim.d) *
                       psi(grid_index(n1 + m1, dim) * d + grid_index(n2 + m2, dim)) *
                       std::conj(psi(grid_index(n1 - m1, dim) * d + grid_index(n2 - m2, dim)));
            }
            acc /= static_cast<double>(d) * d;
            detail::check_imag_residue(acc.imag(), 1.0);
            grid.at(n1, n2, k1, k2) = acc.real();
        }
    }
    return grid;
}

/// Inverse transform: rho = sum_{n,k} W(n,k) Pi(n,k). Each Pi(n,k) has exactly
/// one nonzero entry per row, so the sum collapses to a k-sum per matrix entry
/// with n fixed by n = (a+b)/2 mod d.
inline CMatrix reconstruct_density(const WignerGrid& grid) {
    const LatticeDim& dim = grid.dim;
    const int inv2 = (dim.d + 1) / 2;  // multiplicative inverse of 2 mod d (d odd)

    if (grid.modes == 1) {
        CMatrix rho(dim.d, dim.d);
        for (int a = -dim.s; a <= dim.s; ++a) {
            for (int b = -dim.s; b <= dim.s; ++b) {
                const int n = rep_mod(static_cast<std::int64_t>(a + b) * inv2, dim);
                complexd acc = 0.0;
                for (int k = -dim.s; k <= dim.s; ++k) {
                    acc += grid.at(n, k) * std::polar(1.0, -4.0 * kPi * k * (n - a) / dim.d);
                }
                rho(grid_index(a, dim), grid_index(b, dim)) = acc;
            }
        }
        return rho;
    }

    const int d = dim.d;
    CMatrix rho = CMatrix::Zero(d * d, d * d);
    for (int a1 = -dim.s; a1 <= dim.s; ++a1)
    for (int b1 = -dim.s; b1 <= dim.s; ++b1)
    for (int a2 = -dim.s; a2 <= dim.s; ++a2)
    for (int b2 = -dim.s; b2 <= dim.s; ++b2) {
        const int n1 = rep_mod(static_cast<std::int64_t>(a1 + b1) * inv2, dim);
        const int n2 = rep_mod(static_cast<std::int64_t>(a2 + b2) * inv2, dim);
        complexd acc = 0.0;
        for (int k1 = -dim.s; k1 <= dim.s; ++k1)
        for (int k2 = -dim.s; k2 <= dim.s; ++k2) {
            acc += grid.at(n1, n2, k1, k2) *
                   std::polar(1.0, -4.0 * kPi * (k1 * (n1 - a1) + k2 * (n2 - a2)) / dim.d);
        }
        rho(grid_index(a1, dim) * d + grid_index(a2, dim),
            grid_index(b1, dim) * d + grid_index(b2, dim)) = acc;
    }
    return rho;
}

/// Position and momentum marginals (row and column sums).
/// For two-mode grids the vectors have length d^2 over (n1,n2) and (k1,k2).
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> marginals(const WignerGrid& grid) {
    const LatticeDim& dim = grid.dim;
    if (grid.modes == 1) {
        Eigen::VectorXd pos = Eigen::VectorXd::Zero(dim.d);
        Eigen::VectorXd mom = Eigen::VectorXd::Zero(dim.d);
        for (int n = -dim.s; n <= dim.s; ++n) {
            for (int k = -dim.s; k <= dim.s; ++k) {
                pos(grid_index(n, dim)) += grid.at(n, k);
                mom(grid_index(k, dim)) += grid.at(n, k);
            }
        }
        return {pos, mom};
    }
    const int d = dim.d;
    Eigen::VectorXd pos = Eigen::VectorXd::Zero(d * d);
    Eigen::VectorXd mom = Eigen::VectorXd::Zero(d * d);
    for (int n1 = -dim.s; n1 <= dim.s; ++n1)
    for (int n2 = -dim.s; n2 <= dim.s; ++n2)
    for (int k1 = -dim.s; k1 <= dim.s; ++k1)
    for (int k2 = -dim.s; k2 <= dim.s; ++k2) {
        const double v = grid.at(n1, n2, k1, k2);
        pos(grid_index(n1, dim) * d + grid_index(n2, dim)) += v;
        mom(grid_index(k1, dim) * d + grid_index(k2, dim)) += v;
    }
    return {pos, mom};
}

/// Closed-form Wigner function of the (unnormalized) single-mode Gaussian
/// g_kappa as a product of theta sums:
///   W(n,k) = (2 kappa d)^{-1/2} [ g_{2k}(n) (g_{2/k}(k) + g+_{2/k}(k))
///                               + g+_{2k}(n) (g_{2/k}(k) - g+_{2/k}(k)) ].
inline WignerGrid wigner_g_kappa_closed_form(double kappa, const LatticeDim& dim) {
    if (!(kappa > 0.0)) throw std::invalid_argument("wigner_g_kappa_closed_form: kappa must be positive");
    WignerGrid grid(dim, 1);
    const double pref = 1.0 / std::sqrt(2.0 * kappa * dim.d);
    const double ki = 2.0 / kappa;
    for (int n = -dim.s; n <= dim.s; ++n) {
        const double gn = theta_1d(2.0 * kappa, dim, n);
        const double gnp = theta_1d(2.0 * kappa, dim, n, HalfShift::half);
        for (int k = -dim.s; k <= dim.s; ++k) {
            const double gk = theta_1d(ki, dim, k);
            const double gkp = theta_1d(ki, dim, k, HalfShift::half);
            grid.at(n, k) = pref * (gn * (gk + gkp) + gnp * (gk - gkp));
        }
    }
    return grid;
}

/// Closed-form two-mode Wigner function of the (unnormalized) Gaussian g_tau:
/// the sixteen-term expansion in the half-shifted theta sums, with overall
/// prefactor 1/(2 d sqrt(det tau)).
inline WignerGrid wigner_g_tau_closed_form(const CovMat2& tau, const LatticeDim& dim) {
    WignerGrid grid(dim, 2);
    const CovMat2 t2 = tau.scaled(2.0);
    const CovMat2 ti2 = tau.inverse().scaled(2.0);
    const double pref = 1.0 / (2.0 * dim.d * std::sqrt(tau.det()));

    const HalfShift N = HalfShift::none;
    const HalfShift H = HalfShift::half;
    for (int n1 = -dim.s; n1 <= dim.s; ++n1)
    for (int n2 = -dim.s; n2 <= dim.s; ++n2) {
        const double g00 = theta_2d(t2, dim, n1, n2, N, N);
        const double g10 = theta_2d(t2, dim, n1, n2, H, N);
        const double g01 = theta_2d(t2, dim, n1, n2, N, H);
        const double g11 = theta_2d(t2, dim, n1, n2, H, H);
        for (int k1 = -dim.s; k1 <= dim.s; ++k1)
        for (int k2 = -dim.s; k2 <= dim.s; ++k2) {
            const double h00 = theta_2d(ti2, dim, k1, k2, N, N);
            const double h10 = theta_2d(ti2, dim, k1, k2, H, N);
            const double h01 = theta_2d(ti2, dim, k1, k2, N, H);
            const double h11 = theta_2d(ti2, dim, k1, k2, H, H);
            grid.at(n1, n2, k1, k2) =
                pref * (g00 * (h00 + h10 + h01 + h11) + g10 * (h00 - h10 + h01 - h11) +
                        g01 * (h00 + h10 - h01 - h11) + g11 * (h00 - h10 - h01 + h11));
        }
    }
    return grid;
}

/// Trace-form forward transform, kept as an independent cross-check of the
/// m-sum implementation.
inline WignerGrid wigner_of_density_trace_form(const CMatrix& rho, const LatticeDim& dim) {
    WignerGrid grid(dim, 1);
    for (int n = -dim.s; n <= dim.s; ++n) {
        for (int k = -dim.s; k <= dim.s; ++k) {
            const complexd t = (rho * displaced_parity(dim, n, k)).trace() / static_cast<double>(dim.d);
            detail::check_imag_residue(t.imag(), rho.norm());
            grid.at(n, k) = t.real();
        }
    }
    return grid;
}

}  // namespace dvg
