#pragma once

#include <cmath>
#include <stdexcept>

#include "dvgauss/lattice.hpp"
#include "dvgauss/linalg.hpp"
#include "dvgauss/theta.hpp"
#include "dvgauss/wigner.hpp"

namespace dvg {

/// Parameters of a single-mode discrete Gaussian mixed state.
struct GaussianSpec {
    CovMat2 sigma;
    double q_center = 0.0;
    double p_center = 0.0;
};

/// Synthesized discrete Gaussian state: the phase-space grid, the
/// normalization constant fixing sum(W) = 1, and the reconstructed density
/// operator.
struct GaussianState {
    LatticeDim dim;
    int modes;
    WignerGrid grid;
    double normalization_constant;
    CMatrix rho;
};

namespace detail {

/// Signed half-lattice periodization of the single-mode continuum window:
///   sum_{alpha,beta} (-1)^{alpha*beta} w_sigma(n + alpha*d/2, k + beta*d/2).
inline double signed_window_sum(const CovMat2& sigma, const LatticeDim& dim, int n, int k,
                                double q_center, double p_center) {
    const double half = 0.5 * dim.d;
    int hw = 2;
    for (;;) {
        double sum = 0.0, max_term = 0.0, boundary = 0.0;
        for (int a = -hw; a <= hw; ++a) {
            for (int b = -hw; b <= hw; ++b) {
                const double w = gaussian_window(sigma, dim, n + a * half, k + b * half,
                                                 q_center, p_center);
                sum += ((a * b) % 2 == 0 ? w : -w);
                if (w > max_term) max_term = w;
                if ((std::abs(a) == hw || std::abs(b) == hw) && w > boundary) boundary = w;
            }
        }
        if (boundary <= 1e-18 * max_term || hw >= (1 << 12)) return sum;
        hw *= 2;
    }
}

/// Two-mode analog with sign (-1)^{alpha1*beta1 + alpha2*beta2} over the
/// (q1, q2, p1, p2) window.
inline double signed_window_sum(const CovMat4& sigma, const LatticeDim& dim, int n1, int n2,
                                int k1, int k2, const std::array<double, 4>& center) {
    const double half = 0.5 * dim.d;
    int hw = 2;
    for (;;) {
        double sum = 0.0, max_term = 0.0, boundary = 0.0;
        for (int a1 = -hw; a1 <= hw; ++a1)
        for (int a2 = -hw; a2 <= hw; ++a2)
        for (int b1 = -hw; b1 <= hw; ++b1)
        for (int b2 = -hw; b2 <= hw; ++b2) {
            const double w = gaussian_window(
                sigma, dim,
                {n1 + a1 * half, n2 + a2 * half, k1 + b1 * half, k2 + b2 * half}, center);
            sum += ((a1 * b1 + a2 * b2) % 2 == 0 ? w : -w);
            if (w > max_term) max_term = w;
            const bool edge = std::abs(a1) == hw || std::abs(a2) == hw ||
                              std::abs(b1) == hw || std::abs(b2) == hw;
            if (edge && w > boundary) boundary = w;
        }
        if (boundary <= 1e-18 * max_term || hw >= (1 << 6)) return sum;
        hw *= 2;
    }
}

}  // namespace detail

/// Build the single-mode Gaussian state with covariance sigma and the given
/// phase-space center. The grid sums to exactly 1 by construction.
inline GaussianState synthesize(const GaussianSpec& spec, const LatticeDim& dim) {
    WignerGrid grid(dim, 1);
    for (int n = -dim.s; n <= dim.s; ++n) {
        for (int k = -dim.s; k <= dim.s; ++k) {
            grid.at(n, k) = detail::signed_window_sum(spec.sigma, dim, n, k,
                                                      spec.q_center, spec.p_center);
        }
    }
    const double total = grid.sum();
    if (!(total > 0.0)) throw std::runtime_error("synthesize: signed sum has non-positive total");
    const double c = 1.0 / total;
    grid.scale(c);
    return GaussianState{dim, 1, grid, c, reconstruct_density(grid)};
}

inline GaussianState synthesize(const CovMat2& sigma, const LatticeDim& dim) {
    return synthesize(GaussianSpec{sigma}, dim);
}

/// Two-mode Gaussian state from a 4x4 covariance matrix in (q1,q2,p1,p2) order.
inline GaussianState synthesize(const CovMat4& sigma, const LatticeDim& dim,
                                const std::array<double, 4>& center = {0.0, 0.0, 0.0, 0.0}) {
    WignerGrid grid(dim, 2);
    for (int n1 = -dim.s; n1 <= dim.s; ++n1)
    for (int n2 = -dim.s; n2 <= dim.s; ++n2)
    for (int k1 = -dim.s; k1 <= dim.s; ++k1)
    for (int k2 = -dim.s; k2 <= dim.s; ++k2) {
        grid.at(n1, n2, k1, k2) = detail::signed_window_sum(sigma, dim, n1, n2, k1, k2, center);
    }
    const double total = grid.sum();
    if (!(total > 0.0)) throw std::runtime_error("synthesize: signed sum has non-positive total");
    const double c = 1.0 / total;
    grid.scale(c);
    return GaussianState{dim, 2, grid, c, reconstruct_density(grid)};
}

/// Purity tr(rho^2) = d^modes * sum(W^2), read directly off the grid.
inline double purity(const WignerGrid& grid) {
    const double d = grid.dim.d;
    const double scale = grid.modes == 1 ? d : d * d;
    return scale * grid.sum_squares();
}

inline double purity(const GaussianState& state) { return purity(state.grid); }

/// Large-d purity limit 1/sqrt(det sigma) for a single-mode covariance.
inline double purity_limit(const CovMat2& sigma) { return 1.0 / std::sqrt(sigma.det()); }

/// Eigenvalues of the density operator in descending order.
inline Eigen::VectorXd spectrum_descending(const CMatrix& rho) {
    return eigh(rho).eigenvalues.reverse();
}

inline Eigen::VectorXd spectrum_descending(const GaussianState& state) {
    return spectrum_descending(state.rho);
}

/// Uncertainty-type condition on the covariance: sigma + i Omega >= 0 with
/// Omega = ((0,1),(-1,0)); conjectured sufficient for positivity of the state.
inline bool satisfies_uncertainty(const CovMat2& sigma, double tol = 1e-12) {
    Eigen::Matrix2cd m;
    m << complexd(sigma.s11, 0.0), complexd(sigma.s12, 1.0),
         complexd(sigma.s12, -1.0), complexd(sigma.s22, 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m);
    return es.eigenvalues().minCoeff() >= -tol;
}

/// Basic sanity of a reconstructed density operator.
struct PositivityReport {
    double min_eigenvalue;
    double trace_deviation;   // |tr(rho) - 1|
    double hermiticity_gap;   // ||rho - rho^dag||_F
    bool ok;                  // all three within tol
};

inline PositivityReport positivity_report(const CMatrix& rho, double tol = 1e-10) {
    PositivityReport rep{};
    rep.hermiticity_gap = (rho - rho.adjoint()).norm();
    rep.trace_deviation = std::abs(rho.trace() - complexd(1.0, 0.0));
    const CMatrix herm = 0.5 * (rho + rho.adjoint());
    rep.min_eigenvalue = eigh(herm).eigenvalues.minCoeff();
    rep.ok = rep.hermiticity_gap <= tol && rep.trace_deviation <= tol &&
             rep.min_eigenvalue >= -tol;
    return rep;
}

/// Partial trace of a two-mode density operator over one of its modes,
/// (mode-1 major, mode-2 minor) index convention.
inline CMatrix partial_trace(const CMatrix& rho, const LatticeDim& dim, int keep_mode) {
    const int d = dim.d;
    if (rho.rows() != d * d || rho.cols() != d * d) {
        throw std::invalid_argument("partial_trace: operator is not two-mode for this dimension");
    }
    if (keep_mode != 1 && keep_mode != 2) {
        throw std::invalid_argument("partial_trace: keep_mode must be 1 or 2");
    }
    CMatrix out = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            complexd acc = 0.0;
            for (int t = 0; t < d; ++t) {
                if (keep_mode == 1) acc += rho(i * d + t, j * d + t);
                else acc += rho(t * d + i, t * d + j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

/// Normalized continuum window evaluated on the integer grid, used as the
/// large-d reference the synthesized state must approach.
inline WignerGrid continuum_reference(const GaussianSpec& spec, const LatticeDim& dim) {
    WignerGrid grid(dim, 1);
    for (int n = -dim.s; n <= dim.s; ++n) {
        for (int k = -dim.s; k <= dim.s; ++k) {
            grid.at(n, k) = gaussian_window(spec.sigma, dim, n, k, spec.q_center, spec.p_center);
        }
    }
    const double total = grid.sum();
    if (!(total > 0.0)) throw std::runtime_error("continuum_reference: non-positive total");
    grid.scale(1.0 / total);
    return grid;
}

/// Max-abs deviation between the synthesized grid and the normalized continuum
/// window at the same dimension; decreases toward zero as d grows.
inline double continuum_deviation(const GaussianSpec& spec, const LatticeDim& dim) {
    const GaussianState state = synthesize(spec, dim);
    const WignerGrid ref = continuum_reference(spec, dim);
    double dev = 0.0;
    for (std::size_t i = 0; i < state.grid.values.size(); ++i) {
        dev = std::max(dev, std::abs(state.grid.values[i] - ref.values[i]));
    }
    return dev;
}

}  // namespace dvg
