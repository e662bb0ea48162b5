#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "dvgauss/lattice.hpp"

namespace dvg {

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;  // ascending
    CMatrix eigenvectors;         // orthonormal columns, phase-fixed
};

inline void require_finite(const CMatrix& m, const char* what) {
    if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

inline double frobenius_norm(const CMatrix& m) { return m.norm(); }

inline complexd trace(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace: non-square matrix");
    return m.trace();
}

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw std::invalid_argument("commutator: shape mismatch");
    }
    return a * b - b * a;
}

inline bool is_hermitian(const CMatrix& m, double rel_tol = 1e-10) {
    if (m.rows() != m.cols()) return false;
    const double scale = m.norm();
    return (m - m.adjoint()).norm() <= rel_tol * (scale > 0 ? scale : 1.0);
}

/// Fix the phase of each eigenvector column so that its largest-magnitude
/// component is positive real.
inline void fix_column_phases(CMatrix& v) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            const double a = std::abs(v(r, c));
            if (a > best) {
                best = a;
                imax = r;
            }
        }
        const complexd z = v(imax, c);
        if (std::abs(z) > 0) v.col(c) *= std::conj(z) / std::abs(z);
    }
}

/// Hermitian eigendecomposition with ascending eigenvalues and a deterministic
/// eigenvector phase convention.
inline EigenDecomposition eigh(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigh: non-square matrix");
    require_finite(m, "eigh");
    if (!is_hermitian(m)) throw std::invalid_argument("eigh: input is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed to converge");

    EigenDecomposition dec{solver.eigenvalues(), solver.eigenvectors()};
    fix_column_phases(dec.eigenvectors);
    return dec;
}

/// Largest singular value, computed via the Hermitian eigenproblem of M^dag M.
inline double spectral_norm(const CMatrix& m) {
    require_finite(m, "spectral_norm");
    if (m.size() == 0) return 0.0;
    const CMatrix gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectral_norm: eigensolver failed");
    const double top = solver.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

/// exp(scale * H) for Hermitian H, via V diag(exp(scale*lambda)) V^dag.
inline CMatrix expm_hermitian_generator(const CMatrix& h, complexd scale) {
    EigenDecomposition dec = eigh(h);
    CVector phases(dec.eigenvalues.size());
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
        phases(i) = std::exp(scale * dec.eigenvalues(i));
    }
    return dec.eigenvectors * phases.asDiagonal() * dec.eigenvectors.adjoint();
}

/// Closed-form exponential of a real 2x2 matrix. Splits off the trace and
/// uses N^2 = delta*I for the traceless part N.
inline Eigen::Matrix2d expm_real_2x2(const Eigen::Matrix2d& m) {
    if (!m.allFinite()) throw std::invalid_argument("expm_real_2x2: non-finite entries");
    const double mu = 0.5 * (m(0, 0) + m(1, 1));
    Eigen::Matrix2d n = m - mu * Eigen::Matrix2d::Identity();
    const double delta = -(n(0, 0) * n(1, 1) - n(0, 1) * n(1, 0));

    double c, s;
    if (delta > 1e-24) {
        const double w = std::sqrt(delta);
        c = std::cosh(w);
        s = std::sinh(w) / w;
    } else if (delta < -1e-24) {
        const double w = std::sqrt(-delta);
        c = std::cos(w);
        s = std::sin(w) / w;
    } else {
        c = 1.0 + 0.5 * delta;
        s = 1.0 + delta / 6.0;
    }
    return std::exp(mu) * (c * Eigen::Matrix2d::Identity() + s * n);
}

}  // namespace dvg
