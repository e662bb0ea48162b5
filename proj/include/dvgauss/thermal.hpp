#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dvgauss/gaussian.hpp"
#include "dvgauss/lattice.hpp"
#include "dvgauss/linalg.hpp"

namespace dvg {

/// Discrete thermal state: the Gaussian state with covariance nu * I, nu > 1.
inline GaussianState thermal_state(double nu, const LatticeDim& dim) {
    if (!(nu > 1.0)) throw std::invalid_argument("thermal_state: nu must be > 1");
    return synthesize(CovMat2(nu, 0.0, nu), dim);
}

/// Truncated normalized geometric sequence
///   N_n = r^n / sum_{k<d} r^k,  r = (nu-1)/(nu+1),
/// the reference law the thermal spectrum approaches.
inline Eigen::VectorXd geometric_reference(double nu, const LatticeDim& dim) {
    if (!(nu > 1.0)) throw std::invalid_argument("geometric_reference: nu must be > 1");
    const double r = (nu - 1.0) / (nu + 1.0);
    Eigen::VectorXd out(dim.d);
    double total = 0.0;
    for (int n = 0; n < dim.d; ++n) {
        out(n) = std::pow(r, n);
        total += out(n);
    }
    return out / total;
}

/// Real orthonormal eigenbasis of the thermal family, ordered (and labeled)
/// by the number of sign alternations of the eigenvector entries: column n of
/// `vectors` plays the role of the discrete Hermite-Gauss function |n>>.
struct HermiteLikeBasis {
    LatticeDim dim;
    Eigen::MatrixXd vectors;            // columns ordered by alternation count 0..d-1
    Eigen::VectorXd eigenvalues;        // thermal eigenvalue attached to each column
    std::vector<int> sign_alternations; // equals {0, 1, ..., d-1} when labeling succeeded
    bool labels_complete;               // alternation counts form a permutation of 0..d-1
};

namespace detail {

/// Sign alternations of consecutive entries; entries below `noise` continue
/// the previous sign.
inline int count_sign_alternations(const Eigen::VectorXd& v, double noise = 1e-9) {
    int count = 0;
    int prev = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) < noise) continue;
        const int s = v(i) > 0.0 ? 1 : -1;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace detail

inline HermiteLikeBasis hermite_like_basis(const LatticeDim& dim, double nu_probe = 2.0) {
    const GaussianState state = thermal_state(nu_probe, dim);
    const EigenDecomposition dec = eigh(state.rho);

    // Phase-fix to real and check the imaginary residue.
    Eigen::MatrixXd real_vectors(dim.d, dim.d);
    for (int c = 0; c < dim.d; ++c) {
        const CVector col = dec.eigenvectors.col(c);
        if (col.imag().cwiseAbs().maxCoeff() > 1e-10) {
            throw std::runtime_error("hermite_like_basis: eigenvector not real after phase fixing");
        }
        real_vectors.col(c) = col.real();
    }

    std::vector<int> alternations(dim.d);
    for (int c = 0; c < dim.d; ++c) {
        alternations[c] = detail::count_sign_alternations(real_vectors.col(c));
    }

    // Reorder columns by alternation count (the natural |n>> labeling).
    std::vector<int> order(dim.d);
    for (int i = 0; i < dim.d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return alternations[a] < alternations[b]; });

    HermiteLikeBasis basis{dim, Eigen::MatrixXd(dim.d, dim.d), Eigen::VectorXd(dim.d), {}, true};
    basis.sign_alternations.resize(dim.d);
    for (int c = 0; c < dim.d; ++c) {
        basis.vectors.col(c) = real_vectors.col(order[c]);
        basis.eigenvalues(c) = dec.eigenvalues(order[c]);
        basis.sign_alternations[c] = alternations[order[c]];
        if (basis.sign_alternations[c] != c) basis.labels_complete = false;
    }
    return basis;
}

/// Finite-oscillator Hamiltonian H = sum_n (n + 1/2) |n>><<n|.
inline CMatrix oscillator_hamiltonian(const HermiteLikeBasis& basis) {
    const int d = basis.dim.d;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        h += (n + 0.5) * basis.vectors.col(n) * basis.vectors.col(n).transpose();
    }
    return h.cast<complexd>();
}

/// Frobenius norm of the commutator of two thermal states, probing the claim
/// that the thermal family is (near-)commuting.
inline double commutation_study(double nu, double mu, const LatticeDim& dim) {
    const GaussianState a = thermal_state(nu, dim);
    const GaussianState b = thermal_state(mu, dim);
    return commutator(a.rho, b.rho).norm();
}

}  // namespace dvg
