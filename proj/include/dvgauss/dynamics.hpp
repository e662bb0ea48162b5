#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dvgauss/gaussian.hpp"
#include "dvgauss/lattice.hpp"
#include "dvgauss/linalg.hpp"
#include "dvgauss/operators.hpp"

namespace dvg {

/// Spectrum of K = -i([q, p] - i d/(2 pi)). K is Hermitian, so the eigenvalues
/// of [q, p] - i d/(2 pi) are i * lambda with lambda real; the reals are stored
/// sorted by increasing modulus.
struct CommutatorSpectrum {
    LatticeDim dim;
    Eigen::VectorXd eigenvalues;  // sorted by |lambda| ascending
    CMatrix eigenvectors;         // column k pairs with eigenvalues(k)
};

inline CommutatorSpectrum commutator_spectrum(const LatticeDim& dim) {
    const OperatorSet ops(dim);
    const CMatrix k = complexd(0.0, -1.0) * commutator(ops.position, ops.momentum) -
                      (dim.d / (2.0 * kPi)) * CMatrix::Identity(dim.d, dim.d);
    const EigenDecomposition dec = eigh(k);

    std::vector<int> order(dim.d);
    for (int i = 0; i < dim.d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(dec.eigenvalues(a)) < std::abs(dec.eigenvalues(b));
    });

    CommutatorSpectrum spec{dim, Eigen::VectorXd(dim.d), CMatrix(dim.d, dim.d)};
    for (int i = 0; i < dim.d; ++i) {
        spec.eigenvalues(i) = dec.eigenvalues(order[i]);
        spec.eigenvectors.col(i) = dec.eigenvectors.col(order[i]);
    }
    return spec;
}

/// H_eps: span of the commutator eigenvectors with |lambda| < eps, where the
/// canonical commutation relation holds approximately.
struct CanonicalSubspace {
    double epsilon;
    int d_eps;
    CMatrix basis;      // d x d_eps, orthonormal columns
    CMatrix projector;  // basis * basis^dag
};

inline CanonicalSubspace canonical_subspace(const CommutatorSpectrum& spec, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("canonical_subspace: epsilon must be positive");
    int count = 0;
    while (count < spec.dim.d && std::abs(spec.eigenvalues(count)) < epsilon) ++count;
    if (count == 0) throw std::runtime_error("canonical_subspace: no eigenvalue below epsilon");
    CanonicalSubspace sub{epsilon, count, spec.eigenvectors.leftCols(count), CMatrix()};
    sub.projector = sub.basis * sub.basis.adjoint();
    return sub;
}

/// Coefficient magnitudes |<phi_n|psi>| of a state in the commutator eigenbasis.
inline Eigen::VectorXd expand_in_commutator_basis(const CVector& psi, const CommutatorSpectrum& spec) {
    if (psi.size() != spec.dim.d) {
        throw std::invalid_argument("expand_in_commutator_basis: vector dimension mismatch");
    }
    return (spec.eigenvectors.adjoint() * psi).cwiseAbs();
}

/// Matrix of magnitudes |<phi_n|rho|phi_m>| of an operator in the eigenbasis.
inline Eigen::MatrixXd expand_in_commutator_basis(const CMatrix& rho, const CommutatorSpectrum& spec) {
    if (rho.rows() != spec.dim.d || rho.cols() != spec.dim.d) {
        throw std::invalid_argument("expand_in_commutator_basis: operator dimension mismatch");
    }
    return (spec.eigenvectors.adjoint() * rho * spec.eigenvectors).cwiseAbs();
}

/// Approximate Gaussian unitary: Hamiltonian
///   h = A (a^dag a + a a^dag) + B (a^dag)^2 + conj(B) a^2,
/// the evolution U = exp(-i h / 2), and its symplectic phase-space image
///   S = exp(G),  G = ((Im B, A - Re B), (-A - Re B, -Im B)).
struct GaussianTransformSpec {
    double a_coeff;
    complexd b_coeff;
    CMatrix hamiltonian;
    CMatrix unitary;
    Eigen::Matrix2d symplectic;
};

inline GaussianTransformSpec gaussian_transform(double a_coeff, complexd b_coeff,
                                                const LatticeDim& dim) {
    if (!std::isfinite(a_coeff) || !std::isfinite(b_coeff.real()) || !std::isfinite(b_coeff.imag())) {
        throw std::invalid_argument("gaussian_transform: non-finite parameters");
    }
    const auto [a, ad] = ladder_operators(dim);
    const CMatrix h = a_coeff * (ad * a + a * ad) + b_coeff * (ad * ad) + std::conj(b_coeff) * (a * a);
    const CMatrix u = expm_hermitian_generator(h, complexd(0.0, -0.5));

    Eigen::Matrix2d g;
    g << b_coeff.imag(), a_coeff - b_coeff.real(),
         -a_coeff - b_coeff.real(), -b_coeff.imag();
    const Eigen::Matrix2d s = expm_real_2x2(g);
    if (std::abs(s.determinant() - 1.0) > 1e-12) {
        throw std::runtime_error("gaussian_transform: symplectic image has det != 1");
    }
    return GaussianTransformSpec{a_coeff, b_coeff, h, u, s};
}

/// Single-mode squeezing with parameter s*e^{i theta}, realized as the
/// Gaussian transform with A = 0 and B = i s e^{i theta}; this choice makes
/// the symplectic image equal
///   ((cosh s + cos th sinh s, sin th sinh s), (sin th sinh s, cosh s - cos th sinh s)).
inline GaussianTransformSpec squeezing_transform(double s, double theta, const LatticeDim& dim) {
    const complexd b = complexd(0.0, 1.0) * std::polar(s, theta);
    return gaussian_transform(0.0, b, dim);
}

enum class MatrixNorm { frobenius, spectral };

/// Norm of U rho_sigma U^dag - rho_{S sigma S^T}: how well the approximate
/// Gaussian unitary realizes its symplectic image on a Gaussian state.
inline double transform_deviation(const GaussianTransformSpec& spec, const CovMat2& sigma,
                                  const LatticeDim& dim, MatrixNorm norm = MatrixNorm::spectral) {
    const GaussianState before = synthesize(sigma, dim);
    const CMatrix evolved = spec.unitary * before.rho * spec.unitary.adjoint();

    const Eigen::Matrix2d mapped =
        spec.symplectic * sigma.matrix() * spec.symplectic.transpose();
    const GaussianState after = synthesize(CovMat2::from_matrix(mapped, 1e-10), dim);

    const CMatrix diff = evolved - after.rho;
    return norm == MatrixNorm::frobenius ? diff.norm() : spectral_norm(diff);
}

inline double transform_deviation(double a_coeff, complexd b_coeff, const CovMat2& sigma,
                                  const LatticeDim& dim, MatrixNorm norm = MatrixNorm::spectral) {
    return transform_deviation(gaussian_transform(a_coeff, b_coeff, dim), sigma, dim, norm);
}

/// Frobenius distances between D(n,k) and exp{-(2 pi i / d)(n p - k q)}, both
/// unrestricted and compressed to H_eps. Data for the approximate-displacement
/// claim; the ratio is reported, not asserted.
struct DisplacementApproximation {
    double unrestricted;
    double restricted;
};

inline DisplacementApproximation displacement_approximation_check(const LatticeDim& dim, int n,
                                                                  int k, double epsilon) {
    const OperatorSet ops(dim);
    const CMatrix generator = static_cast<double>(n) * ops.momentum -
                              static_cast<double>(k) * ops.position;
    const CMatrix approx =
        expm_hermitian_generator(generator, complexd(0.0, -2.0 * kPi / dim.d));
    const CMatrix exact = displacement(dim, n, k);

    DisplacementApproximation out{};
    out.unrestricted = (exact - approx).norm();
    const CanonicalSubspace sub = canonical_subspace(commutator_spectrum(dim), epsilon);
    out.restricted = (sub.basis.adjoint() * (exact - approx) * sub.basis).norm();
    return out;
}

/// Spectral norm of P_eps ([q, p] - i d/(2 pi)) P_eps, which is below eps by
/// construction of the subspace.
inline double restricted_commutation_norm(const LatticeDim& dim, double epsilon) {
    const OperatorSet ops(dim);
    const CMatrix k = commutator(ops.position, ops.momentum) -
                      complexd(0.0, dim.d / (2.0 * kPi)) * CMatrix::Identity(dim.d, dim.d);
    const CanonicalSubspace sub = canonical_subspace(commutator_spectrum(dim), epsilon);
    return spectral_norm(sub.projector * k * sub.projector);
}

}  // namespace dvg
