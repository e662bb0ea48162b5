#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dvg {

using complexd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Odd Hilbert-space dimension d = 2s+1 with the half-width s = (d-1)/2.
struct LatticeDim {
    int d;
    int s;

    explicit LatticeDim(int dim) : d(dim), s((dim - 1) / 2) {
        if (dim < 3 || dim % 2 == 0) {
            throw std::invalid_argument("LatticeDim: dimension must be odd and >= 3, got " +
                                        std::to_string(dim));
        }
    }
};

/// Representative of n modulo d in the symmetric range [-s, s].
inline int rep_mod(std::int64_t n, const LatticeDim& dim) {
    std::int64_t r = n % dim.d;
    if (r > dim.s) r -= dim.d;
    if (r < -dim.s) r += dim.d;
    return static_cast<int>(r);
}

/// Array index (offset n+s) of a lattice coordinate, reduced modulo d.
inline int grid_index(std::int64_t n, const LatticeDim& dim) {
    return rep_mod(n, dim) + dim.s;
}

struct GridPoint {
    int n;
    int k;
};

/// Real-valued function on the d x d (one mode) or d x d x d x d (two mode)
/// phase-space lattice. Storage is row-major with offset n+s per coordinate;
/// two-mode values are laid out lexicographically as (n1, n2, k1, k2).
struct WignerGrid {
    LatticeDim dim;
    int modes;
    std::vector<double> values;

    WignerGrid(LatticeDim d, int m)
        : dim(d), modes(m),
          values(static_cast<std::size_t>(m == 1 ? d.d * d.d
                                                 : d.d * d.d * d.d * d.d),
                 0.0) {
        if (m != 1 && m != 2) throw std::invalid_argument("WignerGrid: modes must be 1 or 2");
    }

    double& at(std::int64_t n, std::int64_t k) {
        return values[static_cast<std::size_t>(grid_index(n, dim)) * dim.d + grid_index(k, dim)];
    }
    double at(std::int64_t n, std::int64_t k) const {
        return values[static_cast<std::size_t>(grid_index(n, dim)) * dim.d + grid_index(k, dim)];
    }

    double& at(std::int64_t n1, std::int64_t n2, std::int64_t k1, std::int64_t k2) {
        const std::size_t d = static_cast<std::size_t>(dim.d);
        return values[((static_cast<std::size_t>(grid_index(n1, dim)) * d + grid_index(n2, dim)) * d +
                       grid_index(k1, dim)) * d + grid_index(k2, dim)];
    }
    double at(std::int64_t n1, std::int64_t n2, std::int64_t k1, std::int64_t k2) const {
        const std::size_t d = static_cast<std::size_t>(dim.d);
        return values[((static_cast<std::size_t>(grid_index(n1, dim)) * d + grid_index(n2, dim)) * d +
                       grid_index(k1, dim)) * d + grid_index(k2, dim)];
    }

    double sum() const {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }

    double sum_squares() const {
        double acc = 0.0;
        for (double v : values) acc += v * v;
        return acc;
    }

    void scale(double c) {
        for (double& v : values) v *= c;
    }
};

/// Canonical basis vector delta_m with m in [-s, s].
inline CVector delta_basis(int m, const LatticeDim& dim) {
    if (m < -dim.s || m > dim.s) {
        throw std::out_of_range("delta_basis: index outside [-s, s]");
    }
    CVector v = CVector::Zero(dim.d);
    v(grid_index(m, dim)) = 1.0;
    return v;
}

}  // namespace dvg
