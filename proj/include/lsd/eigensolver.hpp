// eigensolver.hpp - discrete spectra of -d^2/dx^2 + V(x) on a uniform Dirichlet grid
//
// The Hamiltonian is discretized with the three-point stencil and its lowest
// eigenvalues are located by bisection on Sturm-sequence sign counts.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>

#include <Eigen/Core>

#include "lsd/errors.hpp"
#include "lsd/spectral_core.hpp"

namespace lsd {

using Potential = std::function<double(double)>;

// n_points interior nodes; both ends x_min, x_max carry Dirichlet walls.
struct Grid1D {
    double x_min{0};
    double x_max{1};
    std::size_t n_points{3};

    Grid1D() = default;
    Grid1D(double x_min_, double x_max_, std::size_t n_points_);

    [[nodiscard]] double spacing() const { return (x_max - x_min) / static_cast<double>(n_points + 1); }
    [[nodiscard]] double point(std::size_t i) const {
        return x_min + static_cast<double>(i + 1) * spacing();
    }
};

template <typename Scalar>
struct TridiagonalMatrix {
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    Vector diagonal;
    Vector off_diagonal; // length size() - 1

    [[nodiscard]] Eigen::Index size() const { return diagonal.size(); }
};

template <typename Scalar>
struct BasicEigenResult {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;      // ascending
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> residual_bounds;  // final bracket half-widths
};
using EigenResult = BasicEigenResult<double>;

TridiagonalMatrix<double> discretize(const Potential& potential, const Grid1D& grid);

// Number of eigenvalues strictly below lambda (negative LDL^T pivots of T - lambda I).
template <typename Scalar>
Eigen::Index sturm_count(const TridiagonalMatrix<Scalar>& m, Scalar lambda) {
    using std::abs;
    const Eigen::Index n = m.size();
    const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
    Eigen::Index count = 0;
    Scalar q = m.diagonal(0) - lambda;
    for (Eigen::Index i = 0;; ++i) {
        if (abs(q) < tiny)
            q = -tiny;
        if (q < Scalar(0))
            ++count;
        if (i + 1 == n)
            break;
        const Scalar e = m.off_diagonal(i);
        q = m.diagonal(i + 1) - lambda - e * e / q;
    }
    return count;
}

template <typename Scalar>
std::pair<Scalar, Scalar> gerschgorin_interval(const TridiagonalMatrix<Scalar>& m) {
    using std::abs;
    const Eigen::Index n = m.size();
    Scalar lo = std::numeric_limits<Scalar>::max();
    Scalar hi = std::numeric_limits<Scalar>::lowest();
    for (Eigen::Index i = 0; i < n; ++i) {
        Scalar radius = 0;
        if (i > 0)
            radius += abs(m.off_diagonal(i - 1));
        if (i + 1 < n)
            radius += abs(m.off_diagonal(i));
        lo = std::min(lo, m.diagonal(i) - radius);
        hi = std::max(hi, m.diagonal(i) + radius);
    }
    const Scalar pad = Scalar(4) * std::numeric_limits<Scalar>::epsilon() *
                       std::max({abs(lo), abs(hi), Scalar(1)});
    return {lo - pad, hi + pad};
}

// The k lowest eigenvalues of a symmetric tridiagonal matrix.
template <typename Scalar>
BasicEigenResult<Scalar> eigenvalues_tridiagonal(const TridiagonalMatrix<Scalar>& m, Eigen::Index k) {
    using std::abs;
    const Eigen::Index n = m.size();
    if (n < 1)
        throw ValidationError("eigenvalues_tridiagonal: empty matrix");
    if (m.off_diagonal.size() != n - 1)
        throw ValidationError("eigenvalues_tridiagonal: off-diagonal must have length n - 1");
    if (k < 1 || k > n)
        throw ValidationError("eigenvalues_tridiagonal: requested " + std::to_string(k) +
                              " eigenvalues of a " + std::to_string(n) + "x" + std::to_string(n) +
                              " matrix");

    const auto [g_lo, g_hi] = gerschgorin_interval(m);
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar scale = std::max(abs(g_lo), abs(g_hi));

    BasicEigenResult<Scalar> result;
    result.eigenvalues.resize(k);
    result.residual_bounds.resize(k);

    Scalar floor = g_lo;
    for (Eigen::Index j = 0; j < k; ++j) {
        // invariant: sturm_count(lo) <= j < sturm_count(hi)
        Scalar lo = floor;
        Scalar hi = g_hi;
        for (int iter = 0; iter < 256; ++iter) {
            const Scalar tol = Scalar(2) * eps * std::max(abs(lo), abs(hi)) + eps * eps * scale;
            if (hi - lo <= tol)
                break;
            const Scalar mid = lo + (hi - lo) / Scalar(2);
            if (mid <= lo || mid >= hi)
                break;
            if (sturm_count(m, mid) > j)
                hi = mid;
            else
                lo = mid;
        }
        result.eigenvalues(j) = lo + (hi - lo) / Scalar(2);
        result.residual_bounds(j) = (hi - lo) / Scalar(2);
        floor = lo;
    }
    return result;
}

// k lowest levels of the discretized Hamiltonian, shifted by energy_shift.
Spectrum solve_spectrum(const Potential& potential, const Grid1D& grid, std::size_t k,
                        double energy_shift = 0.0);

} // namespace lsd
