#include "lsd/eigensolver.hpp"

#include <sstream>

namespace lsd {

Grid1D::Grid1D(double x_min_, double x_max_, std::size_t n_points_)
    : x_min(x_min_), x_max(x_max_), n_points(n_points_) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
        throw ValidationError("grid: need finite x_min < x_max");
    if (n_points < 3)
        throw ValidationError("grid: n_points must be >= 3");
}

TridiagonalMatrix<double> discretize(const Potential& potential, const Grid1D& grid) {
    const auto n = static_cast<Eigen::Index>(grid.n_points);
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);

    TridiagonalMatrix<double> m;
    m.diagonal.resize(n);
    m.off_diagonal.setConstant(n - 1, -inv_h2);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = grid.point(static_cast<std::size_t>(i));
        const double v = potential(x);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "discretize: potential is not finite at grid point x_" << i << " = " << x;
            throw ValidationError(msg.str());
        }
        m.diagonal(i) = 2.0 * inv_h2 + v;
    }
    return m;
}

Spectrum solve_spectrum(const Potential& potential, const Grid1D& grid, std::size_t k,
                        double energy_shift) {
    const auto m = discretize(potential, grid);
    auto result = eigenvalues_tridiagonal(m, static_cast<Eigen::Index>(k));
    Eigen::VectorXd levels = result.eigenvalues.array() + energy_shift;
    for (Eigen::Index i = 0; i < levels.size(); ++i) {
        if (!(levels(i) > 0.0)) {
            std::ostringstream msg;
            msg.precision(6);
            msg << "solve_spectrum: level " << i << " is " << levels(i)
                << " after shifting by " << energy_shift
                << "; the deformation needs E > 0, increase energy_shift above " << -result.eigenvalues(i);
            throw ValidationError(msg.str());
        }
    }
    return Spectrum(std::move(levels));
}

} // namespace lsd
