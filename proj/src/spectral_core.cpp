#include "lsd/spectral_core.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace lsd {

Spectrum::Spectrum(Eigen::VectorXd energies) : indices_(static_cast<std::size_t>(energies.size())),
                                               energies_(std::move(energies)) {
    std::iota(indices_.begin(), indices_.end(), std::size_t{0});
    validate();
}

Spectrum::Spectrum(std::vector<std::size_t> indices, Eigen::VectorXd energies)
    : indices_(std::move(indices)), energies_(std::move(energies)) {
    validate();
}

void Spectrum::validate() const {
    if (indices_.size() != static_cast<std::size_t>(energies_.size()))
        throw ValidationError("spectrum: index count does not match level count");
    for (Eigen::Index i = 0; i < energies_.size(); ++i) {
        const double e = energies_(i);
        if (!std::isfinite(e) || !(e > 0.0))
            throw ValidationError("spectrum: level " + std::to_string(i) +
                                  " has non-positive or non-finite energy " + std::to_string(e));
        if (i > 0 && !(e > energies_(i - 1)))
            throw ValidationError("spectrum: levels must be strictly increasing (level " +
                                  std::to_string(i) + ")");
    }
    const std::set<std::size_t> unique(indices_.begin(), indices_.end());
    if (unique.size() != indices_.size())
        throw ValidationError("spectrum: level indices must be unique");
}

} // namespace lsd
