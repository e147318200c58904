#include "kink/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kink/errors.hpp"

namespace kink {

Grid::Grid(double t_max, std::size_t n_points)
    : t_max_(t_max), n_points_(n_points), spacing_(0.0)
{
    if (!(std::isfinite(t_max) && t_max > 0.0)) {
        throw DomainError("grid: t_max must be positive and finite");
    }
    if (n_points < 3) {
        throw DomainError("grid: need at least 3 points, got " + std::to_string(n_points));
    }
    spacing_ = t_max / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::nodes() const
{
    std::vector<double> t(n_points_);
    for (std::size_t k = 0; k < n_points_; ++k) {
        t[k] = node(k);
    }
    return t;
}

std::vector<double> SymmetricGrid::nodes() const
{
    std::vector<double> t(size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        t[k] = node(k);
    }
    return t;
}

template <class GridT>
GridFunction<GridT>::GridFunction(GridT grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values))
{
    if (values_.size() != grid_.size()) {
        throw GridMismatchError("grid function: " + std::to_string(values_.size()) +
                                " values for " + std::to_string(grid_.size()) + " nodes");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw DomainError("grid function: non-finite value at node " + std::to_string(k));
        }
    }
}

template <class GridT>
double GridFunction<GridT>::sup_norm() const noexcept
{
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

template class GridFunction<Grid>;
template class GridFunction<SymmetricGrid>;

}  // namespace kink
