#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kink {

/// Uniform grid on the truncated half-line [0, t_max].
///
/// Node k sits at exactly k * spacing(), so node(0) == 0 and the last node
/// equals t_max up to one rounding of the spacing.
class Grid {
public:
    Grid(double t_max, std::size_t n_points);

    double t_max() const noexcept { return t_max_; }
    std::size_t size() const noexcept { return n_points_; }
    double spacing() const noexcept { return spacing_; }
    double node(std::size_t k) const noexcept { return static_cast<double>(k) * spacing_; }
    std::vector<double> nodes() const;

    bool operator==(const Grid&) const = default;

private:
    double t_max_;
    std::size_t n_points_;
    double spacing_;
};

/// The mirror image of a half-line grid on [-t_max, t_max].
///
/// Holds 2n-1 nodes with the origin at index n-1; node(origin() + k) and
/// node(origin() - k) are exact negatives of each other.
class SymmetricGrid {
public:
    explicit SymmetricGrid(Grid half) : half_(half) {}

    const Grid& half() const noexcept { return half_; }
    std::size_t size() const noexcept { return 2 * half_.size() - 1; }
    std::size_t origin() const noexcept { return half_.size() - 1; }
    double t_max() const noexcept { return half_.t_max(); }
    double spacing() const noexcept { return half_.spacing(); }
    double node(std::size_t k) const noexcept
    {
        const std::size_t m = origin();
        return k >= m ? half_.node(k - m) : -half_.node(m - k);
    }
    std::vector<double> nodes() const;

    bool operator==(const SymmetricGrid&) const = default;

private:
    Grid half_;
};

/// Samples of a real function on a grid. Values are always finite and
/// there is exactly one per node.
template <class GridT>
class GridFunction {
public:
    GridFunction(GridT grid, std::vector<double> values);

    static GridFunction constant(const GridT& grid, double value)
    {
        return GridFunction(grid, std::vector<double>(grid.size(), value));
    }

    template <class F>
    static GridFunction sample(const GridT& grid, F&& f)
    {
        std::vector<double> v(grid.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] = f(grid.node(k));
        }
        return GridFunction(grid, std::move(v));
    }

    const GridT& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }

    double sup_norm() const noexcept;

    bool operator==(const GridFunction&) const = default;

private:
    GridT grid_;
    std::vector<double> values_;
};

using HalfLineFunction = GridFunction<Grid>;
using FullLineFunction = GridFunction<SymmetricGrid>;

extern template class GridFunction<Grid>;
extern template class GridFunction<SymmetricGrid>;

}  // namespace kink
