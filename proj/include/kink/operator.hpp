#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "kink/grid.hpp"

namespace kink {

/// Dense row-major matrix of quadrature weights times kernel values.
class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::span<const double> data() const noexcept { return data_; }

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Discretization of the half-line operator
///
///     K_a[phi](t) = int_0^inf K_a(t, tau) phi(tau) dtau
///
/// on a uniform grid. The truncated integral over [0, t_max] uses the
/// trapezoid rule with closed-form endpoint corrections on the first and
/// last columns, chosen so that constants are integrated exactly. The part
/// beyond t_max is integrated analytically assuming phi == tail_value there.
///
/// Immutable; copies share the weight storage.
class HalfLineOperator {
public:
    double a() const noexcept { return data_->a; }
    const Grid& grid() const noexcept { return data_->grid; }
    double tail_value() const noexcept { return tail_value_; }
    const WeightMatrix& weights() const noexcept { return data_->weights; }
    std::span<const double> tail_coefficients() const noexcept { return data_->tails; }

    /// Same discretization, different assumed value beyond t_max.
    HalfLineOperator with_tail_value(double tail_value) const;

    /// output[i] = sum_j W(i, j) f[j] + tail[i] * tail_value, summed in
    /// ascending j with the tail term last. Throws GridMismatchError.
    HalfLineFunction apply(const HalfLineFunction& f) const;

private:
    struct Data {
        double a;
        Grid grid;
        WeightMatrix weights;
        std::vector<double> tails;
    };

    HalfLineOperator(std::shared_ptr<const Data> data, double tail_value)
        : data_(std::move(data)), tail_value_(tail_value)
    {
    }

    friend HalfLineOperator build_half_line_operator(double, const Grid&, double);

    std::shared_ptr<const Data> data_;
    double tail_value_;
};

/// Discretization of the full-line convolution C_a[psi](t) on a symmetric
/// grid. Constant tails are assumed separately beyond -t_max and t_max.
class FullLineOperator {
public:
    double a() const noexcept { return data_->a; }
    const SymmetricGrid& grid() const noexcept { return data_->grid; }
    double tail_value_left() const noexcept { return left_value_; }
    double tail_value_right() const noexcept { return right_value_; }
    const WeightMatrix& weights() const noexcept { return data_->weights; }
    std::span<const double> left_tail_coefficients() const noexcept { return data_->left_tails; }
    std::span<const double> right_tail_coefficients() const noexcept { return data_->right_tails; }

    FullLineOperator with_tail_values(double left, double right) const;

    FullLineFunction apply(const FullLineFunction& f) const;

    /// max_i |sum_j W(i, j) + left[i] + right[i] - 1|, the discrete
    /// deviation from the unit mass of the kernel.
    double normalization_deviation() const;

private:
    struct Data {
        double a;
        SymmetricGrid grid;
        WeightMatrix weights;
        std::vector<double> left_tails;
        std::vector<double> right_tails;
    };

    FullLineOperator(std::shared_ptr<const Data> data, double left, double right)
        : data_(std::move(data)), left_value_(left), right_value_(right)
    {
    }

    friend FullLineOperator build_full_line_operator(double, const SymmetricGrid&, double, double);

    std::shared_ptr<const Data> data_;
    double left_value_;
    double right_value_;
};

HalfLineOperator build_half_line_operator(double a, const Grid& grid, double tail_value = 1.0);

FullLineOperator build_full_line_operator(double a, const SymmetricGrid& grid,
                                          double tail_value_left = -1.0,
                                          double tail_value_right = 1.0);

/// Largest spacing the default discretization accepts for a given a.
double recommended_spacing(double a);

/// Smallest truncation point the default discretization accepts for a given a.
double recommended_t_max(double a);

}  // namespace kink
