#include "kink/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kink/errors.hpp"
#include "kink/kernel.hpp"
#include "kink/special.hpp"

namespace kink {

namespace {

void require_finite_tail(double v)
{
    if (!std::isfinite(v)) {
        throw DomainError("tail value must be finite");
    }
}

// Trapezoid sum of the Gaussian centred at `centre` over nodes[first..last].
double trapezoid_gaussian(double a, double centre, std::span<const double> nodes,
                          std::size_t first, std::size_t last, double h)
{
    if (first >= last) {
        return 0.0;
    }
    double sum = 0.5 * (kernel_full(a, centre, nodes[first]) + kernel_full(a, centre, nodes[last]));
    for (std::size_t j = first + 1; j < last; ++j) {
        sum += kernel_full(a, centre, nodes[j]);
    }
    return h * sum;
}

// The row of trapezoid weights integrates constants with an O(h^2) defect
// coming from the two interval endpoints. Split each row at its own node,
// where the Gaussian peaks and every odd derivative vanishes, and assign the
// defect of each piece to the endpoint column of that piece. Negative values
// are rounding noise and are dropped so the matrix stays nonnegative.
void add_endpoint_corrections(WeightMatrix& w, std::size_t row, double left, double right)
{
    const std::size_t last = w.size() - 1;
    w(row, 0) += std::max(left, 0.0);
    w(row, last) += std::max(right, 0.0);
}

double row_sum(const WeightMatrix& w, std::size_t row)
{
    double s = 0.0;
    for (double v : w.row(row)) {
        s += v;
    }
    return s;
}

}  // namespace

double recommended_spacing(double a)
{
    require_nonlocality(a);
    return std::sqrt(a) / 4.0;
}

double recommended_t_max(double a)
{
    require_nonlocality(a);
    return 10.0 + 6.0 * std::sqrt(a);
}

HalfLineOperator build_half_line_operator(double a, const Grid& grid, double tail_value)
{
    require_nonlocality(a);
    require_finite_tail(tail_value);

    const std::size_t n = grid.size();
    const double h = grid.spacing();
    const double t_max = grid.t_max();
    const double width = 2.0 * std::sqrt(a);
    const std::vector<double> t = grid.nodes();

    auto data = std::make_shared<HalfLineOperator::Data>(
        HalfLineOperator::Data{a, grid, WeightMatrix(n), std::vector<double>(n, 0.0)});
    WeightMatrix& w = data->weights;

    // Row 0 is identically zero: the kernel vanishes at t = 0.
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double weight = (j == 0 || j == n - 1) ? 0.5 * h : h;
            w(i, j) = weight * kernel_half(a, t[i], t[j]);
        }

        const double up = (t_max - t[i]) / width;
        const double down = (t_max + t[i]) / width;
        data->tails[i] = std::max(0.5 * (erfc(up) - erfc(down)), 0.0);

        const double exact_total = erf(t[i] / width) + 0.5 * (erf(up) - erf(down));
        const double right = 0.5 * erf(up) - trapezoid_gaussian(a, t[i], t, i, n - 1, h);
        const double left = exact_total - row_sum(w, i) - right;
        add_endpoint_corrections(w, i, left, right);
    }

    return HalfLineOperator(std::move(data), tail_value);
}

FullLineOperator build_full_line_operator(double a, const SymmetricGrid& grid,
                                          double tail_value_left, double tail_value_right)
{
    require_nonlocality(a);
    require_finite_tail(tail_value_left);
    require_finite_tail(tail_value_right);

    const std::size_t n = grid.size();
    const double h = grid.spacing();
    const double t_max = grid.t_max();
    const double width = 2.0 * std::sqrt(a);
    const std::vector<double> t = grid.nodes();

    auto data = std::make_shared<FullLineOperator::Data>(FullLineOperator::Data{
        a, grid, WeightMatrix(n), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)});
    WeightMatrix& w = data->weights;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double weight = (j == 0 || j == n - 1) ? 0.5 * h : h;
            w(i, j) = weight * kernel_full(a, t[i], t[j]);
        }

        const double up = (t_max - t[i]) / width;
        const double down = (t_max + t[i]) / width;
        data->left_tails[i] = 0.5 * erfc(down);
        data->right_tails[i] = 0.5 * erfc(up);

        const double exact_total = 0.5 * (erf(up) + erf(down));
        const double right = 0.5 * erf(up) - trapezoid_gaussian(a, t[i], t, i, n - 1, h);
        const double left = exact_total - row_sum(w, i) - right;
        add_endpoint_corrections(w, i, left, right);
    }

    return FullLineOperator(std::move(data), tail_value_left, tail_value_right);
}

HalfLineOperator HalfLineOperator::with_tail_value(double tail_value) const
{
    require_finite_tail(tail_value);
    return HalfLineOperator(data_, tail_value);
}

HalfLineFunction HalfLineOperator::apply(const HalfLineFunction& f) const
{
    if (!(f.grid() == grid())) {
        throw GridMismatchError("half-line operator applied to a function on a different grid");
    }
    const std::size_t n = grid().size();
    const auto x = f.values();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = data_->weights.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += r[j] * x[j];
        }
        s += data_->tails[i] * tail_value_;
        out[i] = s;
    }
    return HalfLineFunction(grid(), std::move(out));
}

FullLineOperator FullLineOperator::with_tail_values(double left, double right) const
{
    require_finite_tail(left);
    require_finite_tail(right);
    return FullLineOperator(data_, left, right);
}

FullLineFunction FullLineOperator::apply(const FullLineFunction& f) const
{
    if (!(f.grid() == grid())) {
        throw GridMismatchError("full-line operator applied to a function on a different grid");
    }
    const std::size_t n = grid().size();
    const auto x = f.values();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = data_->weights.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += r[j] * x[j];
        }
        s += data_->left_tails[i] * left_value_;
        s += data_->right_tails[i] * right_value_;
        out[i] = s;
    }
    return FullLineFunction(grid(), std::move(out));
}

double FullLineOperator::normalization_deviation() const
{
    double worst = 0.0;
    for (std::size_t i = 0; i < grid().size(); ++i) {
        const double mass = row_sum(data_->weights, i) + data_->left_tails[i] + data_->right_tails[i];
        worst = std::max(worst, std::abs(mass - 1.0));
    }
    return worst;
}

}  // namespace kink
