#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kolmo/kernel_tables.hpp"
#include "kolmo/models.hpp"
#include "kolmo/time_grid.hpp"

namespace kolmo {

// Explicit Euler for dy/dt = A y + B0(t, y), y(0) = x0, on the fine grid.
// Returns an (n_fine + 1) x d path in state coordinates. Enforces the
// explicit-scheme stability bound dt_fine * max|a_k| < 2 and aborts with the
// first offending index if the state leaves the representable range.
Eigen::MatrixXd euler_ode(const LinearOperator& a, const DriftSpec& drift, const TimeGrid& grid,
                          const Eigen::Ref<const Eigen::VectorXd>& x0);

// The deterministic path together with the shift evaluated along it:
// fine shift f_j = B0(j dt_fine, y_j) and its coarse subsampling. Everything
// here is immutable once built and in state coordinates.
struct ShiftProfile {
    Eigen::MatrixXd path;          // (n_fine + 1) x d
    Eigen::MatrixXd shift_fine;    // (n_fine + 1) x d
    Eigen::MatrixXd shift_coarse;  // (n_coarse + 1) x d
};

ShiftProfile shift_tables(const DriftSpec& drift, const TimeGrid& grid, Eigen::MatrixXd path);

// A shift profile that is identically zero (the no-shift runs).
ShiftProfile zero_shift(const TimeGrid& grid, Eigen::Index d);

// Rectangle-rule convolution of the coarse shift with the semigroup:
//   F[l][k] = dt * sum_{r=l}^{k-1} exp((k - r) dt A) f_r   for k > l,
//   F[l][k] = 0 otherwise.
// Stored densely in spectral coordinates, row-major over (l, k); rows can also
// be built one at a time through `row` when a full table would be too large.
class ConvolutionTable {
public:
    ConvolutionTable() = default;

    // shift_spectral is (n_coarse + 1) x d, rows already in spectral coords.
    ConvolutionTable(const Eigen::MatrixXd& shift_spectral, const ExpTable& exp_table);

    // F[l][.] as an (n_coarse + 1) x d block, computed without the dense table.
    static Eigen::MatrixXd row(long l, const Eigen::MatrixXd& shift_spectral, const ExpTable& exp_table);

    const double* entry(long l, long k) const {
        return data_.data() + (static_cast<std::size_t>(l) * static_cast<std::size_t>(count_) +
                               static_cast<std::size_t>(k)) * static_cast<std::size_t>(dim_);
    }
    Eigen::VectorXd vec(long l, long k) const;

    long count() const { return count_; }  // n_coarse + 1 indices per axis
    Eigen::Index dim() const { return dim_; }

private:
    std::vector<double> data_;
    long count_ = 0;
    Eigen::Index dim_ = 0;
};

ConvolutionTable convolution_table(const ShiftProfile& shift, const LinearOperator& a,
                                   const ExpTable& exp_table);

} // namespace kolmo
