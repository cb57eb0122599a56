#include "kolmo/deterministic_path.hpp"

#include <stdexcept>
#include <string>

#include "kolmo/errors.hpp"

namespace kolmo {

Eigen::MatrixXd euler_ode(const LinearOperator& a, const DriftSpec& drift, const TimeGrid& grid,
                          const Eigen::Ref<const Eigen::VectorXd>& x0) {
    const Eigen::Index d = a.dim();
    if (drift.d != d || x0.size() != d)
        throw std::invalid_argument("euler_ode: dimension mismatch");
    if (!(grid.dt_fine * a.max_abs_eigenvalue() < 2.0))
        throw std::invalid_argument("euler_ode: explicit scheme unstable, need dt_fine * max|a_k| < 2 "
                                    "(got " + std::to_string(grid.dt_fine * a.max_abs_eigenvalue()) + ")");

    Eigen::MatrixXd path(grid.n_fine + 1, d);
    Eigen::VectorXd y = x0;
    Eigen::VectorXd b(d);
    path.row(0) = y.transpose();
    for (long j = 1; j <= grid.n_fine; ++j) {
        drift_eval(drift, grid.fine_time(j - 1), y, b);
        y += grid.dt_fine * (a.apply(y) + b);
        if (!y.allFinite())
            throw NumericalError("euler_ode: state became non-finite at fine step " + std::to_string(j),
                                 -1, j);
        path.row(j) = y.transpose();
    }
    return path;
}

ShiftProfile shift_tables(const DriftSpec& drift, const TimeGrid& grid, Eigen::MatrixXd path) {
    if (path.rows() != grid.n_fine + 1 || path.cols() != drift.d)
        throw std::invalid_argument("shift_tables: path does not match grid/drift dimensions");
    ShiftProfile p;
    p.shift_fine.resize(grid.n_fine + 1, drift.d);
    Eigen::VectorXd b(drift.d);
    for (long j = 0; j <= grid.n_fine; ++j) {
        drift_eval(drift, grid.fine_time(j), path.row(j).transpose(), b);
        p.shift_fine.row(j) = b.transpose();
    }
    p.shift_coarse.resize(grid.n_coarse + 1, drift.d);
    for (long j = 0; j <= grid.n_coarse; ++j)
        p.shift_coarse.row(j) = p.shift_fine.row(j * grid.ratio);
    p.path = std::move(path);
    return p;
}

ShiftProfile zero_shift(const TimeGrid& grid, Eigen::Index d) {
    ShiftProfile p;
    p.path = Eigen::MatrixXd::Zero(grid.n_fine + 1, d);
    p.shift_fine = Eigen::MatrixXd::Zero(grid.n_fine + 1, d);
    p.shift_coarse = Eigen::MatrixXd::Zero(grid.n_coarse + 1, d);
    return p;
}

Eigen::MatrixXd ConvolutionTable::row(long l, const Eigen::MatrixXd& shift_spectral,
                                      const ExpTable& exp_table) {
    const long count = shift_spectral.rows();
    const Eigen::Index d = shift_spectral.cols();
    if (l < 0 || l >= count) throw std::invalid_argument("ConvolutionTable: row index out of range");
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(count, d);
    // F[l][k] = exp(dt A) (F[l][k-1] + dt f_{k-1}), the Horner form of the
    // rectangle-rule sum with exponent (k - r).
    const Eigen::VectorXd& e1 = exp_table.vec(1);
    const double dt = exp_table.dt();
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
    for (long k = l + 1; k < count; ++k) {
        acc = e1.cwiseProduct(acc + dt * shift_spectral.row(k - 1).transpose());
        out.row(k) = acc.transpose();
    }
    return out;
}

ConvolutionTable::ConvolutionTable(const Eigen::MatrixXd& shift_spectral, const ExpTable& exp_table) {
    count_ = shift_spectral.rows();
    dim_ = shift_spectral.cols();
    if (exp_table.max_index() + 1 < count_)
        throw std::invalid_argument("ConvolutionTable: exp table too short for grid");
    data_.assign(static_cast<std::size_t>(count_) * static_cast<std::size_t>(count_) *
                     static_cast<std::size_t>(dim_),
                 0.0);
    for (long l = 0; l < count_; ++l) {
        const Eigen::MatrixXd r = row(l, shift_spectral, exp_table);
        for (long k = l + 1; k < count_; ++k) {
            double* dst = data_.data() + (static_cast<std::size_t>(l) * count_ + k) * dim_;
            Eigen::Map<Eigen::VectorXd>(dst, dim_) = r.row(k).transpose();
        }
    }
}

Eigen::VectorXd ConvolutionTable::vec(long l, long k) const {
    if (l < 0 || l >= count_ || k < 0 || k >= count_)
        throw std::invalid_argument("ConvolutionTable: index out of range");
    return Eigen::Map<const Eigen::VectorXd>(entry(l, k), dim_);
}

ConvolutionTable convolution_table(const ShiftProfile& shift, const LinearOperator& a,
                                   const ExpTable& exp_table) {
    Eigen::MatrixXd spectral(shift.shift_coarse.rows(), shift.shift_coarse.cols());
    for (long j = 0; j < shift.shift_coarse.rows(); ++j)
        spectral.row(j) = a.to_spectral(shift.shift_coarse.row(j).transpose()).transpose();
    return ConvolutionTable(spectral, exp_table);
}

} // namespace kolmo
