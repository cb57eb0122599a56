#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kolmo/linear_operator.hpp"
#include "kolmo/time_grid.hpp"

namespace kolmo {

// e^{tA}, t >= 0. Diagonal operators get entrywise scalar exponentials; dense
// ones reuse the eigendecomposition cached inside LinearOperator.
Eigen::MatrixXd expm(const LinearOperator& a, double t);

// Q_t = integral_0^t e^{sA} Q e^{sA*} ds with Q = sigma^2 I. In the eigenbasis
// of A the eigenvalue for a mode with A-eigenvalue -lambda is
// sigma^2 (1 - e^{-2 lambda t}) / (2 lambda). Singular at t = 0, so t > 0 and
// sigma > 0 are required.
Eigen::MatrixXd covariance(const LinearOperator& a, const NoiseSpec& noise, double t);

// Lambda(t) = Q_t^{-1/2} e^{tA}; blows up like 1/(sigma sqrt(t)) near t = 0.
Eigen::MatrixXd lambda_op(const LinearOperator& a, const NoiseSpec& noise, double t);

// Spectral entries of the kernels above, shared by the table builder and the
// one-off operations.
Eigen::VectorXd expm_spectrum(const LinearOperator& a, double t);
Eigen::VectorXd covariance_spectrum(const LinearOperator& a, const NoiseSpec& noise, double t);

// e^{j dt A} in spectral form for j = 1..n; the minimal table the shift
// convolution needs. Index 0 is deliberately unrepresentable.
class ExpTable {
public:
    ExpTable() = default;
    ExpTable(const LinearOperator& a, double dt, long count);

    long max_index() const { return static_cast<long>(rows_.size()); }
    double dt() const { return dt_; }
    Eigen::Index dim() const { return dim_; }

    const double* row(long j) const {
        check_index(j);
        return rows_[static_cast<std::size_t>(j - 1)].data();
    }
    const Eigen::VectorXd& vec(long j) const {
        check_index(j);
        return rows_[static_cast<std::size_t>(j - 1)];
    }

private:
    void check_index(long j) const;
    std::vector<Eigen::VectorXd> rows_;
    double dt_ = 0.0;
    Eigen::Index dim_ = 0;
};

// Precomputed spectral kernels on the coarse grid, j = 1..T/dt_coarse:
// exp(j dt A), Q_{j dt}, Q_{j dt}^{-1/2} and Lambda(j dt). Immutable after
// construction and shared read-only by all workers. Lambda is stored exactly
// as the product of the stored Q^{-1/2} and exp entries.
//
// There is no index 0 on purpose: Lambda(0) and Q_0^{-1/2} do not exist, and
// any code path asking for them is a bug we want loud.
class KernelTables {
public:
    KernelTables(const LinearOperator& a, const NoiseSpec& noise, const TimeGrid& grid);

    long max_index() const { return exp_.max_index(); }
    double dt() const { return exp_.dt(); }
    Eigen::Index dim() const { return a_.dim(); }
    const LinearOperator& op() const { return a_; }
    double sigma() const { return sigma_; }
    const ExpTable& exp_table() const { return exp_; }

    const double* exp_row(long j) const { return exp_.row(j); }
    const double* qt_row(long j) const { return row(qt_, j); }
    const double* qt_inv_sqrt_row(long j) const { return row(qt_inv_sqrt_, j); }
    const double* lambda_row(long j) const { return row(lambda_, j); }

    // Dense views for validation and tests.
    Eigen::MatrixXd exp_matrix(long j) const { return a_.conjugate(exp_.vec(j)); }
    Eigen::MatrixXd qt_matrix(long j) const { return a_.conjugate(at(qt_, j)); }
    Eigen::MatrixXd qt_inv_sqrt_matrix(long j) const { return a_.conjugate(at(qt_inv_sqrt_, j)); }
    Eigen::MatrixXd lambda_matrix(long j) const { return a_.conjugate(at(lambda_, j)); }
    const Eigen::VectorXd& qt_vec(long j) const { return at(qt_, j); }
    const Eigen::VectorXd& lambda_vec(long j) const { return at(lambda_, j); }
    const Eigen::VectorXd& qt_inv_sqrt_vec(long j) const { return at(qt_inv_sqrt_, j); }

private:
    const Eigen::VectorXd& at(const std::vector<Eigen::VectorXd>& t, long j) const;
    const double* row(const std::vector<Eigen::VectorXd>& t, long j) const { return at(t, j).data(); }

    LinearOperator a_;
    double sigma_;
    ExpTable exp_;
    std::vector<Eigen::VectorXd> qt_;
    std::vector<Eigen::VectorXd> qt_inv_sqrt_;
    std::vector<Eigen::VectorXd> lambda_;
};

KernelTables build_kernel_tables(const LinearOperator& a, const NoiseSpec& noise, const TimeGrid& grid);

} // namespace kolmo
