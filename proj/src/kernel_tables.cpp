#include "kolmo/kernel_tables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kolmo {

namespace {

void require_finite_time(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
}

} // namespace

Eigen::VectorXd expm_spectrum(const LinearOperator& a, double t) {
    require_finite_time(t);
    if (t < 0.0) throw std::invalid_argument("expm: t must be nonnegative");
    return (a.spectrum().array() * t).exp().matrix();
}

Eigen::MatrixXd expm(const LinearOperator& a, double t) {
    return a.conjugate(expm_spectrum(a, t));
}

Eigen::VectorXd covariance_spectrum(const LinearOperator& a, const NoiseSpec& noise, double t) {
    require_finite_time(t);
    if (!(t > 0.0)) throw std::invalid_argument("covariance: Q_t is singular at t <= 0");
    if (!(noise.sigma > 0.0)) throw std::invalid_argument("covariance: requires sigma > 0");
    const double s2 = noise.sigma * noise.sigma;
    Eigen::VectorXd q(a.dim());
    for (Eigen::Index k = 0; k < a.dim(); ++k) {
        const double lambda = -a.spectrum()[k];
        q[k] = s2 * (1.0 - std::exp(-2.0 * lambda * t)) / (2.0 * lambda);
    }
    return q;
}

Eigen::MatrixXd covariance(const LinearOperator& a, const NoiseSpec& noise, double t) {
    return a.conjugate(covariance_spectrum(a, noise, t));
}

Eigen::MatrixXd lambda_op(const LinearOperator& a, const NoiseSpec& noise, double t) {
    const Eigen::VectorXd q = covariance_spectrum(a, noise, t);
    const Eigen::VectorXd e = expm_spectrum(a, t);
    Eigen::VectorXd lam(a.dim());
    for (Eigen::Index k = 0; k < a.dim(); ++k) lam[k] = e[k] / std::sqrt(q[k]);
    return a.conjugate(lam);
}

ExpTable::ExpTable(const LinearOperator& a, double dt, long count) : dt_(dt), dim_(a.dim()) {
    if (count < 1) throw std::invalid_argument("ExpTable: needs at least one entry");
    rows_.reserve(static_cast<std::size_t>(count));
    for (long j = 1; j <= count; ++j)
        rows_.push_back(expm_spectrum(a, dt * static_cast<double>(j)));
}

void ExpTable::check_index(long j) const {
    if (j < 1 || j > max_index())
        throw std::logic_error("kernel table index " + std::to_string(j) +
                               " out of range [1, " + std::to_string(max_index()) + "]");
}

KernelTables::KernelTables(const LinearOperator& a, const NoiseSpec& noise, const TimeGrid& grid)
    : a_(a), sigma_(noise.sigma), exp_(a, grid.dt_coarse, grid.n_coarse) {
    const long m = grid.n_coarse;
    qt_.reserve(static_cast<std::size_t>(m));
    qt_inv_sqrt_.reserve(static_cast<std::size_t>(m));
    lambda_.reserve(static_cast<std::size_t>(m));
    for (long j = 1; j <= m; ++j) {
        const double t = grid.coarse_time(j);
        Eigen::VectorXd q = covariance_spectrum(a, noise, t);
        Eigen::VectorXd qis(a.dim());
        for (Eigen::Index k = 0; k < a.dim(); ++k) qis[k] = 1.0 / std::sqrt(q[k]);
        // Lambda stored as the literal composition Q^{-1/2} * expA.
        Eigen::VectorXd lam = qis.cwiseProduct(exp_.vec(j));
        qt_.push_back(std::move(q));
        qt_inv_sqrt_.push_back(std::move(qis));
        lambda_.push_back(std::move(lam));
    }
}

const Eigen::VectorXd& KernelTables::at(const std::vector<Eigen::VectorXd>& t, long j) const {
    if (j < 1 || j > max_index())
        throw std::logic_error("kernel table index " + std::to_string(j) +
                               " out of range [1, " + std::to_string(max_index()) + "]");
    return t[static_cast<std::size_t>(j - 1)];
}

KernelTables build_kernel_tables(const LinearOperator& a, const NoiseSpec& noise, const TimeGrid& grid) {
    return KernelTables(a, noise, grid);
}

} // namespace kolmo
