#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kolmo/deterministic_path.hpp"
#include "kolmo/kernel_tables.hpp"
#include "kolmo/time_grid.hpp"

namespace kolmo {

// The reusable set of base Gaussian trajectories: unit-noise, zero-start,
// zero-shift OU paths simulated with fine-step Euler and kept only at the
// coarse indices. One bank serves every run that keeps the operator A and the
// grid fixed; initial condition, noise amplitude and drift are layered on top
// by ShiftedSamples without touching the stored data.
//
// Coordinates are the spectral coordinates of the operator the bank was
// generated for (the state coordinates themselves whenever A is diagonal).
struct PathBank {
    std::uint64_t seed = 0;  // stream seed (already namespaced)
    TimeGrid grid;
    Eigen::Index dim = 0;
    long n_samples = 0;
    std::vector<double> data;  // n_samples x (n_coarse + 1) x dim, sample-major

    const double* at(long sample, long coarse_index) const {
        return data.data() +
               (static_cast<std::size_t>(sample) * static_cast<std::size_t>(grid.n_coarse + 1) +
                static_cast<std::size_t>(coarse_index)) * static_cast<std::size_t>(dim);
    }
    std::uint64_t checksum() const;
};

struct BankOptions {
    int threads = 0;
    std::uint64_t max_bytes = 2ull << 30;  // refuse to allocate banks beyond this
};

PathBank generate_bank(const LinearOperator& a, const TimeGrid& grid, long n_samples,
                       std::uint64_t seed, const BankOptions& options = {});

// Fixed 64-byte header ("KIPB", version, shapes, grid, seed) followed by
// row-major little-endian doubles; round-trips bit for bit.
void save_bank(const PathBank& bank, const std::string& path);
PathBank load_bank(const std::string& path);

// View of the bank shifted to a concrete run: mean_j = e^{j dt A} x0 + F[0][j]
// in spectral coordinates, sample i at index j being mean_j + sigma * base.
// Nothing is materialized; the bank stays shared and read-only.
class ShiftedSamples {
public:
    ShiftedSamples() = default;
    ShiftedSamples(std::shared_ptr<const PathBank> bank, const Eigen::Ref<const Eigen::VectorXd>& x0,
                   const ConvolutionTable& f_table, double sigma, const KernelTables& kernel);
    // Noise-free variant: only the semigroup is needed, so sigma = 0 works.
    ShiftedSamples(std::shared_ptr<const PathBank> bank, const Eigen::Ref<const Eigen::VectorXd>& x0,
                   const ConvolutionTable& f_table, double sigma, const ExpTable& exp_table,
                   const LinearOperator& op);

    Eigen::Index dim() const { return bank_->dim; }
    long n_samples() const { return bank_->n_samples; }
    long n_coarse() const { return bank_->grid.n_coarse; }
    double sigma() const { return sigma_; }
    const PathBank& bank() const { return *bank_; }
    std::shared_ptr<const PathBank> bank_ptr() const { return bank_; }
    const Eigen::MatrixXd& mean() const { return mean_; }

    // Spectral coordinates of sample i at coarse index j.
    void spectral(long i, long j, Eigen::Ref<Eigen::VectorXd> out) const {
        const double* base = bank_->at(i, j);
        for (Eigen::Index k = 0; k < mean_.cols(); ++k) out[k] = mean_(j, k) + sigma_ * base[k];
    }

    // State coordinates (rotation applied for dense operators).
    Eigen::VectorXd state(long i, long j) const;

private:
    std::shared_ptr<const PathBank> bank_;
    const LinearOperator* op_ = nullptr;
    double sigma_ = 0.0;
    Eigen::MatrixXd mean_;  // (n_coarse + 1) x dim, spectral
};

} // namespace kolmo
