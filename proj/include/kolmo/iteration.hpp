#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kolmo/models.hpp"
#include "kolmo/path_bank.hpp"

namespace kolmo {

struct SolveOptions {
    long n_samples = 10000;
    std::uint64_t seed = 1;
    double tol = 1e-2;
    int max_iter = 10;
    int threads = 0;
    bool shift_enabled = true;
    double clip_weights = 0.0;   // 0 disables clipping (the default policy is abort-and-report)
    double err_blowup = 1e8;     // err(n) beyond this counts as divergence
    std::uint64_t max_bank_bytes = 2ull << 30;
};

// Everything a run produces, per iteration n = 0..N and coarse index
// j = 0..n_coarse. u[n] is the running estimator, v[n] the n-th correction,
// err_history the sup over j >= 1 of |v^n| for n >= 1.
struct RunReport {
    TimeGrid grid;
    long n_samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int max_iter = 0;
    bool shift_enabled = true;
    double sigma = 0.0;

    std::vector<std::vector<double>> u;
    std::vector<std::vector<double>> v;
    std::vector<std::vector<double>> v_stderr;
    std::vector<std::vector<double>> weight_mean;  // per-iteration sample mean of I^n
    std::vector<std::vector<double>> weight_sd;
    std::vector<double> err_history;
    std::vector<double> final_stderr;  // stderr of the final reweighted estimator, per j
    std::vector<double> iter_ms;
    bool converged = false;
    bool diverged = false;
    std::string divergence_detail;
    double reweight_max_rel_err = 0.0;

    int iterations() const { return static_cast<int>(u.size()) - 1; }
    const std::vector<double>& u_final() const { return u.back(); }
};

// Report plus the state distribution tools need: the bank, the shifted view,
// the per-sample total weights sum_k I^k and the evaluated observable.
struct RunResult {
    RunReport report;
    std::shared_ptr<const PathBank> bank;
    ShiftedSamples samples;
    ShiftProfile shift;
    std::vector<double> total_weights;  // n_samples x (n_coarse + 1)
    std::vector<double> phi;            // n_samples x (n_coarse + 1)
};

// One step of the discrete weight recursion: for every sample i and coarse
// index j = 1..M,
//   I_next[j] = dt * sum_{l=1}^{j} < Lambda_{j-l+1} B(l dt, Z_l),
//                  Q_{j-l+1}^{-1/2} (Z_j - e^{(j-l+1) dt A} Z_l - F[l][j]) > * I_cur[l]
// with B(l dt, x) = B0(l dt, x) - f_l. I_next[0] = 0. Throws DivergenceError
// on the first non-finite weight (scanned in ascending sample-major order).
void weights_next(const ShiftedSamples& z, const DriftSpec& drift, const ShiftProfile& shift,
                  const ConvolutionTable& f_table, const KernelTables& kernel,
                  const std::vector<double>& i_cur, std::vector<double>& i_next,
                  int threads, double clip_weights = 0.0, int iteration_for_report = -1);

// Monte Carlo average v_j = (1/N) sum_i phi[i][j] * w[i][j]. Fixed-block
// deterministic reduction; optional stderr output.
std::vector<double> v_series(const std::vector<double>& phi, const std::vector<double>& weights,
                             long n_samples, long n_coarse, int threads,
                             std::vector<double>* stderr_out = nullptr);

// err(n) = sup_{j = 1..M} |v_j|.
double iterative_error(const std::vector<double>& v);

// Full orchestration: deterministic path -> shift -> tables -> bank ->
// iteration loop with the consecutive-iterations stopping rule. A diverged
// run is reported, not thrown: the report keeps every completed iteration.
RunResult run_solve(const ModelSpec& model, const TimeGrid& grid,
                    const Eigen::Ref<const Eigen::VectorXd>& x0, const ObservableSpec& observable,
                    const SolveOptions& options, std::shared_ptr<const PathBank> bank = nullptr);

} // namespace kolmo
