#include "kolmo/path_bank.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "kolmo/errors.hpp"
#include "kolmo/parallel.hpp"
#include "kolmo/rng.hpp"

namespace kolmo {

namespace {

constexpr char kMagic[4] = {'K', 'I', 'P', 'B'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderBytes = 64;

static_assert(std::endian::native == std::endian::little,
              "bank file format assumes a little-endian host");

struct Header {
    std::uint32_t version = kVersion;
    std::uint32_t dim = 0;
    std::uint32_t n_samples = 0;
    std::uint32_t n_coarse = 0;
    double dt_fine = 0.0;
    double dt_coarse = 0.0;
    double horizon = 0.0;
    std::uint64_t seed = 0;
};

} // namespace

std::uint64_t PathBank::checksum() const {
    return fnv1a64(data.data(), data.size() * sizeof(double));
}

PathBank generate_bank(const LinearOperator& a, const TimeGrid& grid, long n_samples,
                       std::uint64_t seed, const BankOptions& options) {
    if (n_samples < 1) throw std::invalid_argument("generate_bank: need at least one sample");
    if (!(grid.dt_fine * a.max_abs_eigenvalue() < 2.0))
        throw std::invalid_argument("generate_bank: explicit scheme unstable, need dt_fine * max|a_k| < 2");

    const Eigen::Index d = a.dim();
    const std::size_t doubles = static_cast<std::size_t>(n_samples) *
                                static_cast<std::size_t>(grid.n_coarse + 1) *
                                static_cast<std::size_t>(d);
    if (doubles * sizeof(double) > options.max_bytes)
        throw std::invalid_argument("generate_bank: bank of " + std::to_string(doubles * sizeof(double)) +
                                    " bytes exceeds the cap of " + std::to_string(options.max_bytes) +
                                    " (raise run.max_bank_mb if intended)");

    PathBank bank;
    bank.seed = seed;
    bank.grid = grid;
    bank.dim = d;
    bank.n_samples = n_samples;
    bank.data.assign(doubles, 0.0);

    const Eigen::VectorXd& spec = a.spectrum();
    const double dt = grid.dt_fine;
    const double sqrt_dt = std::sqrt(dt);

    parallel_for(static_cast<std::size_t>(n_samples), options.threads, [&](std::size_t i0, std::size_t i1) {
        Eigen::VectorXd z(d);
        for (std::size_t i = i0; i < i1; ++i) {
            NormalStream rng(seed, i);
            z.setZero();
            double* out = bank.data.data() +
                          i * static_cast<std::size_t>(grid.n_coarse + 1) * static_cast<std::size_t>(d);
            // row 0 stays zero (paths start at the origin)
            for (long jc = 1; jc <= grid.n_coarse; ++jc) {
                for (long s = 0; s < grid.ratio; ++s)
                    for (Eigen::Index k = 0; k < d; ++k)
                        z[k] += dt * spec[k] * z[k] + sqrt_dt * rng.next();
                double* row = out + static_cast<std::size_t>(jc) * static_cast<std::size_t>(d);
                for (Eigen::Index k = 0; k < d; ++k) row[k] = z[k];
            }
        }
    });
    return bank;
}

void save_bank(const PathBank& bank, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open bank file for writing: " + path);

    unsigned char header[kHeaderBytes] = {};
    std::memcpy(header, kMagic, 4);
    Header h;
    h.dim = static_cast<std::uint32_t>(bank.dim);
    h.n_samples = static_cast<std::uint32_t>(bank.n_samples);
    h.n_coarse = static_cast<std::uint32_t>(bank.grid.n_coarse);
    h.dt_fine = bank.grid.dt_fine;
    h.dt_coarse = bank.grid.dt_coarse;
    h.horizon = bank.grid.horizon;
    h.seed = bank.seed;
    std::memcpy(header + 4, &h.version, 4);
    std::memcpy(header + 8, &h.dim, 4);
    std::memcpy(header + 12, &h.n_samples, 4);
    std::memcpy(header + 16, &h.n_coarse, 4);
    std::memcpy(header + 20, &h.dt_fine, 8);
    std::memcpy(header + 28, &h.dt_coarse, 8);
    std::memcpy(header + 36, &h.horizon, 8);
    std::memcpy(header + 44, &h.seed, 8);
    f.write(reinterpret_cast<const char*>(header), kHeaderBytes);
    f.write(reinterpret_cast<const char*>(bank.data.data()),
            static_cast<std::streamsize>(bank.data.size() * sizeof(double)));
    if (!f) throw IoError("short write on bank file: " + path);
}

PathBank load_bank(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open bank file: " + path);

    unsigned char header[kHeaderBytes];
    f.read(reinterpret_cast<char*>(header), kHeaderBytes);
    if (f.gcount() != static_cast<std::streamsize>(kHeaderBytes))
        throw IoError("bank file truncated (no header): " + path);
    if (std::memcmp(header, kMagic, 4) != 0)
        throw IoError("bank file has wrong magic (not a bank?): " + path);

    Header h;
    std::memcpy(&h.version, header + 4, 4);
    std::memcpy(&h.dim, header + 8, 4);
    std::memcpy(&h.n_samples, header + 12, 4);
    std::memcpy(&h.n_coarse, header + 16, 4);
    std::memcpy(&h.dt_fine, header + 20, 8);
    std::memcpy(&h.dt_coarse, header + 28, 8);
    std::memcpy(&h.horizon, header + 36, 8);
    std::memcpy(&h.seed, header + 44, 8);
    if (h.version != kVersion)
        throw IoError("unsupported bank file version " + std::to_string(h.version) + ": " + path);
    if (h.dim == 0 || h.n_samples == 0 || h.n_coarse == 0)
        throw IoError("bank file header has empty shape: " + path);

    const std::size_t doubles = static_cast<std::size_t>(h.n_samples) *
                                (static_cast<std::size_t>(h.n_coarse) + 1) *
                                static_cast<std::size_t>(h.dim);
    if (doubles > (1ull << 40) / sizeof(double))
        throw IoError("bank file header dimensions overflow sanity bounds: " + path);

    PathBank bank;
    bank.seed = h.seed;
    bank.grid = TimeGrid::create(h.horizon, h.dt_fine, h.dt_coarse);
    if (bank.grid.n_coarse != static_cast<long>(h.n_coarse))
        throw IoError("bank file header grid is inconsistent: " + path);
    bank.dim = static_cast<Eigen::Index>(h.dim);
    bank.n_samples = static_cast<long>(h.n_samples);
    bank.data.resize(doubles);
    f.read(reinterpret_cast<char*>(bank.data.data()),
           static_cast<std::streamsize>(doubles * sizeof(double)));
    if (f.gcount() != static_cast<std::streamsize>(doubles * sizeof(double)))
        throw IoError("bank file truncated (payload): " + path);
    return bank;
}

ShiftedSamples::ShiftedSamples(std::shared_ptr<const PathBank> bank,
                               const Eigen::Ref<const Eigen::VectorXd>& x0,
                               const ConvolutionTable& f_table, double sigma,
                               const KernelTables& kernel)
    : ShiftedSamples(std::move(bank), x0, f_table, sigma, kernel.exp_table(), kernel.op()) {}

ShiftedSamples::ShiftedSamples(std::shared_ptr<const PathBank> bank,
                               const Eigen::Ref<const Eigen::VectorXd>& x0,
                               const ConvolutionTable& f_table, double sigma,
                               const ExpTable& exp_table, const LinearOperator& op)
    : bank_(std::move(bank)), op_(&op), sigma_(sigma) {
    if (!bank_) throw std::invalid_argument("assemble_shifted: bank is null");
    if (bank_->dim != op.dim() || bank_->dim != x0.size())
        throw std::invalid_argument("assemble_shifted: dimension mismatch");
    if (bank_->grid.n_coarse != exp_table.max_index() ||
        bank_->grid.dt_coarse != exp_table.dt())
        throw std::invalid_argument("assemble_shifted: bank and kernel tables use different grids");
    if (f_table.count() != bank_->grid.n_coarse + 1 || f_table.dim() != bank_->dim)
        throw std::invalid_argument("assemble_shifted: convolution table does not match grid");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("assemble_shifted: sigma must be finite and nonnegative");

    const Eigen::Index d = bank_->dim;
    const long m = bank_->grid.n_coarse;
    const Eigen::VectorXd x0s = op_->to_spectral(x0);
    mean_.resize(m + 1, d);
    mean_.row(0) = x0s.transpose();
    for (long j = 1; j <= m; ++j) {
        const double* e = exp_table.row(j);
        const double* fv = f_table.entry(0, j);
        for (Eigen::Index k = 0; k < d; ++k) mean_(j, k) = e[k] * x0s[k] + fv[k];
    }
}

Eigen::VectorXd ShiftedSamples::state(long i, long j) const {
    Eigen::VectorXd z(dim());
    spectral(i, j, z);
    return op_->from_spectral(z);
}

} // namespace kolmo
