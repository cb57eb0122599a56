#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace kolmo {

// Symmetric, strictly negative definite operator A. Two representations:
// a diagonal spectrum (the usual case; spectral Galerkin truncations are
// diagonal) or a dense symmetric matrix, which is eigendecomposed once at
// construction and handled through its spectrum afterwards. All downstream
// kernels (matrix exponentials, covariances) are functions of A and are
// evaluated entrywise on the spectrum, conjugated by the eigenbasis.
class LinearOperator {
public:
    static LinearOperator diagonal(Eigen::VectorXd spectrum) {
        if (spectrum.size() == 0)
            throw std::invalid_argument("LinearOperator: dimension must be positive");
        for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
            if (!std::isfinite(spectrum[k]) || !(spectrum[k] < 0.0))
                throw std::invalid_argument("LinearOperator: spectrum must be finite and strictly negative");
        }
        LinearOperator op;
        op.spectrum_ = std::move(spectrum);
        return op;
    }

    static LinearOperator dense_symmetric(const Eigen::MatrixXd& a) {
        if (a.rows() == 0 || a.rows() != a.cols())
            throw std::invalid_argument("LinearOperator: matrix must be square and nonempty");
        const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
        if (!a.allFinite() || (a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
            throw std::invalid_argument("LinearOperator: matrix must be finite and symmetric");
        // An exactly diagonal matrix keeps its entries verbatim so that
        // diagonal -> dense -> diagonal round-trips bit for bit.
        bool exactly_diagonal = true;
        for (Eigen::Index i = 0; i < a.rows() && exactly_diagonal; ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                if (i != j && a(i, j) != 0.0) { exactly_diagonal = false; break; }
        if (exactly_diagonal) return diagonal(a.diagonal());

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        if (es.info() != Eigen::Success)
            throw std::invalid_argument("LinearOperator: eigendecomposition failed (ill-formed operator)");
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
            if (!(es.eigenvalues()[k] < 0.0))
                throw std::invalid_argument("LinearOperator: operator must be strictly negative definite");
        LinearOperator op;
        op.spectrum_ = es.eigenvalues();
        op.basis_ = es.eigenvectors();
        op.has_basis_ = true;
        return op;
    }

    Eigen::Index dim() const { return spectrum_.size(); }
    bool is_diagonal() const { return !has_basis_; }
    const Eigen::VectorXd& spectrum() const { return spectrum_; }
    double max_abs_eigenvalue() const { return spectrum_.cwiseAbs().maxCoeff(); }

    // A as a dense matrix (exact diagonal reconstruction in the diagonal case).
    Eigen::MatrixXd dense() const {
        if (!has_basis_) return Eigen::MatrixXd(spectrum_.asDiagonal());
        return basis_ * spectrum_.asDiagonal() * basis_.transpose();
    }

    Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        if (!has_basis_) return spectrum_.cwiseProduct(x);
        return basis_ * spectrum_.cwiseProduct(basis_.transpose() * x);
    }

    // Change of basis between state coordinates and the spectral coordinates
    // all kernel evaluations live in. Identity for diagonal operators.
    Eigen::VectorXd to_spectral(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        if (!has_basis_) return x;
        return basis_.transpose() * x;
    }

    Eigen::VectorXd from_spectral(const Eigen::Ref<const Eigen::VectorXd>& z) const {
        if (!has_basis_) return z;
        return basis_ * z;
    }

    // Conjugates an entrywise spectral kernel back to state coordinates.
    Eigen::MatrixXd conjugate(const Eigen::Ref<const Eigen::VectorXd>& kernel_eigs) const {
        if (!has_basis_) return Eigen::MatrixXd(kernel_eigs.asDiagonal());
        return basis_ * kernel_eigs.asDiagonal() * basis_.transpose();
    }

    // nullptr when the spectral basis is the standard one.
    const Eigen::MatrixXd* basis_matrix() const { return has_basis_ ? &basis_ : nullptr; }

private:
    LinearOperator() = default;
    Eigen::VectorXd spectrum_;
    Eigen::MatrixXd basis_;
    bool has_basis_ = false;
};

// Additive noise specification: Q = sigma^2 * Identity. General Q is out of
// scope by design; commuting with A is what makes the spectral kernel
// formulas exact.
struct NoiseSpec {
    double sigma = 1.0;

    explicit NoiseSpec(double s) : sigma(s) {
        if (!std::isfinite(s) || s < 0.0)
            throw std::invalid_argument("NoiseSpec: sigma must be finite and nonnegative");
    }
};

} // namespace kolmo
