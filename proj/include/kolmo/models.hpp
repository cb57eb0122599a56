#pragma once

#include <Eigen/Dense>
#include <string>

#include "kolmo/linear_operator.hpp"

namespace kolmo {

// Drift zoo. All drifts are time independent; the t argument is kept for
// interface generality. Kinds map 1:1 to the string identifiers in the config
// format (see config.hpp).
struct DriftSpec {
    enum class Kind { Zero, LinearScale, CubicBounded, QuadraticSimple, Dyadic };

    Kind kind = Kind::Zero;
    Eigen::Index d = 0;
    double epsilon = 0.0;        // LinearScale
    double b0 = 0.0;             // CubicBounded / QuadraticSimple
    Eigen::VectorXd ybar;        // CubicBounded / QuadraticSimple
    double lambda = 0.0;         // Dyadic
    double f1 = 0.0;             // Dyadic forcing on the first mode
    Eigen::VectorXd dyadic_k;    // k_i = lambda^{2i}, precomputed

    static DriftSpec zero(Eigen::Index d);
    static DriftSpec linear_scale(Eigen::Index d, double epsilon);
    static DriftSpec cubic_bounded(Eigen::Index d, double b0, Eigen::VectorXd ybar);
    static DriftSpec quadratic_simple(Eigen::Index d, double b0, Eigen::VectorXd ybar);
    static DriftSpec dyadic(Eigen::Index d, double lambda, double f1);

    bool is_zero() const { return kind == Kind::Zero || (kind == Kind::LinearScale && epsilon == 0.0); }
    std::string kind_name() const;
};

void drift_eval(const DriftSpec& spec, double t, const Eigen::Ref<const Eigen::VectorXd>& x,
                Eigen::Ref<Eigen::VectorXd> out);
Eigen::VectorXd drift_eval(const DriftSpec& spec, double t, const Eigen::Ref<const Eigen::VectorXd>& x);

// Observables phi. IndicatorNormBall follows the closed convention
// ||x||_2 >= radius (the boundary counts); complement flips to ||x|| < radius.
// IndicatorCell uses half-open cells [x_lo, x_hi) x [y_lo, y_hi).
struct ObservableSpec {
    enum class Kind { IndicatorNormBall, CoordinateMean, Coordinate, IndicatorCell };

    Kind kind = Kind::CoordinateMean;
    double radius = 1.0;
    bool complement = false;
    Eigen::Index index = 0;      // Coordinate
    Eigen::Index axis_p = 0, axis_q = 1;  // IndicatorCell
    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;

    static ObservableSpec indicator_norm_ball(double radius, bool complement = false);
    static ObservableSpec coordinate_mean();
    static ObservableSpec coordinate(Eigen::Index i);
    static ObservableSpec indicator_cell(Eigen::Index p, Eigen::Index q,
                                         double x_lo, double x_hi, double y_lo, double y_hi);

    // Index bounds can only be checked once the dimension is known.
    void validate_for_dim(Eigen::Index d) const;
    std::string kind_name() const;
};

double observable_eval(const ObservableSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x);

// Diagonal spectra used by the experiments: the 1-d spectral Laplacian
// a_k = -k^2 and the dyadic ladder a_i = -lambda^{2i}.
enum class SpectrumKind { Laplacian1D, DyadicSpectrum };

LinearOperator build_spectrum(SpectrumKind kind, Eigen::Index d, double lambda = 0.0);

// A model is an operator, a noise amplitude and a drift over one dimension.
struct ModelSpec {
    LinearOperator a;
    NoiseSpec noise;
    DriftSpec drift;

    ModelSpec(LinearOperator a_, NoiseSpec noise_, DriftSpec drift_);
    Eigen::Index dim() const { return a.dim(); }
};

} // namespace kolmo
