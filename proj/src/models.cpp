#include "kolmo/models.hpp"

#include <cmath>
#include <stdexcept>

namespace kolmo {

namespace {

void require_dim(Eigen::Index d) {
    if (d < 1) throw std::invalid_argument("model dimension must be >= 1");
}

void require_finite(const Eigen::Ref<const Eigen::VectorXd>& x) {
    if (!x.allFinite()) throw std::invalid_argument("drift/observable input has non-finite components");
}

} // namespace

DriftSpec DriftSpec::zero(Eigen::Index d) {
    require_dim(d);
    DriftSpec s;
    s.kind = Kind::Zero;
    s.d = d;
    return s;
}

DriftSpec DriftSpec::linear_scale(Eigen::Index d, double epsilon) {
    require_dim(d);
    if (!std::isfinite(epsilon)) throw std::invalid_argument("linear_scale: epsilon must be finite");
    DriftSpec s;
    s.kind = Kind::LinearScale;
    s.d = d;
    s.epsilon = epsilon;
    return s;
}

DriftSpec DriftSpec::cubic_bounded(Eigen::Index d, double b0, Eigen::VectorXd ybar) {
    require_dim(d);
    if (ybar.size() != d) throw std::invalid_argument("cubic_bounded: ybar must have length d");
    if (!(b0 > 0.0)) throw std::invalid_argument("cubic_bounded: b0 must be positive");
    if (ybar.cwiseAbs().maxCoeff() == 0.0)
        throw std::invalid_argument("cubic_bounded: ybar must be nonzero (denominator positivity)");
    DriftSpec s;
    s.kind = Kind::CubicBounded;
    s.d = d;
    s.b0 = b0;
    s.ybar = std::move(ybar);
    return s;
}

DriftSpec DriftSpec::quadratic_simple(Eigen::Index d, double b0, Eigen::VectorXd ybar) {
    require_dim(d);
    if (ybar.size() != d) throw std::invalid_argument("quadratic_simple: ybar must have length d");
    if (!std::isfinite(b0)) throw std::invalid_argument("quadratic_simple: b0 must be finite");
    DriftSpec s;
    s.kind = Kind::QuadraticSimple;
    s.d = d;
    s.b0 = b0;
    s.ybar = std::move(ybar);
    return s;
}

DriftSpec DriftSpec::dyadic(Eigen::Index d, double lambda, double f1) {
    require_dim(d);
    if (!(lambda > 1.0)) throw std::invalid_argument("dyadic: lambda must be > 1");
    if (!std::isfinite(f1)) throw std::invalid_argument("dyadic: F1 must be finite");
    DriftSpec s;
    s.kind = Kind::Dyadic;
    s.d = d;
    s.lambda = lambda;
    s.f1 = f1;
    s.dyadic_k.resize(d);
    for (Eigen::Index i = 0; i < d; ++i)
        s.dyadic_k[i] = std::pow(lambda, 2.0 * static_cast<double>(i + 1));
    return s;
}

std::string DriftSpec::kind_name() const {
    switch (kind) {
        case Kind::Zero: return "zero";
        case Kind::LinearScale: return "linear_scale";
        case Kind::CubicBounded: return "cubic_bounded";
        case Kind::QuadraticSimple: return "quadratic_simple";
        case Kind::Dyadic: return "dyadic";
    }
    return "?";
}

void drift_eval(const DriftSpec& spec, double /*t*/, const Eigen::Ref<const Eigen::VectorXd>& x,
                Eigen::Ref<Eigen::VectorXd> out) {
    if (x.size() != spec.d || out.size() != spec.d)
        throw std::invalid_argument("drift_eval: dimension mismatch");
    require_finite(x);
    switch (spec.kind) {
        case DriftSpec::Kind::Zero:
            out.setZero();
            return;
        case DriftSpec::Kind::LinearScale:
            out = spec.epsilon * x;
            return;
        case DriftSpec::Kind::CubicBounded: {
            const double cap = spec.b0 * spec.ybar.cwiseAbs().maxCoeff();
            const double denom = cap + std::pow((spec.ybar - x).cwiseAbs().maxCoeff(), 3.0);
            for (Eigen::Index i = 0; i < spec.d; ++i) {
                const double r = spec.ybar[i] - x[i];
                out[i] = cap * r * std::abs(r) * std::abs(r) / denom;
            }
            return;
        }
        case DriftSpec::Kind::QuadraticSimple:
            for (Eigen::Index i = 0; i < spec.d; ++i) {
                const double r = spec.ybar[i] - x[i];
                out[i] = spec.b0 * r * std::abs(r);
            }
            return;
        case DriftSpec::Kind::Dyadic: {
            const Eigen::VectorXd& k = spec.dyadic_k;
            const Eigen::Index d = spec.d;
            if (d == 1) {
                out[0] = spec.f1;  // no second mode to couple with
                return;
            }
            out[0] = spec.f1 - k[0] * x[0] * x[1];
            for (Eigen::Index i = 1; i + 1 < d; ++i)
                out[i] = k[i - 1] * x[i - 1] * x[i - 1] - k[i] * x[i] * x[i + 1];
            out[d - 1] = k[d - 2] * x[d - 2] * x[d - 2];
            return;
        }
    }
}

Eigen::VectorXd drift_eval(const DriftSpec& spec, double t, const Eigen::Ref<const Eigen::VectorXd>& x) {
    Eigen::VectorXd out(spec.d);
    drift_eval(spec, t, x, out);
    return out;
}

ObservableSpec ObservableSpec::indicator_norm_ball(double radius, bool complement) {
    if (!(radius > 0.0)) throw std::invalid_argument("indicator_norm_ball: radius must be positive");
    ObservableSpec s;
    s.kind = Kind::IndicatorNormBall;
    s.radius = radius;
    s.complement = complement;
    return s;
}

ObservableSpec ObservableSpec::coordinate_mean() {
    ObservableSpec s;
    s.kind = Kind::CoordinateMean;
    return s;
}

ObservableSpec ObservableSpec::coordinate(Eigen::Index i) {
    if (i < 0) throw std::invalid_argument("coordinate: index must be nonnegative");
    ObservableSpec s;
    s.kind = Kind::Coordinate;
    s.index = i;
    return s;
}

ObservableSpec ObservableSpec::indicator_cell(Eigen::Index p, Eigen::Index q,
                                              double x_lo, double x_hi, double y_lo, double y_hi) {
    if (p < 0 || q < 0) throw std::invalid_argument("indicator_cell: axes must be nonnegative");
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw std::invalid_argument("indicator_cell: rectangle is empty");
    ObservableSpec s;
    s.kind = Kind::IndicatorCell;
    s.axis_p = p;
    s.axis_q = q;
    s.x_lo = x_lo;
    s.x_hi = x_hi;
    s.y_lo = y_lo;
    s.y_hi = y_hi;
    return s;
}

void ObservableSpec::validate_for_dim(Eigen::Index d) const {
    switch (kind) {
        case Kind::Coordinate:
            if (index >= d) throw std::invalid_argument("observable: coordinate index out of range");
            break;
        case Kind::IndicatorCell:
            if (axis_p >= d || axis_q >= d)
                throw std::invalid_argument("observable: cell axes out of range");
            break;
        default:
            break;
    }
}

std::string ObservableSpec::kind_name() const {
    switch (kind) {
        case Kind::IndicatorNormBall: return "indicator_norm_ball";
        case Kind::CoordinateMean: return "coordinate_mean";
        case Kind::Coordinate: return "coordinate";
        case Kind::IndicatorCell: return "indicator_cell";
    }
    return "?";
}

double observable_eval(const ObservableSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x) {
    require_finite(x);
    switch (spec.kind) {
        case ObservableSpec::Kind::IndicatorNormBall: {
            const bool outside = x.norm() >= spec.radius;
            return (outside != spec.complement) ? 1.0 : 0.0;
        }
        case ObservableSpec::Kind::CoordinateMean:
            return x.mean();
        case ObservableSpec::Kind::Coordinate:
            spec.validate_for_dim(x.size());
            return x[spec.index];
        case ObservableSpec::Kind::IndicatorCell: {
            spec.validate_for_dim(x.size());
            const double px = x[spec.axis_p];
            const double py = x[spec.axis_q];
            return (px >= spec.x_lo && px < spec.x_hi && py >= spec.y_lo && py < spec.y_hi) ? 1.0 : 0.0;
        }
    }
    return 0.0;
}

LinearOperator build_spectrum(SpectrumKind kind, Eigen::Index d, double lambda) {
    require_dim(d);
    Eigen::VectorXd a(d);
    switch (kind) {
        case SpectrumKind::Laplacian1D:
            for (Eigen::Index k = 0; k < d; ++k) {
                const double kk = static_cast<double>(k + 1);
                a[k] = -kk * kk;
            }
            break;
        case SpectrumKind::DyadicSpectrum:
            if (!(lambda > 1.0)) throw std::invalid_argument("dyadic spectrum: lambda must be > 1");
            for (Eigen::Index k = 0; k < d; ++k)
                a[k] = -std::pow(lambda, 2.0 * static_cast<double>(k + 1));
            break;
    }
    return LinearOperator::diagonal(std::move(a));
}

ModelSpec::ModelSpec(LinearOperator a_, NoiseSpec noise_, DriftSpec drift_)
    : a(std::move(a_)), noise(noise_), drift(std::move(drift_)) {
    if (drift.d != a.dim())
        throw std::invalid_argument("ModelSpec: drift dimension does not match operator dimension");
}

} // namespace kolmo
