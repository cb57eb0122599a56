#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace kolmo {

// Two nested uniform grids on [0, T]: a fine step for path simulation and a
// coarse step for the quadrature of the weight integrals. The coarse step
// must be an integer multiple of the fine one and divide T an integer number
// of times.
struct TimeGrid {
    double horizon = 0.0;
    double dt_fine = 0.0;
    double dt_coarse = 0.0;
    long n_fine = 0;    // T / dt_fine
    long n_coarse = 0;  // T / dt_coarse
    long ratio = 0;     // dt_coarse / dt_fine

    static TimeGrid create(double horizon, double dt_fine, double dt_coarse) {
        if (!(horizon > 0.0) || !std::isfinite(horizon))
            throw std::invalid_argument("TimeGrid: horizon must be finite and positive");
        if (!(dt_fine > 0.0) || !(dt_coarse > 0.0))
            throw std::invalid_argument("TimeGrid: steps must be positive");
        if (dt_fine > dt_coarse)
            throw std::invalid_argument("TimeGrid: fine step must not exceed coarse step");
        TimeGrid g;
        g.horizon = horizon;
        g.dt_fine = dt_fine;
        g.dt_coarse = dt_coarse;
        g.ratio = round_ratio(dt_coarse, dt_fine, "coarse step must be an integer multiple of the fine step");
        g.n_coarse = round_ratio(horizon, dt_coarse, "horizon must be an integer multiple of the coarse step");
        g.n_fine = g.n_coarse * g.ratio;
        return g;
    }

    double fine_time(long j) const { return static_cast<double>(j) * dt_fine; }
    double coarse_time(long j) const { return static_cast<double>(j) * dt_coarse; }

    bool same_coarse(const TimeGrid& other) const {
        return n_coarse == other.n_coarse && horizon == other.horizon && dt_coarse == other.dt_coarse;
    }

    bool operator==(const TimeGrid& other) const {
        return horizon == other.horizon && dt_fine == other.dt_fine && dt_coarse == other.dt_coarse;
    }

private:
    static long round_ratio(double num, double den, const char* what) {
        const double r = num / den;
        const double rounded = std::round(r);
        if (rounded < 1.0 || std::abs(r - rounded) > 1e-9 * std::max(1.0, std::abs(r)))
            throw std::invalid_argument(std::string("TimeGrid: ") + what);
        return static_cast<long>(rounded);
    }
};

} // namespace kolmo
