#ifndef HAARGAP_OSCILLATORY_HPP
#define HAARGAP_OSCILLATORY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "validation_config.hpp"

namespace haargap {

/// I_hbar = integral over [lower, upper] of exp(i S(x)/hbar) a(x) dx, for each hbar.
struct OscillatoryProblem {
    std::function<double(double)> phase;
    std::function<double(double)> amplitude;
    double lower = -1.0;
    double upper = 1.0;
    std::vector<double> hbar_values;  ///< positive, strictly decreasing
    std::size_t grid_size = 131073;   ///< odd, for composite Simpson
};

struct OscillatoryDecay {
    std::vector<double> hbar;
    std::vector<double> magnitudes;
    /// Least-squares slope of log|I| against log hbar; empty if some |I| is zero.
    std::optional<double> fitted_slope;
    /// min |S'| where a != 0 (finite differences on the grid).
    double min_phase_derivative = 0.0;
    double points_per_period = 0.0;
};

/// exp(-1/(1-x^2)) on (-1, 1), zero outside.
inline double smooth_bump(double x)
{
    const double t = 1.0 - x * x;
    return t > 0.0 ? std::exp(-1.0 / t) : 0.0;
}

/// `count` values from `hi` down to `lo`, evenly spaced in log.
inline std::vector<double> log_spaced_decreasing(double lo, double hi, std::size_t count)
{
    std::vector<double> out;
    if (count == 1) {
        out.push_back(hi);
        return out;
    }
    const double a = std::log(hi), b = std::log(lo);
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1)));
    return out;
}

/// Ordinary least-squares slope of y against x.
inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline OscillatoryDecay oscillatory_decay(const OscillatoryProblem& p, const ValidationTolerances& tol = kTolerances)
{
    if (!p.phase || !p.amplitude)
        throw InvalidArgument("oscillatory problem needs both a phase and an amplitude");
    if (!(p.upper > p.lower))
        throw InvalidArgument("oscillatory problem needs lower < upper");
    if (p.grid_size < 3 || p.grid_size % 2 == 0)
        throw InvalidArgument("composite Simpson needs an odd grid size >= 3, got " + std::to_string(p.grid_size));
    if (p.hbar_values.size() < 2)
        throw InvalidArgument("at least two hbar values are needed to fit a slope");
    for (std::size_t k = 0; k < p.hbar_values.size(); ++k) {
        if (!(p.hbar_values[k] > 0.0))
            throw InvalidArgument("hbar values must be positive");
        if (k && !(p.hbar_values[k] < p.hbar_values[k - 1]))
            throw InvalidArgument("hbar values must be strictly decreasing");
    }

    const std::size_t n = p.grid_size;
    const double dx = (p.upper - p.lower) / static_cast<double>(n - 1);
    std::vector<double> xs(n), s(n), a(n);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = p.lower + dx * static_cast<double>(k);
        s[k] = p.phase(xs[k]);
        a[k] = p.amplitude(xs[k]);
    }
    const double scale = std::max(1.0, *std::max_element(a.begin(), a.end(), [](double l, double r) {
        return std::abs(l) < std::abs(r);
    }));
    if (std::abs(a.front()) > 1e-12 * scale || std::abs(a.back()) > 1e-12 * scale)
        throw InvalidArgument("amplitude must vanish at both interval endpoints");

    OscillatoryDecay out;
    double max_slope = 0.0;
    out.min_phase_derivative = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const double ds = k == 0       ? (s[1] - s[0]) / dx
                          : k == n - 1 ? (s[n - 1] - s[n - 2]) / dx
                                       : (s[k + 1] - s[k - 1]) / (2.0 * dx);
        max_slope = std::max(max_slope, std::abs(ds));
        if (a[k] != 0.0)
            out.min_phase_derivative = std::min(out.min_phase_derivative, std::abs(ds));
    }
    if (!std::isfinite(out.min_phase_derivative))
        out.min_phase_derivative = 0.0;

    // Shortest local period of exp(iS/hbar) is 2 pi hbar / max|S'|.
    const double hbar_min = p.hbar_values.back();
    out.points_per_period = max_slope > 0.0 ? 2.0 * std::numbers::pi * hbar_min / max_slope / dx
                                            : std::numeric_limits<double>::infinity();
    if (out.points_per_period < tol.points_per_period)
        throw ResolutionError("grid resolves the fastest oscillation with " + std::to_string(out.points_per_period) +
                              " points per period; at least " + std::to_string(tol.points_per_period) +
                              " are required");

    bool any_zero = false;
    std::vector<double> log_h, log_i;
    for (const double h : p.hbar_values) {
        std::complex<double> sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (a[k] == 0.0)
                continue;
            const double w = (k == 0 || k == n - 1) ? 1.0 : (k % 2 ? 4.0 : 2.0);
            sum += w * a[k] * std::polar(1.0, s[k] / h);
        }
        const double mag = std::abs(sum * (dx / 3.0));
        out.hbar.push_back(h);
        out.magnitudes.push_back(mag);
        if (mag == 0.0)
            any_zero = true;
        else {
            log_h.push_back(std::log(h));
            log_i.push_back(std::log(mag));
        }
    }
    if (!any_zero)
        out.fitted_slope = least_squares_slope(log_h, log_i);
    return out;
}

} // namespace haargap

#endif // HAARGAP_OSCILLATORY_HPP
