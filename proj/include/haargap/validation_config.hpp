#ifndef HAARGAP_VALIDATION_CONFIG_HPP
#define HAARGAP_VALIDATION_CONFIG_HPP

#include <cstddef>

namespace haargap {

/// Every floating-point tolerance used by the numerical validation suite.
struct ValidationTolerances {
    double norm_relative = 1e-10;      ///< power-iteration convergence on the Gram eigenvalue
    double bound_slack = 1e-8;         ///< Cotlar-Stein: lhs <= R * (1 + slack)
    double equality = 1e-9;            ///< degenerate Cotlar-Stein cases hold with equality
    double slope_floor = 2.0;          ///< non-stationary phase: decay at least hbar^2
    double stationary_slope = 0.5;     ///< stationary phase: decay like hbar^{1/2}
    double stationary_window = 0.1;
    double points_per_period = 20.0;   ///< quadrature resolution guard
    std::size_t max_power_iterations = 20000;
    std::size_t dense_fallback_dim = 32;
};

inline constexpr ValidationTolerances kTolerances{};

} // namespace haargap

#endif // HAARGAP_VALIDATION_CONFIG_HPP
