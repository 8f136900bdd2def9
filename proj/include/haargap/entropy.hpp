#ifndef HAARGAP_ENTROPY_HPP
#define HAARGAP_ENTROPY_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "root_system.hpp"
#include "supports.hpp"

namespace haargap {

/// Positive Lyapunov exponents alpha(X) of the flow e^{tX}, for dominant X,
/// each repeated m_alpha times and sorted non-decreasing.
struct LyapunovSpectrum {
    std::vector<Rational> values;
    Rational chi_max = 0;
    CartanElement direction;
};

/// Split of the positive roots at 1/(2K): slow roots expand strictly slower.
struct FastSlowSplit {
    Rational threshold;
    std::vector<std::size_t> slow_indices; ///< root indices, in spectrum order
    std::vector<std::size_t> fast_indices;
    std::size_t slow_dimension = 0; ///< J0, counted with multiplicity
    std::size_t total_dimension = 0; ///< J
};

struct DispersiveQuery {
    Rational K;
    CartanElement direction;
};

namespace detail {

inline void require_dimension(const RootSystem& rs, const CartanElement& x)
{
    if (x.dim() != rs.n())
        throw InvalidArgument("dimension mismatch: root system has n=" + std::to_string(rs.n()) +
                              ", Cartan element has " + std::to_string(x.dim()) + " coordinates");
}

/// Positive root indices of rs sorted by their value at dominant x, stable on index.
inline std::vector<std::size_t> positive_roots_by_value(const RootSystem& rs, const CartanElement& dominant)
{
    const auto pos = rs.positive_roots();
    std::vector<std::pair<Rational, std::size_t>> keyed;
    keyed.reserve(pos.size());
    for (auto a : pos)
        keyed.emplace_back(evaluate_root(rs, a, dominant), a);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<std::size_t> out;
    out.reserve(keyed.size());
    for (const auto& kv : keyed)
        out.push_back(kv.second);
    return out;
}

inline void require_positive_k(const Rational& k)
{
    if (k <= 0)
        throw InvalidArgument("the constant K must be positive, got " + to_string(k));
}

} // namespace detail

inline LyapunovSpectrum lyapunov_spectrum(const RootSystem& rs, const CartanElement& x)
{
    detail::require_dimension(rs, x);
    auto dom = dominant_representative(x);
    LyapunovSpectrum out{{}, Rational(0), dom};
    for (auto a : detail::positive_roots_by_value(rs, dom)) {
        const auto v = evaluate_root(rs, a, dom);
        for (int m = 0; m < rs.multiplicity(a); ++m)
            out.values.push_back(v);
    }
    if (!out.values.empty())
        out.chi_max = out.values.back();
    return out;
}

/// Entropy of Haar measure under e^X: the sum over all roots of m_alpha * alpha(X)^+.
inline Rational haar_entropy(const RootSystem& rs, const CartanElement& x)
{
    detail::require_dimension(rs, x);
    Rational total = 0;
    for (std::size_t a = 0; a < rs.size(); ++a)
        total += rs.multiplicity(a) * positive_part(evaluate_root(rs, a, x));
    return total;
}

/// Lower bound on h_KS(mu, X) for semiclassical measures: every positive
/// exponent at least half the top one contributes its excess over alpha_max/2.
/// X is replaced by its dominant representative first.
inline Rational entropy_lower_bound(const RootSystem& rs, const CartanElement& x)
{
    const auto spec = lyapunov_spectrum(rs, x);
    const Rational half_max = spec.chi_max / 2;
    Rational total = 0;
    for (const auto& v : spec.values)
        if (v >= half_max)
            total += v - half_max;
    return total;
}

/// The conjectured stronger bound: half the Haar entropy.
inline Rational conjectured_bound(const RootSystem& rs, const CartanElement& x)
{
    return haar_entropy(rs, x) / 2;
}

/// Entropy cap of an ergodic component with support R under e^X, obtained
/// with s_alpha = 1 on R and 0 elsewhere. X is used as given (not dominantized).
inline Rational component_entropy_cap(const RootSystem& rs, const SupportSet& r, const CartanElement& x)
{
    detail::require_dimension(rs, x);
    if (r.mask.size() != rs.size())
        throw InvalidArgument("support mask has " + std::to_string(r.mask.size()) + " bits, root system has " +
                              std::to_string(rs.size()) + " roots");
    Rational total = 0;
    for (std::size_t a = r.mask.find_first(); a != RootMask::npos; a = r.mask.find_next(a))
        total += rs.multiplicity(a) * positive_part(evaluate_root(rs, a, x));
    return total;
}

inline FastSlowSplit fast_slow_split(const RootSystem& rs, const CartanElement& x, const Rational& k)
{
    detail::require_positive_k(k);
    detail::require_dimension(rs, x);
    const auto dom = dominant_representative(x);
    FastSlowSplit out{Rational(1) / (2 * k), {}, {}, 0, rs.positive_dimension()};
    for (auto a : detail::positive_roots_by_value(rs, dom)) {
        if (evaluate_root(rs, a, dom) < out.threshold) {
            out.slow_indices.push_back(a);
            out.slow_dimension += static_cast<std::size_t>(rs.multiplicity(a));
        } else {
            out.fast_indices.push_back(a);
        }
    }
    return out;
}

/// Exponent E in the dispersive estimate ||P|| <= C hbar^{E - c eps}: each fast
/// exponent chi contributes K*chi - 1/2 (with multiplicity). C, c and eps are
/// not modelled.
inline Rational dispersive_exponent(const DispersiveQuery& q, const RootSystem& rs)
{
    const auto split = fast_slow_split(rs, q.direction, q.K);
    const auto dom = dominant_representative(q.direction);
    Rational total = 0;
    for (auto a : split.fast_indices)
        total += rs.multiplicity(a) * (q.K * evaluate_root(rs, a, dom) - Rational(1, 2));
    return total;
}

} // namespace haargap

#endif // HAARGAP_ENTROPY_HPP
