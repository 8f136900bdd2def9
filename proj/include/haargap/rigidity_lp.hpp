#ifndef HAARGAP_RIGIDITY_LP_HPP
#define HAARGAP_RIGIDITY_LP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entropy.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "root_system.hpp"
#include "simplex.hpp"
#include "supports.hpp"

namespace haargap {

enum class BoundMode { fraction_of_haar, theorem_14 };
enum class Lattice { generic, inner };

inline std::string to_string(BoundMode m)
{
    return m == BoundMode::fraction_of_haar ? "haar-fraction" : "thm14";
}

inline std::string to_string(Lattice l)
{
    return l == Lattice::generic ? "generic" : "inner";
}

/// The entropy game: a measure mu = sum_R w_R mu_R over admissible supports R
/// must have entropy at least LB(X) along every test direction X, while each
/// component contributes at most cap(R, X). Minimizing w_Delta bounds the Haar
/// component from below.
struct RigidityProblem {
    RootSystem rs;
    std::vector<SupportSet> supports;
    std::vector<CartanElement> test_directions;
    Rational beta = Rational(1, 2);
    BoundMode bound_mode = BoundMode::fraction_of_haar;
};

/// Variables are the support weights in the order of `supports`. Row 0 is the
/// probability constraint, row 1 + d the entropy constraint at direction d.
struct LPModel {
    LinearProgram program;
    std::vector<SupportSet> supports;
    std::vector<CartanElement> directions;
    std::vector<Rational> lower_bounds;
    std::size_t full_index = 0;
    Rational beta;
    BoundMode bound_mode = BoundMode::fraction_of_haar;
};

struct LPSolution {
    LpStatus status = LpStatus::infeasible;
    Rational optimum;
    std::vector<SupportSet> supports;
    std::vector<Rational> weights;
    std::vector<Rational> duals;
    std::vector<std::string> basis;
    std::size_t full_index = 0;

    const Rational& haar_weight() const { return weights.at(full_index); }
};

inline LPModel build_lp(const RigidityProblem& p)
{
    const auto& rs = p.rs;
    if (p.beta < 0 || p.beta > 1)
        throw InvalidArgument("entropy fraction beta must lie in [0, 1], got " + to_string(p.beta));
    if (p.test_directions.empty())
        throw InvalidArgument("at least one test direction is required");
    std::optional<std::size_t> full;
    for (std::size_t s = 0; s < p.supports.size(); ++s) {
        if (p.supports[s].mask.size() != rs.size())
            throw InvalidArgument("support '" + p.supports[s].label + "' does not match the root system");
        if (p.supports[s].is_full()) {
            if (full)
                throw InvalidArgument("the full root set Δ appears more than once among the supports");
            full = s;
        }
    }
    if (!full)
        throw InvalidArgument("the supports must include the full root set Δ");
    for (const auto& x : p.test_directions) {
        if (x.dim() != rs.n())
            throw InvalidArgument("test direction " + x.str() + " does not have " + std::to_string(rs.n()) +
                                  " coordinates");
        if (x.is_zero())
            throw InvalidArgument("test directions must be nonzero");
    }

    LPModel model;
    model.supports = p.supports;
    model.directions = p.test_directions;
    model.full_index = *full;
    model.beta = p.beta;
    model.bound_mode = p.bound_mode;
    auto& lp = model.program;
    for (const auto& s : p.supports)
        lp.variables.push_back("w[" + s.label + "]");
    lp.objective.assign(p.supports.size(), Rational(0));
    lp.objective[*full] = 1;
    lp.constraints.push_back({std::vector<Rational>(p.supports.size(), Rational(1)), Sense::equal, Rational(1), "mass"});

    for (const auto& x : p.test_directions) {
        const Rational lb = p.bound_mode == BoundMode::fraction_of_haar ? Rational(p.beta * haar_entropy(rs, x))
                                                                        : entropy_lower_bound(rs, x);
        model.lower_bounds.push_back(lb);
        // Only roots with alpha(X) > 0 contribute to any cap.
        std::vector<std::pair<std::size_t, Rational>> expanding;
        for (std::size_t a = 0; a < rs.size(); ++a)
            if (auto v = evaluate_root(rs, a, x); v > 0)
                expanding.emplace_back(a, rs.multiplicity(a) * v);
        LinearConstraint row{std::vector<Rational>(p.supports.size()), Sense::greater_equal, lb, "entropy@" + x.str()};
        for (std::size_t s = 0; s < p.supports.size(); ++s)
            for (const auto& [a, v] : expanding)
                if (p.supports[s].mask.test(a))
                    row.coeffs[s] += v;
        lp.constraints.push_back(std::move(row));
    }
    return model;
}

inline LPSolution solve_lp(const LPModel& m)
{
    const auto r = solve_simplex(m.program);
    LPSolution out;
    out.status = r.status;
    out.supports = m.supports;
    out.full_index = m.full_index;
    if (r.status != LpStatus::optimal)
        return out;
    out.optimum = r.optimum;
    out.weights = r.x;
    out.duals = r.duals;
    out.basis = r.basis;
    return out;
}

/// Largest divisor of n smaller than n.
inline int largest_proper_divisor(int n)
{
    for (int d = n / 2; d > 1; --d)
        if (n % d == 0)
            return d;
    return 1;
}

/// Largest n accepted by the generic lattice mode (|positive roots| <= 15).
inline constexpr int kMaxGenericN = 6;

/// Admissible supports for a lattice class: every symmetric closed set for a
/// generic lattice, equal-size block partitions for a lattice of inner type.
inline std::vector<SupportSet> admissible_supports(int n, Lattice lattice)
{
    if (lattice == Lattice::generic) {
        if (n > kMaxGenericN)
            throw CapacityError("generic lattice mode supports n <= " + std::to_string(kMaxGenericN) + "; got n=" +
                                std::to_string(n));
        return enumerate_symmetric_closed(build_type_a(n));
    }
    return enumerate_block_partitions(n);
}

/// Largest Weyl orbit accepted as a test-direction set (8!).
inline constexpr std::size_t kMaxTestDirections = 40320;

/// Problem for SL_n with the given lattice class. Test directions default to
/// the Weyl orbit of diag(n-1, -1, ..., -1).
inline RigidityProblem make_problem(int n, Lattice lattice, const Rational& beta,
                                    BoundMode mode = BoundMode::fraction_of_haar,
                                    std::optional<CartanElement> direction = std::nullopt)
{
    if (n < 3)
        throw InvalidArgument("the rigidity LP needs n >= 3, got n=" + std::to_string(n));
    auto rs = build_type_a(n);
    auto x = direction ? *direction : CartanElement::extremely_irregular(static_cast<std::size_t>(n));
    if (x.dim() != static_cast<std::size_t>(n))
        throw InvalidArgument("direction " + x.str() + " does not have " + std::to_string(n) + " coordinates");
    if (weyl_orbit_size(x) > kMaxTestDirections)
        throw CapacityError("Weyl orbit of " + x.str() + " has " + weyl_orbit_size(x).str() +
                            " elements; the limit is " + std::to_string(kMaxTestDirections));
    return RigidityProblem{std::move(rs), admissible_supports(n, lattice), weyl_orbit(x), beta, mode};
}

inline Rational min_haar_weight(int n, Lattice lattice, const Rational& beta,
                                BoundMode mode = BoundMode::fraction_of_haar)
{
    const auto model = build_lp(make_problem(n, lattice, beta, mode));
    const auto sol = solve_lp(model);
    // w_Delta = 1 meets every constraint since LB(X) <= haar(X) = cap(Delta, X).
    if (sol.status != LpStatus::optimal)
        throw std::logic_error("rigidity LP reported " + to_string(sol.status) + " for beta=" + to_string(beta));
    return sol.optimum;
}

/// Closed-form lower bounds known by hand: (3/2)(beta - 1/3) for generic SL_3,
/// 2(beta - 1/2) for generic SL_4, and ((n+1)/2 - t)/(n - t) for inner type at
/// beta = 1/2 with t the largest proper divisor. Anything else is nullopt.
inline std::optional<Rational> closed_form_min_haar_weight(int n, Lattice lattice, const Rational& beta)
{
    if (lattice == Lattice::inner) {
        if (n < 3 || beta != Rational(1, 2))
            return std::nullopt;
        const int t = largest_proper_divisor(n);
        return (Rational(n + 1, 2) - t) / (n - t);
    }
    if (n == 3 && beta >= Rational(1, 3) && beta <= 1)
        return Rational(3, 2) * (beta - Rational(1, 3));
    if (n == 4 && beta >= Rational(1, 2) && beta <= 1)
        return 2 * (beta - Rational(1, 2));
    return std::nullopt;
}

struct VertexEntry {
    std::string label;
    SupportKind kind;
    Rational weight;
};

/// Supports carrying positive weight at the vertex returned by the solver.
/// Only this vertex is reported; other optimal vertices may exist.
struct VertexReport {
    Rational haar_weight;
    std::vector<VertexEntry> entries;
};

inline VertexReport extremal_vertex_report(const LPSolution& s)
{
    if (s.status != LpStatus::optimal)
        throw InvalidArgument("no vertex to report: LP status is " + to_string(s.status));
    VertexReport out{s.haar_weight(), {}};
    for (std::size_t k = 0; k < s.supports.size(); ++k)
        if (s.weights[k] > 0)
            out.entries.push_back({s.supports[k].label, s.supports[k].kind, s.weights[k]});
    return out;
}

} // namespace haargap

#endif // HAARGAP_RIGIDITY_LP_HPP
