#ifndef HAARGAP_VALIDATION_SUITE_HPP
#define HAARGAP_VALIDATION_SUITE_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cotlar_stein.hpp"
#include "oscillatory.hpp"
#include "validation_config.hpp"

namespace haargap {

struct FamilyCase {
    std::uint64_t seed = 0;
    std::size_t members = 0;
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    CotlarSteinCheck check;
};

struct ValidationReport {
    std::uint64_t seed = 0;
    std::vector<FamilyCase> random_families;
    CotlarSteinCheck single_member;
    bool single_member_equal = false;
    CotlarSteinCheck projectors;
    bool projectors_equal = false;
    OscillatoryDecay non_stationary;
    OscillatoryDecay stationary;
    bool non_stationary_ok = false;
    bool stationary_ok = false;

    bool random_families_ok() const
    {
        for (const auto& c : random_families)
            if (!c.check.holds)
                return false;
        return !random_families.empty();
    }

    bool passed() const
    {
        return random_families_ok() && single_member.holds && single_member_equal && projectors.holds &&
               projectors_equal && non_stationary_ok && stationary_ok;
    }
};

inline constexpr std::uint64_t kDefaultValidationSeed = 20080501;
inline constexpr std::size_t kRandomFamilyCount = 50;
inline constexpr std::size_t kMaxFamilyMembers = 12;
inline constexpr Eigen::Index kMaxFamilyDim = 16;

/// Shapes and seeds of the random corpus, all derived from one base seed.
inline std::vector<FamilyCase> random_family_corpus(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> members(1, kMaxFamilyMembers);
    std::uniform_int_distribution<Eigen::Index> dim(1, kMaxFamilyDim);
    std::vector<FamilyCase> out;
    for (std::size_t k = 0; k < kRandomFamilyCount; ++k) {
        FamilyCase c;
        c.seed = rng();
        c.members = members(rng);
        c.rows = dim(rng);
        c.cols = dim(rng);
        out.push_back(c);
    }
    return out;
}

inline bool close_relative(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// hbar in [1e-3, 1e-1], smooth bump amplitude on [-1, 1].
inline OscillatoryProblem bump_problem(std::function<double(double)> phase)
{
    return OscillatoryProblem{std::move(phase), smooth_bump, -1.0, 1.0, log_spaced_decreasing(1e-3, 1e-1, 9), 131073};
}

inline ValidationReport run_validation_suite(std::uint64_t seed = kDefaultValidationSeed,
                                             const ValidationTolerances& tol = kTolerances)
{
    ValidationReport r;
    r.seed = seed;
    for (auto c : random_family_corpus(seed)) {
        c.check = cotlar_bound_check(random_gaussian_family(c.seed, c.members, c.rows, c.cols), tol);
        r.random_families.push_back(c);
    }

    auto single = random_gaussian_family(seed ^ 0x5eedULL, 1, 7, 5);
    r.single_member = cotlar_bound_check(single, tol);
    const double norm = operator_norm(single.members.front(), tol);
    r.single_member_equal = close_relative(r.single_member.r1, norm, tol.equality) &&
                            close_relative(r.single_member.r2, norm, tol.equality) &&
                            close_relative(r.single_member.lhs, norm, tol.equality);

    r.projectors = cotlar_bound_check(orthogonal_projector_family({2, 3, 1, 4}), tol);
    r.projectors_equal = close_relative(r.projectors.r1, 1.0, tol.equality) &&
                         close_relative(r.projectors.r2, 1.0, tol.equality) &&
                         close_relative(r.projectors.lhs, 1.0, tol.equality);

    r.non_stationary = oscillatory_decay(bump_problem([](double x) { return x; }), tol);
    r.stationary = oscillatory_decay(bump_problem([](double x) { return 0.5 * x * x; }), tol);
    r.non_stationary_ok = r.non_stationary.fitted_slope && *r.non_stationary.fitted_slope >= tol.slope_floor;
    r.stationary_ok = r.stationary.fitted_slope &&
                      std::abs(*r.stationary.fitted_slope - tol.stationary_slope) <= tol.stationary_window;
    return r;
}

} // namespace haargap

#endif // HAARGAP_VALIDATION_SUITE_HPP
