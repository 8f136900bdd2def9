#ifndef HAARGAP_SIMPLEX_HPP
#define HAARGAP_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace haargap {

enum class Sense { less_equal, greater_equal, equal };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Sense sense = Sense::greater_equal;
    Rational rhs;
    std::string name;
};

/// minimize objective . x  subject to the constraints and x >= 0.
struct LinearProgram {
    std::vector<std::string> variables;
    std::vector<Rational> objective;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

inline std::string to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

struct SimplexResult {
    LpStatus status = LpStatus::infeasible;
    Rational optimum;
    std::vector<Rational> x;          ///< one value per structural variable
    std::vector<Rational> duals;      ///< one multiplier per constraint, signs as in the original rows
    std::vector<std::string> basis;   ///< names of the basic columns at termination
    std::size_t pivots = 0;
};

namespace detail {

/// Revised simplex on the standard form [A | slack | artificial] x = b, b >= 0,
/// with an explicit dense basis inverse. Entering and leaving columns follow
/// Bland's smallest-index rule, so neither phase can cycle.
class ExactSimplex {
public:
    explicit ExactSimplex(const LinearProgram& lp) : lp_(lp)
    {
        const std::size_t nv = lp.variables.size();
        if (lp.objective.size() != nv)
            throw InvalidArgument("objective has " + std::to_string(lp.objective.size()) + " coefficients for " +
                                  std::to_string(nv) + " variables");
        m_ = lp.constraints.size();
        flipped_.assign(m_, false);
        rhs_.resize(m_);
        std::vector<Sense> senses(m_);
        for (std::size_t r = 0; r < m_; ++r) {
            const auto& row = lp.constraints[r];
            if (row.coeffs.size() != nv)
                throw InvalidArgument("constraint '" + row.name + "' has " + std::to_string(row.coeffs.size()) +
                                      " coefficients for " + std::to_string(nv) + " variables");
            senses[r] = row.sense;
            rhs_[r] = row.rhs;
            if (row.rhs < 0) {
                flipped_[r] = true;
                rhs_[r] = -row.rhs;
                if (row.sense == Sense::less_equal)
                    senses[r] = Sense::greater_equal;
                else if (row.sense == Sense::greater_equal)
                    senses[r] = Sense::less_equal;
            }
        }
        // Row r is multiplied by row_factor_[r] = +-lcm(denominators) so that
        // every stored coefficient is an integer; pricing then runs on integers.
        row_factor_.resize(m_);
        for (std::size_t r = 0; r < m_; ++r) {
            Integer den = common_denominator(lp.constraints[r].coeffs, lp.constraints[r].rhs);
            row_factor_[r] = flipped_[r] ? Integer(-den) : den;
            rhs_[r] *= den;
        }
        for (std::size_t j = 0; j < nv; ++j) {
            std::vector<Integer> col(m_);
            for (std::size_t r = 0; r < m_; ++r)
                col[r] = numerator_of(lp.constraints[r].coeffs[j] * row_factor_[r]);
            add_column(std::move(col), lp.variables[j], Kind::structural);
        }
        cost_scale_ = common_denominator(lp.objective, Rational(0));
        basis_.assign(m_, 0);
        for (std::size_t r = 0; r < m_; ++r) {
            if (senses[r] == Sense::equal)
                continue;
            std::vector<Integer> col(m_);
            col[r] = senses[r] == Sense::less_equal ? 1 : -1;
            const auto j = add_column(std::move(col), "slack[" + name_of_row(r) + "]", Kind::slack);
            if (senses[r] == Sense::less_equal)
                basis_[r] = j;
        }
        for (std::size_t r = 0; r < m_; ++r) {
            if (senses[r] == Sense::less_equal)
                continue;
            std::vector<Integer> col(m_);
            col[r] = 1;
            basis_[r] = add_column(std::move(col), "artificial[" + name_of_row(r) + "]", Kind::artificial);
        }
        position_.assign(columns_.size(), kNonbasic);
        for (std::size_t r = 0; r < m_; ++r)
            position_[basis_[r]] = r;
        binv_.assign(m_, std::vector<Rational>(m_));
        for (std::size_t r = 0; r < m_; ++r)
            binv_[r][r] = 1;
        xb_ = rhs_;
    }

    SimplexResult solve()
    {
        SimplexResult out;
        std::vector<Integer> phase1(columns_.size());
        bool any_artificial = false;
        for (std::size_t j = 0; j < columns_.size(); ++j)
            if (kind_[j] == Kind::artificial) {
                phase1[j] = 1;
                any_artificial = true;
            }
        if (any_artificial) {
            run(phase1, true);
            Rational infeasibility = 0;
            for (std::size_t r = 0; r < m_; ++r)
                if (kind_[basis_[r]] == Kind::artificial)
                    infeasibility += xb_[r];
            if (infeasibility > 0) {
                out.status = LpStatus::infeasible;
                out.pivots = pivots_;
                return out;
            }
            drive_out_artificials();
        }
        std::vector<Integer> cost(columns_.size());
        for (std::size_t j = 0; j < lp_.variables.size(); ++j)
            cost[j] = numerator_of(lp_.objective[j] * cost_scale_);
        if (!run(cost, false)) {
            out.status = LpStatus::unbounded;
            out.pivots = pivots_;
            return out;
        }
        out.status = LpStatus::optimal;
        out.x.assign(lp_.variables.size(), Rational(0));
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < lp_.variables.size())
                out.x[basis_[r]] = xb_[r];
        out.optimum = 0;
        for (std::size_t j = 0; j < out.x.size(); ++j)
            out.optimum += lp_.objective[j] * out.x[j];
        const auto y = prices(cost);
        out.duals.resize(m_);
        for (std::size_t r = 0; r < m_; ++r)
            out.duals[r] = y[r] * row_factor_[r] / cost_scale_;
        for (std::size_t r = 0; r < m_; ++r)
            out.basis.push_back(names_[basis_[r]]);
        out.pivots = pivots_;
        return out;
    }

private:
    enum class Kind { structural, slack, artificial };
    static constexpr std::size_t kNonbasic = static_cast<std::size_t>(-1);

    std::string name_of_row(std::size_t r) const
    {
        const auto& n = lp_.constraints[r].name;
        return n.empty() ? std::to_string(r) : n;
    }

    std::size_t add_column(std::vector<Integer> col, std::string name, Kind kind)
    {
        columns_.push_back(std::move(col));
        names_.push_back(std::move(name));
        kind_.push_back(kind);
        return columns_.size() - 1;
    }

    static Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

    static Integer common_denominator(const std::vector<Rational>& values, const Rational& extra)
    {
        Integer den = boost::multiprecision::denominator(extra);
        for (const auto& v : values) {
            const Integer d = boost::multiprecision::denominator(v);
            den = den / boost::multiprecision::gcd(den, d) * d;
        }
        return den;
    }

    /// y^T = c_B^T B^{-1}.
    std::vector<Rational> prices(const std::vector<Integer>& cost) const
    {
        std::vector<Rational> y(m_);
        for (std::size_t r = 0; r < m_; ++r) {
            const auto& cb = cost[basis_[r]];
            if (cb == 0)
                continue;
            for (std::size_t k = 0; k < m_; ++k)
                if (binv_[r][k] != 0)
                    y[k] += cb * binv_[r][k];
        }
        return y;
    }

    /// Prices scaled to integers: y = scaled / scale with scale > 0.
    struct IntegerPrices {
        std::vector<Integer> scaled;
        Integer scale;
    };

    static IntegerPrices integer_prices(const std::vector<Rational>& y)
    {
        IntegerPrices p{{}, common_denominator(y, Rational(0))};
        p.scaled.reserve(y.size());
        for (const auto& v : y)
            p.scaled.push_back(numerator_of(v * p.scale));
        return p;
    }

    /// Sign of the reduced cost c_j - y . A_j, evaluated in integer arithmetic.
    int reduced_cost_sign(const std::vector<Integer>& cost, const IntegerPrices& y, std::size_t j) const
    {
        Integer d = cost[j] * y.scale;
        const auto& col = columns_[j];
        for (std::size_t r = 0; r < m_; ++r)
            if (!col[r].is_zero() && !y.scaled[r].is_zero())
                d -= y.scaled[r] * col[r];
        return d.sign();
    }

    std::vector<Rational> ftran(std::size_t j) const
    {
        std::vector<Rational> u(m_);
        for (std::size_t r = 0; r < m_; ++r)
            for (std::size_t k = 0; k < m_; ++k)
                if (binv_[r][k] != 0 && columns_[j][k] != 0)
                    u[r] += binv_[r][k] * columns_[j][k];
        return u;
    }

    void pivot(std::size_t leave_row, std::size_t enter, const std::vector<Rational>& u)
    {
        const Rational p = u[leave_row];
        for (auto& v : binv_[leave_row])
            v /= p;
        xb_[leave_row] /= p;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == leave_row || u[r] == 0)
                continue;
            const Rational f = u[r];
            for (std::size_t k = 0; k < m_; ++k)
                if (binv_[leave_row][k] != 0)
                    binv_[r][k] -= f * binv_[leave_row][k];
            xb_[r] -= f * xb_[leave_row];
        }
        position_[basis_[leave_row]] = kNonbasic;
        basis_[leave_row] = enter;
        position_[enter] = leave_row;
        ++pivots_;
    }

    /// Returns false when the objective is unbounded below.
    bool run(const std::vector<Integer>& cost, bool phase_one)
    {
        while (true) {
            const auto y = integer_prices(prices(cost));
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < columns_.size(); ++j) {
                if (position_[j] != kNonbasic)
                    continue;
                if (!phase_one && kind_[j] == Kind::artificial)
                    continue;
                if (reduced_cost_sign(cost, y, j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter)
                return true;
            const auto u = ftran(*enter);
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (u[r] <= 0)
                    continue;
                Rational ratio = xb_[r] / u[r];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (!leave)
                return false;
            pivot(*leave, *enter, u);
        }
    }

    /// After a feasible phase one, replace zero-level artificial basics by real
    /// columns where possible. Rows where no real column has a nonzero entry are
    /// redundant; their artificial stays basic at zero and can never move.
    void drive_out_artificials()
    {
        for (std::size_t r = 0; r < m_; ++r) {
            if (kind_[basis_[r]] != Kind::artificial)
                continue;
            for (std::size_t j = 0; j < columns_.size(); ++j) {
                if (position_[j] != kNonbasic || kind_[j] == Kind::artificial)
                    continue;
                const auto u = ftran(j);
                if (u[r] != 0) {
                    pivot(r, j, u);
                    break;
                }
            }
        }
    }

    const LinearProgram& lp_;
    std::size_t m_ = 0;
    std::vector<bool> flipped_;
    std::vector<Rational> rhs_;
    std::vector<std::vector<Integer>> columns_;
    std::vector<Integer> row_factor_;
    Integer cost_scale_ = 1;
    std::vector<std::string> names_;
    std::vector<Kind> kind_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> position_;
    std::vector<std::vector<Rational>> binv_;
    std::vector<Rational> xb_;
    std::size_t pivots_ = 0;
};

} // namespace detail

/// Exact two-phase simplex. Deterministic: the same program always yields the same vertex.
inline SimplexResult solve_simplex(const LinearProgram& lp)
{
    return detail::ExactSimplex(lp).solve();
}

inline Rational row_activity(const LinearConstraint& row, const std::vector<Rational>& x)
{
    Rational total = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (row.coeffs[j] != 0 && x[j] != 0)
            total += row.coeffs[j] * x[j];
    return total;
}

inline bool satisfies(const LinearConstraint& row, const Rational& activity)
{
    switch (row.sense) {
    case Sense::less_equal: return activity <= row.rhs;
    case Sense::greater_equal: return activity >= row.rhs;
    case Sense::equal: return activity == row.rhs;
    }
    return false;
}

/// Exact primal feasibility of x, including x >= 0.
inline bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x)
{
    if (x.size() != lp.variables.size())
        return false;
    for (const auto& v : x)
        if (v < 0)
            return false;
    for (const auto& row : lp.constraints)
        if (!satisfies(row, row_activity(row, x)))
            return false;
    return true;
}

/// Optimality certificate by LP duality: x primal feasible, y dual feasible
/// (sign conditions per row sense and A^T y <= c), and c.x == b.y.
inline bool certifies_optimality(const LinearProgram& lp, const std::vector<Rational>& x,
                                 const std::vector<Rational>& y)
{
    if (!is_feasible(lp, x) || y.size() != lp.constraints.size())
        return false;
    Rational primal = 0, dual = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        primal += lp.objective[j] * x[j];
    for (std::size_t r = 0; r < y.size(); ++r) {
        const auto sense = lp.constraints[r].sense;
        if ((sense == Sense::greater_equal && y[r] < 0) || (sense == Sense::less_equal && y[r] > 0))
            return false;
        dual += lp.constraints[r].rhs * y[r];
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        Rational column = 0;
        for (std::size_t r = 0; r < y.size(); ++r)
            column += lp.constraints[r].coeffs[j] * y[r];
        if (column > lp.objective[j])
            return false;
    }
    return primal == dual;
}

} // namespace haargap

#endif // HAARGAP_SIMPLEX_HPP
