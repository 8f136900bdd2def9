#ifndef HAARGAP_ROOT_SYSTEM_HPP
#define HAARGAP_ROOT_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace haargap {

/// A point of the Cartan subalgebra of sl_n: a trace-zero rational n-vector.
/// The Weyl group acts by permuting coordinates.
class CartanElement {
public:
    explicit CartanElement(std::vector<Rational> coords) : coords_(std::move(coords))
    {
        if (coords_.empty())
            throw InvalidArgument("Cartan element must have at least one coordinate");
        Rational trace = 0;
        for (const auto& c : coords_)
            trace += c;
        if (trace != 0)
            throw InvalidArgument("Cartan element must have trace zero, got trace " + to_string(trace));
    }

    /// Zero element of sl_n.
    static CartanElement zero(std::size_t n) { return CartanElement(std::vector<Rational>(n, Rational(0))); }

    /// diag(n-1, -1, ..., -1).
    static CartanElement extremely_irregular(std::size_t n)
    {
        std::vector<Rational> c(n, Rational(-1));
        c.front() = Rational(static_cast<long>(n) - 1);
        return CartanElement(std::move(c));
    }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t k) const { return coords_[k]; }
    std::span<const Rational> coords() const { return coords_; }

    bool is_zero() const
    {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
    }

    CartanElement scaled(const Rational& c) const
    {
        auto out = coords_;
        for (auto& v : out)
            v *= c;
        return CartanElement(std::move(out));
    }

    CartanElement operator-() const { return scaled(Rational(-1)); }

    /// Coordinate permutation: result[perm[k]] = this[k].
    CartanElement permuted(std::span<const std::size_t> perm) const
    {
        if (perm.size() != coords_.size())
            throw InvalidArgument("permutation length does not match Cartan dimension");
        std::vector<Rational> out(coords_.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
            out.at(perm[k]) = coords_[k];
        return CartanElement(std::move(out));
    }

    /// Comma-separated coordinates, the form accepted on the command line.
    std::string csv() const
    {
        std::string s;
        for (std::size_t k = 0; k < coords_.size(); ++k) {
            if (k)
                s += ",";
            s += to_string(coords_[k]);
        }
        return s;
    }

    std::string str() const { return "(" + csv() + ")"; }

    friend bool operator==(const CartanElement&, const CartanElement&) = default;
    friend bool operator<(const CartanElement& a, const CartanElement& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
};

/// A root e_i - e_j of type A, indices 1-based.
struct Root {
    int i = 0;
    int j = 0;
    std::vector<Rational> vector;

    bool positive() const { return i < j; }
    std::string label() const
    {
        return "α_" + std::to_string(i) + (std::max(i, j) > 9 ? "," : "") + std::to_string(j);
    }
};

/// Finite root system stored as explicit vectors with multiplicities.
/// Only the type A constructor ships; the storage itself is type-agnostic.
class RootSystem {
public:
    RootSystem(std::size_t ambient_dim, std::size_t rank, std::vector<Root> roots, std::vector<int> multiplicities)
        : n_(ambient_dim), rank_(rank), roots_(std::move(roots)), mult_(std::move(multiplicities))
    {
        if (mult_.size() != roots_.size())
            throw InvalidArgument("one multiplicity per root required");
        // Roots are looked up by their sparse coordinate form, which keeps the
        // all-pairs sum table cheap for the long sparse vectors of type A.
        std::map<SparseVector, std::size_t> lookup;
        std::vector<SparseVector> sparse;
        for (std::size_t a = 0; a < roots_.size(); ++a) {
            if (roots_[a].vector.size() != n_)
                throw InvalidArgument("root vector length does not match ambient dimension");
            sparse.push_back(to_sparse(roots_[a].vector));
            lookup.emplace(sparse.back(), a);
        }
        pair_index_.assign(n_ * n_, kNone);
        for (std::size_t a = 0; a < roots_.size(); ++a) {
            const auto& r = roots_[a];
            if (r.i >= 1 && r.j >= 1 && static_cast<std::size_t>(r.i) <= n_ && static_cast<std::size_t>(r.j) <= n_)
                pair_index_[static_cast<std::size_t>(r.i - 1) * n_ + static_cast<std::size_t>(r.j - 1)] = a;
        }
        negation_.resize(roots_.size());
        sum_.assign(roots_.size() * roots_.size(), std::nullopt);
        for (std::size_t a = 0; a < roots_.size(); ++a) {
            auto neg = sparse[a];
            for (auto& entry : neg)
                entry.second = -entry.second;
            const auto it = lookup.find(neg);
            if (it == lookup.end())
                throw InvalidArgument("root system is not closed under negation");
            negation_[a] = it->second;
            if (roots_[a].positive())
                positive_.push_back(a);
            for (std::size_t b = 0; b < roots_.size(); ++b)
                if (const auto hit = lookup.find(add(sparse[a], sparse[b])); hit != lookup.end())
                    sum_[a * roots_.size() + b] = hit->second;
        }
    }

    std::size_t n() const { return n_; }
    std::size_t rank() const { return rank_; }
    std::size_t size() const { return roots_.size(); }
    const Root& root(std::size_t a) const { return roots_.at(a); }
    std::span<const Root> roots() const { return roots_; }
    int multiplicity(std::size_t a) const { return mult_.at(a); }
    std::span<const std::size_t> positive_roots() const { return positive_; }

    /// Total multiplicity of the positive roots (dim of the nilradical).
    std::size_t positive_dimension() const
    {
        std::size_t total = 0;
        for (auto a : positive_)
            total += static_cast<std::size_t>(mult_[a]);
        return total;
    }

    std::size_t negation(std::size_t a) const { return negation_.at(a); }

    /// Index of alpha + beta when it is a root.
    std::optional<std::size_t> sum(std::size_t a, std::size_t b) const
    {
        if (a >= size() || b >= size())
            throw InvalidArgument("root index out of range");
        return sum_[a * size() + b];
    }

    /// Index of e_i - e_j (1-based i, j).
    std::size_t index_of(int i, int j) const
    {
        if (i >= 1 && j >= 1 && static_cast<std::size_t>(i) <= n_ && static_cast<std::size_t>(j) <= n_) {
            const auto a = pair_index_[static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1)];
            if (a != kNone)
                return a;
        }
        throw InvalidArgument("no root e_" + std::to_string(i) + " - e_" + std::to_string(j));
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

    static SparseVector to_sparse(const std::vector<Rational>& v)
    {
        SparseVector out;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0)
                out.emplace_back(k, v[k]);
        return out;
    }

    static SparseVector add(const SparseVector& x, const SparseVector& y)
    {
        SparseVector out;
        std::size_t p = 0, q = 0;
        while (p < x.size() || q < y.size()) {
            if (q == y.size() || (p < x.size() && x[p].first < y[q].first))
                out.push_back(x[p++]);
            else if (p == x.size() || y[q].first < x[p].first)
                out.push_back(y[q++]);
            else {
                Rational v = x[p].second + y[q].second;
                if (v != 0)
                    out.emplace_back(x[p].first, std::move(v));
                ++p;
                ++q;
            }
        }
        return out;
    }

    std::size_t n_;
    std::size_t rank_;
    std::vector<Root> roots_;
    std::vector<int> mult_;
    std::vector<std::size_t> negation_;
    std::vector<std::size_t> positive_;
    std::vector<std::optional<std::size_t>> sum_;
    std::vector<std::size_t> pair_index_;
};

/// The A_{n-1} root system of sl_n. Roots are ordered lexicographically on (i, j).
inline RootSystem build_type_a(int n)
{
    if (n < 2)
        throw InvalidArgument("type A root system needs n >= 2, got " + std::to_string(n));
    std::vector<Root> roots;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
            v[static_cast<std::size_t>(i - 1)] = 1;
            v[static_cast<std::size_t>(j - 1)] = -1;
            roots.push_back(Root{i, j, std::move(v)});
        }
    std::vector<int> mult(roots.size(), 1);
    return RootSystem(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1), std::move(roots), std::move(mult));
}

inline Rational evaluate_root(const RootSystem& rs, const Root& alpha, const CartanElement& x)
{
    if (x.dim() != rs.n() || alpha.vector.size() != rs.n())
        throw InvalidArgument("dimension mismatch: root system has n=" + std::to_string(rs.n()) +
                              ", Cartan element has " + std::to_string(x.dim()) + " coordinates");
    Rational value = 0;
    for (std::size_t k = 0; k < rs.n(); ++k)
        if (alpha.vector[k] != 0)
            value += alpha.vector[k] * x[k];
    return value;
}

inline Rational evaluate_root(const RootSystem& rs, std::size_t alpha, const CartanElement& x)
{
    return evaluate_root(rs, rs.root(alpha), x);
}

/// Number of distinct coordinate permutations of x: n! over the product of
/// factorials of repeated-value counts.
inline Integer weyl_orbit_size(const CartanElement& x)
{
    std::vector<Rational> c(x.coords().begin(), x.coords().end());
    std::sort(c.begin(), c.end());
    Integer size = 1;
    std::size_t run = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        run = (k > 0 && c[k] == c[k - 1]) ? run + 1 : 1;
        size *= static_cast<unsigned>(k + 1);
        size /= static_cast<unsigned>(run);
    }
    return size;
}

/// All distinct coordinate permutations of x, in lexicographic order.
inline std::vector<CartanElement> weyl_orbit(const CartanElement& x)
{
    std::vector<Rational> c(x.coords().begin(), x.coords().end());
    std::sort(c.begin(), c.end());
    std::vector<CartanElement> orbit;
    do {
        orbit.emplace_back(c);
    } while (std::next_permutation(c.begin(), c.end()));
    return orbit;
}

/// Orbit representative with non-increasing coordinates.
inline CartanElement dominant_representative(const CartanElement& x)
{
    std::vector<Rational> c(x.coords().begin(), x.coords().end());
    std::sort(c.begin(), c.end(), std::greater<>());
    return CartanElement(std::move(c));
}

inline bool is_regular(const CartanElement& x)
{
    std::vector<Rational> c(x.coords().begin(), x.coords().end());
    std::sort(c.begin(), c.end());
    return std::adjacent_find(c.begin(), c.end()) == c.end();
}

} // namespace haargap

#endif // HAARGAP_ROOT_SYSTEM_HPP
