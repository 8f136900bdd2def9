#include <gtest/gtest.h>

#include <random>

#include "haargap/entropy.hpp"
#include "haargap/supports.hpp"
#include "test_support.hpp"

using namespace haargap;

namespace {

CartanElement cartan(std::initializer_list<long> v)
{
    std::vector<Rational> c;
    for (auto x : v)
        c.emplace_back(x);
    return CartanElement(std::move(c));
}

std::vector<Rational> ints(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

// Independent oracle: positive exponents |X_i - X_j| for i < j, sorted.
std::vector<Rational> naive_spectrum(const CartanElement& x)
{
    std::vector<Rational> v;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = i + 1; j < x.dim(); ++j)
            v.push_back(abs(x[i] - x[j]));
    std::sort(v.begin(), v.end());
    return v;
}

Rational naive_lower_bound(const CartanElement& x)
{
    const auto v = naive_spectrum(x);
    const Rational half = v.empty() ? Rational(0) : v.back() / 2;
    Rational s = 0;
    for (const auto& e : v)
        if (e > half)
            s += e - half;
    return s;
}

SupportSet pair_support(const RootSystem& rs, int i, int j)
{
    RootMask m(rs.size());
    m.set(rs.index_of(i, j));
    m.set(rs.index_of(j, i));
    return describe_support(rs, m);
}

SupportSet full_support(const RootSystem& rs)
{
    RootMask m(rs.size());
    m.set();
    return describe_support(rs, m);
}

} // namespace

TEST(LyapunovSpectrum, Examples)
{
    const auto a2 = build_type_a(3);
    const auto s = lyapunov_spectrum(a2, cartan({2, -1, -1}));
    EXPECT_EQ(s.values, ints({0, 3, 3}));
    EXPECT_EQ(s.chi_max, 3);
    const auto a3 = build_type_a(4);
    const auto t = lyapunov_spectrum(a3, cartan({3, -1, -1, -1}));
    EXPECT_EQ(t.values, ints({0, 0, 0, 4, 4, 4}));
    EXPECT_EQ(t.chi_max, 4);
    const auto z = lyapunov_spectrum(a3, CartanElement::zero(4));
    EXPECT_EQ(z.values, ints({0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(z.chi_max, 0);
}

TEST(LyapunovSpectrum, UsesDominantRepresentative)
{
    const auto rs = build_type_a(3);
    const auto s = lyapunov_spectrum(rs, cartan({-1, -1, 2}));
    EXPECT_EQ(s.direction, cartan({2, -1, -1}));
    EXPECT_EQ(s.values, ints({0, 3, 3}));
}

TEST(LyapunovSpectrum, MatchesNaiveOracle)
{
    std::mt19937_64 rng(21);
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto rs = build_type_a(static_cast<int>(n));
        for (int trial = 0; trial < 30; ++trial) {
            const auto x = oracle::random_cartan(rng, n);
            const auto s = lyapunov_spectrum(rs, x);
            EXPECT_EQ(s.values, naive_spectrum(x));
            EXPECT_EQ(s.values.size(), n * (n - 1) / 2);
        }
    }
}

TEST(LyapunovSpectrum, RejectsDimensionMismatch)
{
    EXPECT_THROW(lyapunov_spectrum(build_type_a(4), cartan({2, -1, -1})), InvalidArgument);
    EXPECT_THROW(haar_entropy(build_type_a(4), cartan({2, -1, -1})), InvalidArgument);
}

TEST(HaarEntropy, Examples)
{
    EXPECT_EQ(haar_entropy(build_type_a(3), cartan({1, 1, -2})), 6);
    EXPECT_EQ(haar_entropy(build_type_a(3), CartanElement::zero(3)), 0);
    for (int n = 2; n <= 9; ++n)
        EXPECT_EQ(haar_entropy(build_type_a(n), CartanElement::extremely_irregular(static_cast<std::size_t>(n))),
                  n * (n - 1));
}

TEST(EntropyLowerBound, Examples)
{
    EXPECT_EQ(entropy_lower_bound(build_type_a(3), cartan({2, -1, -1})), 3);
    EXPECT_EQ(entropy_lower_bound(build_type_a(4), cartan({3, -1, -1, -1})), 6);
    EXPECT_EQ(entropy_lower_bound(build_type_a(4), CartanElement::zero(4)), 0);
    EXPECT_EQ(conjectured_bound(build_type_a(4), cartan({3, -1, -1, -1})), 6);
}

TEST(EntropyLowerBound, PropertiesOnRandomDirections)
{
    std::mt19937_64 rng(2024);
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto rs = build_type_a(static_cast<int>(n));
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = oracle::random_cartan(rng, n);
            const auto lb = entropy_lower_bound(rs, x);
            EXPECT_EQ(lb, naive_lower_bound(x));
            EXPECT_EQ(entropy_lower_bound(rs, x.permuted(oracle::random_permutation(rng, n))), lb);
            EXPECT_EQ(haar_entropy(rs, x.permuted(oracle::random_permutation(rng, n))), haar_entropy(rs, x));
            const Rational c(1 + trial % 7, 1 + trial % 5);
            EXPECT_EQ(entropy_lower_bound(rs, x.scaled(c)), c * lb);
            EXPECT_LE(lb, haar_entropy(rs, x));
            const auto chi = lyapunov_spectrum(rs, x).chi_max;
            if (!x.is_zero()) {
                EXPECT_GE(lb, chi / 2);
                EXPECT_EQ(dispersive_exponent({1 / chi, x}, rs) * chi, lb);
            }
        }
    }
}

TEST(EntropyLowerBound, SharpAtEqualExponents)
{
    for (int n = 2; n <= 8; ++n) {
        const auto rs = build_type_a(n);
        for (const auto& x : weyl_orbit(CartanElement::extremely_irregular(static_cast<std::size_t>(n))))
            EXPECT_EQ(entropy_lower_bound(rs, x), haar_entropy(rs, x) / 2) << "n=" << n;
    }
}

TEST(ComponentEntropyCap, Examples)
{
    const auto rs = build_type_a(3);
    const auto x = cartan({1, 1, -2});
    EXPECT_EQ(component_entropy_cap(rs, pair_support(rs, 1, 3), x), 3);
    EXPECT_EQ(component_entropy_cap(rs, pair_support(rs, 1, 2), x), 0);
    EXPECT_EQ(component_entropy_cap(rs, describe_support(rs, RootMask(rs.size())), x), 0);
}

TEST(ComponentEntropyCap, FullSupportIsHaarAndNegationSymmetric)
{
    std::mt19937_64 rng(3);
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto rs = build_type_a(static_cast<int>(n));
        const auto supports = enumerate_symmetric_closed(rs);
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = oracle::random_cartan(rng, n);
            EXPECT_EQ(component_entropy_cap(rs, full_support(rs), x), haar_entropy(rs, x));
            for (const auto& r : supports) {
                const auto cap = component_entropy_cap(rs, r, x);
                EXPECT_EQ(component_entropy_cap(rs, r, -x), cap);
                EXPECT_GE(cap, 0);
                EXPECT_LE(cap, haar_entropy(rs, x));
            }
        }
    }
}

TEST(ComponentEntropyCap, RejectsWrongMaskSize)
{
    const auto rs = build_type_a(3);
    EXPECT_THROW(component_entropy_cap(rs, full_support(build_type_a(4)), cartan({1, 1, -2})), InvalidArgument);
}

TEST(FastSlowSplit, Example)
{
    const auto rs = build_type_a(3);
    const auto split = fast_slow_split(rs, cartan({2, -1, -1}), Rational(1, 3));
    EXPECT_EQ(split.threshold, Rational(3, 2));
    ASSERT_EQ(split.slow_indices.size(), 1U);
    EXPECT_EQ(split.slow_indices[0], rs.index_of(2, 3));
    EXPECT_EQ(split.slow_dimension, 1U);
    EXPECT_EQ(split.fast_indices.size(), 2U);
    EXPECT_EQ(split.total_dimension, 3U);
}

TEST(FastSlowSplit, LargeKMakesEveryPositiveExponentFast)
{
    const auto rs = build_type_a(4);
    const auto x = cartan({5, 1, -3, -3});
    const auto split = fast_slow_split(rs, x, Rational(1000000));
    for (auto a : split.slow_indices)
        EXPECT_EQ(evaluate_root(rs, a, dominant_representative(x)), 0);
    EXPECT_EQ(split.fast_indices.size(), 5U);
}

TEST(FastSlowSplit, ThresholdIsStrict)
{
    // exponent exactly 1/(2K) counts as fast
    const auto rs = build_type_a(3);
    const auto split = fast_slow_split(rs, cartan({2, -1, -1}), Rational(1, 6));
    EXPECT_EQ(split.threshold, 3);
    EXPECT_EQ(split.fast_indices.size(), 2U);
}

TEST(FastSlowSplit, PartitionsPositiveRoots)
{
    std::mt19937_64 rng(8);
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto rs = build_type_a(static_cast<int>(n));
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = oracle::random_cartan(rng, n);
            const Rational k(1 + trial, 7);
            const auto split = fast_slow_split(rs, x, k);
            EXPECT_EQ(split.slow_dimension + split.fast_indices.size(), split.total_dimension);
            std::vector<std::size_t> all = split.slow_indices;
            all.insert(all.end(), split.fast_indices.begin(), split.fast_indices.end());
            std::sort(all.begin(), all.end());
            const auto pos = rs.positive_roots();
            EXPECT_EQ(all, std::vector<std::size_t>(pos.begin(), pos.end()));
            for (auto a : split.slow_indices)
                EXPECT_LT(evaluate_root(rs, a, dominant_representative(x)), split.threshold);
            for (auto a : split.fast_indices)
                EXPECT_GE(evaluate_root(rs, a, dominant_representative(x)), split.threshold);
        }
    }
}

TEST(FastSlowSplit, RejectsNonPositiveK)
{
    const auto rs = build_type_a(3);
    EXPECT_THROW(fast_slow_split(rs, cartan({2, -1, -1}), Rational(0)), InvalidArgument);
    EXPECT_THROW(fast_slow_split(rs, cartan({2, -1, -1}), Rational(-1, 2)), InvalidArgument);
    EXPECT_THROW(dispersive_exponent({Rational(0), cartan({2, -1, -1})}, rs), InvalidArgument);
}

TEST(DispersiveExponent, Examples)
{
    const auto rs = build_type_a(3);
    EXPECT_EQ(dispersive_exponent({Rational(1, 3), cartan({2, -1, -1})}, rs), 1);
    EXPECT_EQ(dispersive_exponent({Rational(1, 100), cartan({2, -1, -1})}, rs), 0);
    EXPECT_EQ(dispersive_exponent({Rational(1, 4), cartan({3, -1, -1, -1})}, build_type_a(4)), Rational(3, 2));
}

TEST(DispersiveExponent, FastTermsAreNonNegative)
{
    std::mt19937_64 rng(13);
    const auto rs = build_type_a(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = oracle::random_cartan(rng, 5);
        EXPECT_GE(dispersive_exponent({Rational(1 + trial, 11), x}, rs), 0);
    }
}
