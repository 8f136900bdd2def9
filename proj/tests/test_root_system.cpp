#include <gtest/gtest.h>

#include <random>
#include <set>

#include "haargap/root_system.hpp"
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

} // namespace

TEST(BuildTypeA, RootCounts)
{
    for (int n : {2, 3, 4}) {
        const auto rs = build_type_a(n);
        EXPECT_EQ(rs.size(), static_cast<std::size_t>(n * (n - 1)));
        EXPECT_EQ(rs.positive_roots().size(), static_cast<std::size_t>(n * (n - 1) / 2));
        EXPECT_EQ(rs.rank(), static_cast<std::size_t>(n - 1));
    }
    EXPECT_EQ(build_type_a(2).size(), 2U);
    EXPECT_EQ(build_type_a(3).positive_roots().size(), 3U);
    EXPECT_EQ(build_type_a(4).size(), 12U);
}

TEST(BuildTypeA, RejectsSmallDimension)
{
    EXPECT_THROW(build_type_a(1), InvalidArgument);
    EXPECT_THROW(build_type_a(0), InvalidArgument);
}

TEST(BuildTypeA, LexicographicOrderAndPairing)
{
    const auto rs = build_type_a(3);
    std::vector<std::pair<int, int>> order;
    for (const auto& r : rs.roots())
        order.emplace_back(r.i, r.j);
    EXPECT_EQ(order, (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}));
    for (std::size_t a = 0; a < rs.size(); ++a) {
        const auto& neg = rs.root(rs.negation(a));
        EXPECT_EQ(neg.i, rs.root(a).j);
        EXPECT_EQ(neg.j, rs.root(a).i);
        EXPECT_EQ(rs.multiplicity(a), 1);
        EXPECT_EQ(rs.root(a).positive(), rs.root(a).i < rs.root(a).j);
    }
}

TEST(EvaluateRoot, Examples)
{
    const auto a2 = build_type_a(3);
    EXPECT_EQ(evaluate_root(a2, a2.index_of(1, 2), cartan({2, -1, -1})), 3);
    const auto a3 = build_type_a(4);
    EXPECT_EQ(evaluate_root(a3, a3.index_of(1, 2), cartan({3, -1, -1, -1})), 4);
    EXPECT_THROW(evaluate_root(a3, 0, cartan({2, -1, -1})), InvalidArgument);
}

TEST(EvaluateRoot, Antisymmetric)
{
    std::mt19937_64 rng(7);
    const auto rs = build_type_a(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = oracle::random_cartan(rng, 5);
        for (std::size_t a = 0; a < rs.size(); ++a)
            EXPECT_EQ(evaluate_root(rs, rs.negation(a), x), -evaluate_root(rs, a, x));
    }
}

TEST(EvaluateRoot, WeylEquivariant)
{
    // evaluate(w.alpha, w.X) = evaluate(alpha, X) with w a coordinate permutation.
    std::mt19937_64 rng(11);
    const auto rs = build_type_a(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = oracle::random_cartan(rng, 5);
        const auto perm = oracle::random_permutation(rng, 5);
        const auto wx = x.permuted(perm);
        for (std::size_t a = 0; a < rs.size(); ++a) {
            const auto& r = rs.root(a);
            const auto wa = rs.index_of(static_cast<int>(perm[static_cast<std::size_t>(r.i - 1)]) + 1,
                                        static_cast<int>(perm[static_cast<std::size_t>(r.j - 1)]) + 1);
            EXPECT_EQ(evaluate_root(rs, wa, wx), evaluate_root(rs, a, x));
        }
    }
}

TEST(RootSystem, PositiveRootsSumToTwoRho)
{
    for (int n = 2; n <= 8; ++n) {
        const auto rs = build_type_a(n);
        std::vector<Rational> sum(static_cast<std::size_t>(n), Rational(0));
        for (auto a : rs.positive_roots())
            for (std::size_t k = 0; k < sum.size(); ++k)
                sum[k] += rs.root(a).vector[k];
        for (int k = 1; k <= n; ++k)
            EXPECT_EQ(sum[static_cast<std::size_t>(k - 1)], n + 1 - 2 * k) << "n=" << n << " k=" << k;
    }
}

TEST(RootSystem, AdditionTableMatchesBruteForce)
{
    for (int n = 2; n <= 5; ++n) {
        const auto rs = build_type_a(n);
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (std::size_t b = 0; b < rs.size(); ++b) {
                std::vector<Rational> s(rs.n());
                for (std::size_t k = 0; k < rs.n(); ++k)
                    s[k] = rs.root(a).vector[k] + rs.root(b).vector[k];
                std::optional<std::size_t> expected;
                for (std::size_t c = 0; c < rs.size(); ++c)
                    if (rs.root(c).vector == s)
                        expected = c;
                EXPECT_EQ(rs.sum(a, b), expected);
                // chaining rule: e_i - e_j + e_j - e_k = e_i - e_k
                const bool chains = rs.root(a).j == rs.root(b).i && rs.root(a).i != rs.root(b).j;
                const bool chains_rev = rs.root(b).j == rs.root(a).i && rs.root(b).i != rs.root(a).j;
                EXPECT_EQ(expected.has_value(), chains || chains_rev);
            }
    }
}

TEST(CartanElement, RejectsNonzeroTraceWithTraceInMessage)
{
    try {
        CartanElement(std::vector<Rational>{Rational(1), Rational(1, 2)});
        FAIL() << "expected InvalidArgument";
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("3/2"), std::string::npos);
    }
}

TEST(WeylOrbit, Examples)
{
    const auto orbit = weyl_orbit(cartan({2, -1, -1}));
    const std::set<CartanElement> got(orbit.begin(), orbit.end());
    const std::set<CartanElement> expected{cartan({2, -1, -1}), cartan({-1, 2, -1}), cartan({-1, -1, 2})};
    EXPECT_EQ(got, expected);
    EXPECT_EQ(orbit.size(), 3U);
    EXPECT_EQ(weyl_orbit(cartan({3, -1, -1, -1})).size(), 4U);
    EXPECT_EQ(weyl_orbit(cartan({0, 0, 0})).size(), 1U);
}

TEST(WeylOrbit, SizeMatchesEnumeration)
{
    for (const auto& x : {cartan({2, 1, -3}), cartan({2, -1, -1}), cartan({1, 1, -1, -1}), cartan({4, 0, -1, -3}),
                          cartan({0, 0, 0, 0, 0})})
        EXPECT_EQ(weyl_orbit_size(x), Integer(weyl_orbit(x).size()));
}

TEST(DominantRepresentative, Examples)
{
    EXPECT_EQ(dominant_representative(cartan({-1, -1, 2})), cartan({2, -1, -1}));
    EXPECT_EQ(dominant_representative(cartan({-1, 3, -1, -1})), cartan({3, -1, -1, -1}));
    EXPECT_EQ(dominant_representative(cartan({2, -1, -1})), cartan({2, -1, -1}));
}

TEST(DominantRepresentative, IdempotentOrbitPreservingAndDominant)
{
    std::mt19937_64 rng(5);
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto rs = build_type_a(static_cast<int>(n));
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = oracle::random_cartan(rng, n);
            const auto d = dominant_representative(x);
            EXPECT_EQ(dominant_representative(d), d);
            const auto orbit = weyl_orbit(x);
            EXPECT_NE(std::find(orbit.begin(), orbit.end(), d), orbit.end());
            for (auto a : rs.positive_roots())
                EXPECT_GE(evaluate_root(rs, a, d), 0);
        }
    }
}

TEST(IsRegular, Examples)
{
    EXPECT_FALSE(is_regular(cartan({2, -1, -1})));
    EXPECT_TRUE(is_regular(cartan({2, 1, -3})));
    EXPECT_FALSE(is_regular(cartan({0, 0})));
}
