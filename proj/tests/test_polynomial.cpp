#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace mcs;

namespace {

IntPolynomial from_ints(std::vector<long long> v)
{
    std::vector<BigInt> c(v.begin(), v.end());
    return IntPolynomial(std::move(c));
}

// product of (t - root) over an integer root multiset
IntPolynomial from_roots(const std::vector<int>& roots)
{
    IntPolynomial p = IntPolynomial::constant(1);
    for (int r : roots)
        p = p * from_ints({-r, 1});
    return p;
}

// reference alternation check on known sorted root multisets
bool roots_interlace(std::vector<int> u, std::vector<int> v)
{
    if (u.size() < v.size())
        std::swap(u, v);
    if (u.size() - v.size() >= 2)
        return false;
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    auto alternates = [](const std::vector<int>& a, const std::vector<int>& b) {
        // a_1 <= b_1 <= a_2 <= b_2 <= ...
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (a[i] > b[i])
                return false;
            if (i + 1 < a.size() && b[i] > a[i + 1])
                return false;
        }
        return true;
    };
    if (u.size() == v.size())
        return alternates(u, v) || alternates(v, u);
    return alternates(u, v);
}

}  // namespace

TEST_CASE("polynomial arithmetic and normalization")
{
    IntPolynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(IntPolynomial(std::vector<BigInt>{0, 0}).is_zero());
    IntPolynomial p = from_ints({1, 2, 1});
    CHECK(p == from_ints({1, 1}) * from_ints({1, 1}));
    CHECK((p - p).is_zero());
    CHECK(p.derivative() == from_ints({2, 2}));
    CHECK(p.eval(BigInt(2)) == 9);
    CHECK(p.sign_at(Rational(-1)) == 0);
    CHECK(from_ints({-2, 4}).primitive_part() == from_ints({-1, 2}));
    CHECK(from_ints({2, -4}).primitive_part() == from_ints({-1, 2}));
}

TEST_CASE("gcd and square-free part")
{
    IntPolynomial p = from_roots({1, 1, 2});
    CHECK(poly_gcd(p, p.derivative()) == from_ints({-1, 1}));
    CHECK(square_free_part(p) == from_roots({1, 2}));
    CHECK(square_free_part(from_ints({5})) == from_ints({1}));
    CHECK(divide_exact(from_roots({1, 2}), from_ints({-1, 1})) == from_ints({-2, 1}));
}

TEST_CASE("sturm root counting")
{
    IntPolynomial p = from_roots({1, 2, 3});
    SturmChain sc(p);
    CHECK(sc.count_all() == 3);
    CHECK(sc.count_leq(Rational(0)) == 0);
    CHECK(sc.count_leq(Rational(1)) == 1);
    CHECK(sc.count_leq(Rational(5, 2)) == 2);
    CHECK(sc.count_in(Rational(1), Rational(3)) == 2);  // interval is half-open on the left
    std::vector<RootInterval> iv = isolate_real_roots(p);
    REQUIRE(iv.size() == 3);
    for (std::size_t i = 0; i + 1 < iv.size(); ++i)
        CHECK(iv[i].hi <= iv[i + 1].lo);
    // multiplicity-aware count
    IntPolynomial q = from_roots({0, 0, 2});
    CHECK(root_count_leq_mult(q, Rational(0)) == 2);
    CHECK(root_count_leq_mult(q, Rational(3)) == 3);
    CHECK(root_count_leq_mult(q, Rational(-1)) == 0);
}

TEST_CASE("real-rootedness certificates")
{
    CHECK_FALSE(is_real_rooted(from_ints({1, 0, 1})));
    CHECK(is_real_rooted(from_ints({1, 3, 3, 1})));
    CHECK(is_real_rooted(from_ints({-2, 0, 1})));  // irrational roots
    CHECK(is_real_rooted(IntPolynomial()));
    CHECK(is_real_rooted(from_ints({7})));
    CHECK(is_real_rooted(from_ints({0, 1})));
    CHECK_FALSE(is_real_rooted(from_ints({1, 1, 0, 1})));  // t^3 + t + 1
}

TEST_CASE("real-rootedness agrees with the discriminant on quadratics")
{
    for (int a = -20; a <= 20; ++a) {
        if (a == 0)
            continue;
        for (int b = -20; b <= 20; ++b)
            for (int c = -20; c <= 20; ++c) {
                bool disc = static_cast<long long>(b) * b - 4ll * a * c >= 0;
                CHECK(is_real_rooted(from_ints({c, b, a})) == disc);
            }
    }
}

TEST_CASE("gamma decomposition")
{
    GammaVector g1 = gamma_vector(from_ints({1, 1}), 1);
    CHECK(g1.gammas == std::vector<BigInt>{1});
    GammaVector g2 = gamma_vector(from_ints({0, 2}), 2);
    CHECK(g2.gammas == std::vector<BigInt>{0, 2});
    GammaVector g3 = gamma_vector(from_ints({1, 4, 1}), 2);
    CHECK(g3.gammas == std::vector<BigInt>{1, 2});
    CHECK(gamma_vector(IntPolynomial(), 4).gammas.empty());
    CHECK_THROWS_AS(gamma_vector(from_ints({1, 2}), 1), NotSymmetricError);
    CHECK_THROWS_AS(gamma_vector(from_ints({1, 1, 1}), 1), NotSymmetricError);
    // reconstruction identity on every palindrome with small entries
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                IntPolynomial p = from_ints({a, b, c, b, a});
                if (p.is_zero())
                    continue;
                GammaVector g = gamma_vector(p, 4);
                CHECK(from_gamma(g) == p);
            }
}

TEST_CASE("pairwise interlacing against a rational-root oracle")
{
    CHECK(pair_interlaces(from_ints({0, 1}), from_ints({1})));
    CHECK(pair_interlaces(from_ints({1, 1}), from_ints({1, 2, 1})));
    CHECK_FALSE(pair_interlaces(from_ints({1}), from_ints({0, 0, 1})));
    // all root multisets of size <= 3 over {-2,...,2}
    std::vector<std::vector<int>> multisets{{}};
    for (int size = 1; size <= 3; ++size)
        for (int a = -2; a <= 2; ++a)
            for (int b = a; b <= 2; ++b)
                for (int c = b; c <= 2; ++c) {
                    if (size == 1)
                        multisets.push_back({a});
                    else if (size == 2 && a == -2)
                        multisets.push_back({b, c});
                    else if (size == 3)
                        multisets.push_back({a, b, c});
                }
    std::sort(multisets.begin(), multisets.end());
    multisets.erase(std::unique(multisets.begin(), multisets.end()), multisets.end());
    for (const auto& u : multisets)
        for (const auto& v : multisets) {
            if (u.empty() && v.empty())
                continue;
            CHECK(pair_interlaces(from_roots(u), from_roots(v)) == roots_interlace(u, v));
        }
}

TEST_CASE("interlacing sequences")
{
    CHECK(interlacing_sequence({from_ints({0, 1}), from_ints({1})}));
    CHECK(interlacing_sequence(
        {from_ints({1}), from_ints({0, 1}), from_ints({0, 1}), from_ints({0, 1})}));
    CHECK_FALSE(interlacing_sequence({from_roots({0, 0}), from_roots({1})}));
    CHECK_THROWS_AS(interlacing_sequence({from_ints({1, 0, 1})}), NotRealRootedError);
}
