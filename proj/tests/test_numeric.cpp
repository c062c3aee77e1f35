#include "test_helpers.hpp"

#include <doctest.h>

using namespace mcs;

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    for (long n = 0; n <= 12; ++n)
        for (long k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("integer powers")
{
    CHECK(ipow(0, 0) == 1);
    CHECK(ipow(0, 5) == 0);
    CHECK(ipow(3, 4) == 81);
    CHECK(ipow(BigInt(-2), 3) == -8);
    CHECK(ipow(BigInt(-2), 4) == 16);
    CHECK(ipow(BigInt(10), 30) == BigInt("1000000000000000000000000000000"));
}
