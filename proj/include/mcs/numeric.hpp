#ifndef MCS_NUMERIC_HPP
#define MCS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mcs {

// All counting is exact: arbitrary-precision integers everywhere, rationals
// only for root-location queries. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInputError : Error { using Error::Error; };
struct EmptyFacetError : Error { using Error::Error; };
struct NotABijectionError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct NonAdmissibleIotaError : Error { using Error::Error; };
struct NotAFaceError : Error { using Error::Error; };
struct NotSymmetricError : Error { using Error::Error; };
struct NotRealRootedError : Error { using Error::Error; };
struct InvalidAlphaError : Error { using Error::Error; };
struct ApexMissingError : Error { using Error::Error; };
struct IsoFailureError : Error { using Error::Error; };

// b^e with the convention 0^0 = 1.
inline BigInt ipow(const BigInt& base, long e)
{
    if (e < 0)
        throw Error("ipow: negative exponent");
    BigInt result = 1;
    BigInt b = base;
    while (e > 0) {
        if (e & 1)
            result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

inline BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step
    }
    return result;
}

inline int sign_of(const BigInt& x) { return x.sign(); }

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace mcs

#endif
