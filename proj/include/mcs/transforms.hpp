#ifndef MCS_TRANSFORMS_HPP
#define MCS_TRANSFORMS_HPP

#include "mcs/colored_permutation.hpp"
#include "mcs/numeric.hpp"
#include "mcs/simplicial_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcs {

/**
 * Square matrix of exact integers. Index conventions are fixed by the
 * constructors: the face-count transform F has rows l = output index and
 * columns m addressing the input entry f_{m-1}; the h-transform R has rows
 * m = output index and columns k = input index.
 */
struct IntegerMatrix {
    std::vector<std::vector<BigInt>> a;

    static IntegerMatrix zero(std::size_t n)
    {
        IntegerMatrix m;
        m.a.assign(n, std::vector<BigInt>(n, BigInt(0)));
        return m;
    }

    static IntegerMatrix identity(std::size_t n)
    {
        IntegerMatrix m = zero(n);
        for (std::size_t i = 0; i < n; ++i)
            m.a[i][i] = 1;
        return m;
    }

    std::size_t size() const { return a.size(); }

    bool operator==(const IntegerMatrix& o) const { return a == o.a; }

    IntegerMatrix operator*(const IntegerMatrix& o) const
    {
        const std::size_t n = size();
        IntegerMatrix m = zero(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (a[i][k] != 0)
                    for (std::size_t j = 0; j < n; ++j)
                        m.a[i][j] += a[i][k] * o.a[k][j];
        return m;
    }

    std::vector<BigInt> operator*(const std::vector<BigInt>& v) const
    {
        const std::size_t n = size();
        std::vector<BigInt> out(n, BigInt(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i] += a[i][j] * v[j];
        return out;
    }

    std::vector<BigInt> column(std::size_t j) const
    {
        std::vector<BigInt> out;
        for (const auto& row : a)
            out.push_back(row[j]);
        return out;
    }
};

/**
 * Parameters of a chain count: the number of linearly ordered chains of
 * length k+1 of r-multichains ending at a fixed multichain whose level sizes
 * grow by alpha_1, ..., alpha_r (alpha_1 >= 1).
 */
struct ChainCountParams {
    long k = 0;
    std::vector<long> alphas;

    int r() const { return static_cast<int>(alphas.size()); }
};

enum class ChainCountMethod { Closed, Recurrence };

namespace detail {

inline BigInt chain_count_closed(long k, const std::vector<long>& alphas)
{
    if (k < 0)
        return 0;
    long tail = 0;
    for (std::size_t i = 1; i < alphas.size(); ++i)
        tail += alphas[i];
    BigInt total = 0;
    for (long i = 0; i <= k; ++i) {
        BigInt term = binomial(k, i) * ipow(BigInt(i + 1), tail)
                      * (ipow(BigInt(i + 1), alphas[0]) - ipow(BigInt(i), alphas[0]));
        total += ((k - i) % 2 == 0) ? term : -term;
    }
    return total;
}

inline BigInt chain_count_rec(long k, const std::vector<long>& alphas,
                              std::map<std::pair<long, std::vector<long>>, BigInt>& memo)
{
    if (k < 0)
        return 0;
    if (k == 0)
        return 1;
    auto key = std::make_pair(k, alphas);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    const std::size_t r = alphas.size();
    // sum over all sub-level choices k_1 >= 1, k_i >= 0 of
    // prod C(alpha_i, k_i) * P_{k-1}(k_1..k_r), minus P_{k-1}(alphas)
    std::vector<long> ks(r, 0);
    BigInt total = 0;
    auto rec = [&](auto&& self, std::size_t pos, const BigInt& weight) -> void {
        if (pos == r) {
            total += weight * chain_count_rec(k - 1, ks, memo);
            return;
        }
        const long lo = (pos == 0) ? 1 : 0;
        for (long v = lo; v <= alphas[pos]; ++v) {
            ks[pos] = v;
            self(self, pos + 1, weight * binomial(alphas[pos], v));
        }
    };
    rec(rec, 0, BigInt(1));
    total -= chain_count_rec(k - 1, alphas, memo);
    memo[key] = total;
    return total;
}

}  // namespace detail

inline BigInt chain_count(const ChainCountParams& params, ChainCountMethod method)
{
    if (params.alphas.empty() || params.alphas[0] < 1)
        throw InvalidAlphaError("chain_count: alpha_1 must be at least 1");
    for (long a : params.alphas)
        if (a < 0)
            throw InvalidAlphaError("chain_count: negative alpha");
    if (method == ChainCountMethod::Closed)
        return detail::chain_count_closed(params.k, params.alphas);
    std::map<std::pair<long, std::vector<long>>, BigInt> memo;
    return detail::chain_count_rec(params.k, params.alphas, memo);
}

// Entry of the face-count transform: row 0 is (1, 0, ..., 0); for l >= 1,
// f_{l,m} = sum_i (-1)^(l-1-i) C(l-1,i) [(ri+r)^m - (ri+r-1)^m].
inline BigInt f_matrix_entry(long l, long m, int r)
{
    if (l == 0)
        return m == 0 ? 1 : 0;
    BigInt total = 0;
    for (long i = 0; i <= l - 1; ++i) {
        BigInt term = binomial(l - 1, i)
                      * (ipow(BigInt(r) * i + r, m) - ipow(BigInt(r) * i + r - 1, m));
        total += ((l - 1 - i) % 2 == 0) ? term : -term;
    }
    return total;
}

inline IntegerMatrix f_matrix(long d, int r)
{
    IntegerMatrix m = IntegerMatrix::zero(static_cast<std::size_t>(d) + 1);
    for (long l = 0; l <= d; ++l)
        for (long c = 0; c <= d; ++c)
            m.a[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)] = f_matrix_entry(l, c, r);
    return m;
}

// Face counts of the r-fold multichain subdivision from the face counts of
// the base complex.
inline FVector transform_f(const FVector& f, int r)
{
    const long d = static_cast<long>(f.size()) - 1;
    return f_matrix(d, r) * f;
}

/**
 * One face count of the subdivision computed the slow way: a sum of
 * binomially weighted chain counts over all level-size profiles
 * 1 <= l_1 <= ... <= l_r = l. Cross-checks transform_f entry k+1.
 */
inline BigInt f_via_multichain_sum(const SimplicialComplex& sc, int r, long k)
{
    const FVector f = sc.f_vector();
    const long d = static_cast<long>(f.size()) - 1;
    if (k < 0 || k > d - 1)
        throw Error("f_via_multichain_sum: k out of range");
    BigInt total = 0;
    std::vector<long> ls(static_cast<std::size_t>(r));
    for (long l = 1; l <= d; ++l) {
        ls.back() = l;
        BigInt inner = 0;
        auto rec = [&](auto&& self, int pos, const BigInt& weight) -> void {
            // fill ls[pos] with 1 <= ls[pos] <= ls[pos+1], weight picks up
            // C(ls[pos+1], ls[pos])
            if (pos < 0) {
                std::vector<long> alphas(static_cast<std::size_t>(r));
                alphas[0] = ls[0];
                for (int i = 1; i < r; ++i)
                    alphas[static_cast<std::size_t>(i)] =
                        ls[static_cast<std::size_t>(i)] - ls[static_cast<std::size_t>(i - 1)];
                inner += weight * chain_count(ChainCountParams{k, alphas}, ChainCountMethod::Closed);
                return;
            }
            for (long v = 1; v <= ls[static_cast<std::size_t>(pos + 1)]; ++v) {
                ls[static_cast<std::size_t>(pos)] = v;
                self(self, pos - 1,
                     weight * binomial(ls[static_cast<std::size_t>(pos + 1)], v));
            }
        };
        rec(rec, r - 2, BigInt(1));
        total += inner * f[static_cast<std::size_t>(l)];
    }
    return total;
}

// Conversion matrix taking f = (f_-1,...,f_{d-1}) to h = (h_0,...,h_d);
// unitriangular, so exactly invertible, with the closed-form inverse below.
inline IntegerMatrix h_conversion_matrix(long d)
{
    IntegerMatrix m = IntegerMatrix::zero(static_cast<std::size_t>(d) + 1);
    for (long jj = 0; jj <= d; ++jj)
        for (long i = 0; i <= jj; ++i) {
            BigInt v = binomial(d - i, jj - i);
            m.a[static_cast<std::size_t>(jj)][static_cast<std::size_t>(i)] =
                ((jj - i) % 2 == 0) ? v : -v;
        }
    for (long i = 0; i <= d; ++i)
        if (m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 1)
            throw Error("h_conversion_matrix: not unitriangular");
    return m;
}

inline IntegerMatrix h_conversion_matrix_inverse(long d)
{
    IntegerMatrix m = IntegerMatrix::zero(static_cast<std::size_t>(d) + 1);
    for (long jj = 0; jj <= d; ++jj)
        for (long i = 0; i <= jj; ++i)
            m.a[static_cast<std::size_t>(jj)][static_cast<std::size_t>(i)] = binomial(d - i, jj - i);
    return m;
}

// h-transform of the subdivision: entry (m, k) counts the colored
// permutations of the group of size d+1 with first color 0, last color 0,
// last value d+1-k and m descents.
inline IntegerMatrix h_matrix(long d, int r)
{
    EulerianTable t = EulerianTable::recurrence(static_cast<int>(d) + 1, r);
    IntegerMatrix m = IntegerMatrix::zero(static_cast<std::size_t>(d) + 1);
    for (long mm = 0; mm <= d; ++mm)
        for (long k = 0; k <= d; ++k)
            m.a[static_cast<std::size_t>(mm)][static_cast<std::size_t>(k)] =
                t.count(static_cast<int>(k) + 1, 0, static_cast<int>(mm));
    return m;
}

inline HVector transform_h(const HVector& h, int r)
{
    const long d = static_cast<long>(h.size()) - 1;
    return h_matrix(d, r) * h;
}

}  // namespace mcs

#endif
