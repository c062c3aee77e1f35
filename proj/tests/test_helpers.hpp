#ifndef MCS_TEST_HELPERS_HPP
#define MCS_TEST_HELPERS_HPP

#include "mcs/mcs.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace mcs_test {

inline mcs::SimplicialComplex edge_complex()
{
    return mcs::complex_from_facets({{"1", "2"}});
}

inline mcs::SimplicialComplex simplex2()
{
    return mcs::complex_from_facets({{"1", "2", "3"}});
}

inline mcs::SimplicialComplex hollow_triangle()
{
    return mcs::complex_from_facets({{"1", "2"}, {"2", "3"}, {"1", "3"}});
}

inline mcs::SimplicialComplex glued_triangles()
{
    return mcs::complex_from_facets({{"1", "2", "3"}, {"2", "3", "4"}});
}

inline std::vector<mcs::SimplicialComplex> test_complexes()
{
    return {edge_complex(), simplex2(), hollow_triangle(), glued_triangles()};
}

// Independent face-count oracle: walk every subset of the vertex union and
// test containment in some facet directly, bypassing the complex machinery.
inline std::vector<mcs::BigInt> oracle_f_vector(
    const std::vector<std::vector<std::string>>& facets)
{
    std::set<std::string> vertex_set;
    for (const auto& f : facets)
        vertex_set.insert(f.begin(), f.end());
    std::vector<std::string> verts(vertex_set.begin(), vertex_set.end());
    std::vector<std::set<std::string>> facet_sets;
    for (const auto& f : facets)
        facet_sets.emplace_back(f.begin(), f.end());
    std::size_t max_size = 0;
    std::vector<std::size_t> counts(verts.size() + 1, 0);
    const std::size_t n = verts.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
        std::set<std::string> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i))
                sub.insert(verts[i]);
        bool contained = false;
        for (const auto& fs : facet_sets)
            if (std::includes(fs.begin(), fs.end(), sub.begin(), sub.end())) {
                contained = true;
                break;
            }
        if (contained) {
            ++counts[sub.size()];
            max_size = std::max(max_size, sub.size());
        }
    }
    std::vector<mcs::BigInt> f;
    f.emplace_back(1);
    for (std::size_t k = 1; k <= max_size; ++k)
        f.emplace_back(static_cast<long long>(counts[k]));
    return f;
}

// Independent h-vector oracle: expand sum_i f_{i-1} t^i (1-t)^(d-i) by
// polynomial multiplication instead of the binomial double sum.
inline std::vector<mcs::BigInt> oracle_f_to_h(const std::vector<mcs::BigInt>& f)
{
    using mcs::IntPolynomial;
    const long d = static_cast<long>(f.size()) - 1;
    IntPolynomial one_minus_t(std::vector<mcs::BigInt>{1, -1});
    IntPolynomial acc;
    for (long i = 0; i <= d; ++i) {
        IntPolynomial term = IntPolynomial::monomial(static_cast<std::size_t>(i),
                                                     f[static_cast<std::size_t>(i)]);
        for (long j = 0; j < d - i; ++j)
            term = term * one_minus_t;
        acc = acc + term;
    }
    std::vector<mcs::BigInt> h(f.size(), mcs::BigInt(0));
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = acc.coeff(i);
    return h;
}

// number of surjections from an l-set onto a (k+1)-set; the classical count
// of strict chains of nonempty subsets ending at a fixed l-set
inline mcs::BigInt surjections(long l, long k1)
{
    mcs::BigInt total = 0;
    for (long i = 0; i <= k1; ++i) {
        mcs::BigInt term = mcs::binomial(k1, i) * mcs::ipow(mcs::BigInt(i), l);
        total += ((k1 - i) % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace mcs_test

#endif
