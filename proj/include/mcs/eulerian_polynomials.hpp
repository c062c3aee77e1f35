#ifndef MCS_EULERIAN_POLYNOMIALS_HPP
#define MCS_EULERIAN_POLYNOMIALS_HPP

#include "mcs/colored_permutation.hpp"
#include "mcs/numeric.hpp"
#include "mcs/polynomial.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace mcs {

/**
 * Which descent polynomial of the colored group (restricted to first color 0)
 * to build: the whole set, one last-letter color, all nonzero last-letter
 * colors, or a single (last value, last color) block.
 */
struct EulerianSelector {
    enum class Kind { Total, Color, Nonzero, Block } kind = Kind::Total;
    int s = 0;
    int j = 1;

    static EulerianSelector total() { return {Kind::Total, 0, 1}; }
    static EulerianSelector color(int s) { return {Kind::Color, s, 1}; }
    static EulerianSelector nonzero() { return {Kind::Nonzero, 0, 1}; }
    static EulerianSelector block(int j, int s) { return {Kind::Block, s, j}; }
};

enum class EulerianMethod { Bruteforce, Recurrence };

inline IntPolynomial eulerian_polynomial(int d, int r, const EulerianSelector& sel,
                                         EulerianMethod method)
{
    std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1, BigInt(0));
    auto want_color = [&](int s) {
        switch (sel.kind) {
        case EulerianSelector::Kind::Total:
            return true;
        case EulerianSelector::Kind::Color:
            return s == sel.s;
        case EulerianSelector::Kind::Nonzero:
            return s != 0;
        case EulerianSelector::Kind::Block:
            return s == sel.s;
        }
        return false;
    };
    if (method == EulerianMethod::Bruteforce) {
        for_each_colored_permutation(d, r, ColoredFilter::a_d(),
                                     [&](const ColoredPermutation& cp) {
                                         int s = cp.eps.back();
                                         int j = d + 1 - cp.sigma.back();
                                         if (!want_color(s))
                                             return;
                                         if (sel.kind == EulerianSelector::Kind::Block && j != sel.j)
                                             return;
                                         coeffs[static_cast<std::size_t>(descent_number(cp))] += 1;
                                     });
    } else {
        EulerianTable t = EulerianTable::recurrence(d, r);
        for (int j = 1; j <= d; ++j) {
            if (sel.kind == EulerianSelector::Kind::Block && j != sel.j)
                continue;
            for (int s = 0; s < r; ++s) {
                if (!want_color(s))
                    continue;
                for (int m = 0; m <= d; ++m)
                    coeffs[static_cast<std::size_t>(m)] += t.count(j, s, m);
            }
        }
    }
    return IntPolynomial(std::move(coeffs));
}

enum class GammaWhich { Color0, Nonzero };

// Symmetry degree of the corresponding descent polynomial: d-1 for the
// color-0 set, d for the nonzero-color set.
inline long gamma_center(int d, GammaWhich which)
{
    return which == GammaWhich::Color0 ? d - 1 : d;
}

/**
 * Gamma coefficients read off the slide statistic: gamma_i counts the
 * elements with i descents and i+1 slides. Must coincide with the polynomial
 * decomposition of the matching descent polynomial.
 */
inline GammaVector gamma_via_slides(int d, int r, GammaWhich which)
{
    const long center = gamma_center(d, which);
    GammaVector gv;
    gv.center = center;
    gv.gammas.assign(static_cast<std::size_t>(center / 2) + 1, BigInt(0));
    for_each_colored_permutation(d, r, ColoredFilter::a_d(), [&](const ColoredPermutation& cp) {
        int s = cp.eps.back();
        if ((which == GammaWhich::Color0) != (s == 0))
            return;
        int des = descent_number(cp);
        if (des > center / 2)
            return;
        if (slide_count(cp) == des + 1)
            gv.gammas[static_cast<std::size_t>(des)] += 1;
    });
    return gv;
}

// Count of elements with k descents and s+1 slides in the color-0 or
// nonzero-color set; the raw statistic behind the gamma vectors.
inline BigInt slide_descent_count(int d, int r, GammaWhich which, int k, int s)
{
    BigInt count = 0;
    for_each_colored_permutation(d, r, ColoredFilter::a_d(), [&](const ColoredPermutation& cp) {
        int last = cp.eps.back();
        if ((which == GammaWhich::Color0) != (last == 0))
            return;
        if (descent_number(cp) == k && slide_count(cp) == s + 1)
            count += 1;
    });
    return count;
}

}  // namespace mcs

#endif
