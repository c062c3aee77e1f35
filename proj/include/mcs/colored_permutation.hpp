#ifndef MCS_COLORED_PERMUTATION_HPP
#define MCS_COLORED_PERMUTATION_HPP

#include "mcs/numeric.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mcs {

/**
 * Element of the r-colored permutation group on [d]: a permutation sigma with
 * a color in {0,...,r-1} attached to every position.
 */
struct ColoredPermutation {
    std::vector<int> sigma;  // 1-based values, a bijection on [d]
    std::vector<int> eps;    // colors
    int r = 1;

    int d() const { return static_cast<int>(sigma.size()); }

    std::string str() const
    {
        std::string s;
        for (int i = 0; i < d(); ++i) {
            if (i)
                s += " ";
            s += std::to_string(sigma[static_cast<std::size_t>(i)]) + "^"
                 + std::to_string(eps[static_cast<std::size_t>(i)]);
        }
        return s;
    }
};

// Descents are taken against the padding value d+1 with color 0, so the last
// position is a descent exactly when it carries a nonzero color.
inline std::vector<int> descent_set(const ColoredPermutation& cp)
{
    const int d = cp.d();
    std::vector<int> out;
    for (int i = 1; i <= d; ++i) {
        int s1 = cp.sigma[static_cast<std::size_t>(i - 1)];
        int e1 = cp.eps[static_cast<std::size_t>(i - 1)];
        int s2 = (i == d) ? d + 1 : cp.sigma[static_cast<std::size_t>(i)];
        int e2 = (i == d) ? 0 : cp.eps[static_cast<std::size_t>(i)];
        if (e1 > e2 || (e1 == e2 && s1 > s2))
            out.push_back(i);
    }
    return out;
}

inline int descent_number(const ColoredPermutation& cp)
{
    return static_cast<int>(descent_set(cp).size());
}

/**
 * Number of maximal decreasing runs of length >= 2 in the padded colored word
 * infty^(0) sigma_1^(e_1) ... sigma_d^(e_d) (d+1)^(0), where symbols compare
 * by color first and by value inside a color, and infty with color 0 exceeds
 * every color-0 value.
 */
inline int slide_count(const ColoredPermutation& cp)
{
    const int d = cp.d();
    // padded word as (color, value, is_infinity)
    struct Sym {
        int e;
        int v;
        bool inf;
    };
    std::vector<Sym> w;
    w.push_back({0, 0, true});
    for (int i = 0; i < d; ++i)
        w.push_back({cp.eps[static_cast<std::size_t>(i)], cp.sigma[static_cast<std::size_t>(i)], false});
    w.push_back({0, d + 1, false});
    auto colored_less = [](const Sym& a, const Sym& b) {
        if (a.e != b.e)
            return a.e < b.e;
        if (a.inf)
            return false;
        if (b.inf)
            return true;
        return a.v < b.v;
    };
    int slides = 0;
    std::size_t run_start = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (colored_less(w[i], w[i + 1])) {  // asterisk between i and i+1
            if (i + 1 - run_start >= 2)
                ++slides;
            run_start = i + 1;
        }
    }
    if (w.size() - run_start >= 2)
        ++slides;
    return slides;
}

struct ColoredFilter {
    bool eps1_zero = false;
    std::optional<int> last_value;
    std::optional<int> last_color;

    static ColoredFilter all() { return {}; }
    static ColoredFilter a_d() { return {true, std::nullopt, std::nullopt}; }
    // the block with sigma_d = d+1-j and color s, inside eps_1 = 0
    static ColoredFilter block(int d, int j, int s)
    {
        return {true, d + 1 - j, s};
    }
};

/**
 * Exhaustive, deterministic enumeration: permutations in lexicographic order,
 * colors varying fastest (rightmost position first).
 */
inline void for_each_colored_permutation(int d, int r, const ColoredFilter& filter,
                                         const std::function<void(const ColoredPermutation&)>& fn)
{
    if (d < 1 || r < 1)
        throw Error("for_each_colored_permutation: d and r must be positive");
    std::vector<int> sigma(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        sigma[static_cast<std::size_t>(i)] = i + 1;
    ColoredPermutation cp;
    cp.r = r;
    do {
        if (filter.last_value && sigma.back() != *filter.last_value)
            continue;
        std::vector<int> eps(static_cast<std::size_t>(d), 0);
        while (true) {
            bool ok = true;
            if (filter.eps1_zero && eps[0] != 0)
                ok = false;
            if (filter.last_color && eps.back() != *filter.last_color)
                ok = false;
            if (ok) {
                cp.sigma = sigma;
                cp.eps = eps;
                fn(cp);
            }
            // odometer, rightmost fastest
            int pos = d - 1;
            while (pos >= 0) {
                if (++eps[static_cast<std::size_t>(pos)] < r)
                    break;
                eps[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

inline std::vector<ColoredPermutation> enumerate_colored(int d, int r, const ColoredFilter& filter)
{
    std::vector<ColoredPermutation> out;
    for_each_colored_permutation(d, r, filter,
                                 [&](const ColoredPermutation& cp) { out.push_back(cp); });
    return out;
}

// Number of elements with eps_1 = 0, sigma_d = d+1-j, eps_d = s and exactly m
// descents, counted by exhaustive enumeration.
inline BigInt eulerian_count_bruteforce(int d, int j, int m, int s, int r)
{
    if (j < 1 || j > d || s < 0 || s >= r)
        throw Error("eulerian_count_bruteforce: index out of range");
    BigInt count = 0;
    for_each_colored_permutation(d, r, ColoredFilter::block(d, j, s),
                                 [&](const ColoredPermutation& cp) {
                                     if (descent_number(cp) == m)
                                         count += 1;
                                 });
    return count;
}

/**
 * Descent-count table A(n, j, s, m) for the colored group of size n: the
 * number of elements with first color 0, last value n+1-j, last color s and m
 * descents. Built either by exhaustive counting or bottom-up from the group
 * of size n-1 (peeling the last letter).
 */
class EulerianTable {
public:
    EulerianTable(int n, int r) : n_(n), r_(r)
    {
        a_.assign(static_cast<std::size_t>(n),
                  std::vector<std::vector<BigInt>>(
                      static_cast<std::size_t>(r),
                      std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0))));
    }

    int n() const { return n_; }
    int r() const { return r_; }

    const BigInt& count(int j, int s, int m) const
    {
        static const BigInt zero = 0;
        if (j < 1 || j > n_ || s < 0 || s >= r_ || m < 0 || m > n_)
            return zero;
        return a_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)]
                 [static_cast<std::size_t>(m)];
    }

    BigInt& at(int j, int s, int m)
    {
        return a_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)]
                 [static_cast<std::size_t>(m)];
    }

    // (A(n, k+1, s, m))_{m=0..n-1}
    std::vector<BigInt> h_row(int s, int k) const
    {
        std::vector<BigInt> row;
        for (int m = 0; m <= n_ - 1; ++m)
            row.push_back(count(k + 1, s, m));
        return row;
    }

    BigInt total() const
    {
        BigInt t = 0;
        for (const auto& js : a_)
            for (const auto& sm : js)
                for (const auto& x : sm)
                    t += x;
        return t;
    }

    bool operator==(const EulerianTable& o) const
    {
        return n_ == o.n_ && r_ == o.r_ && a_ == o.a_;
    }

    static EulerianTable bruteforce(int n, int r)
    {
        EulerianTable t(n, r);
        for_each_colored_permutation(n, r, ColoredFilter::a_d(),
                                     [&](const ColoredPermutation& cp) {
                                         int j = n + 1 - cp.sigma.back();
                                         int s = cp.eps.back();
                                         t.at(j, s, descent_number(cp)) += 1;
                                     });
        return t;
    }

    static EulerianTable recurrence(int n, int r)
    {
        EulerianTable cur(1, r);
        cur.at(1, 0, 0) = 1;
        for (int size = 2; size <= n; ++size) {
            const int D = size - 1;  // previous group size
            EulerianTable next(size, r);
            for (int k = 0; k <= D; ++k)
                for (int m = 0; m <= size; ++m) {
                    // last letter has color 0
                    BigInt v = 0;
                    for (int j = k; j <= D - 1; ++j)
                        v += cur.count(j + 1, 0, m);
                    for (int s = 1; s < r; ++s)
                        for (int j = 0; j <= D - 1; ++j)
                            v += cur.count(j + 1, s, m);
                    if (m >= 1)
                        for (int j = 0; j <= k - 1; ++j)
                            v += cur.count(j + 1, 0, m - 1);
                    next.at(k + 1, 0, m) = v;
                    // last letter has color s != 0
                    for (int s = 1; s < r; ++s) {
                        BigInt w = 0;
                        for (int j = k; j <= D - 1; ++j)
                            w += cur.count(j + 1, s, m);
                        for (int l = 1; l <= s - 1; ++l)
                            for (int j = 0; j <= D - 1; ++j)
                                w += cur.count(j + 1, l, m);
                        if (m >= 1) {
                            for (int j = 0; j <= D - 1; ++j)
                                w += cur.count(j + 1, 0, m - 1);
                            for (int j = 0; j <= k - 1; ++j)
                                w += cur.count(j + 1, s, m - 1);
                            for (int l = s + 1; l <= r - 1; ++l)
                                for (int j = 0; j <= D - 1; ++j)
                                    w += cur.count(j + 1, l, m - 1);
                        }
                        next.at(k + 1, s, m) = w;
                    }
                }
            cur = std::move(next);
        }
        return cur;
    }

private:
    int n_, r_;
    std::vector<std::vector<std::vector<BigInt>>> a_;
};

/**
 * Ordered colored partitions T_1 | ... | T_{t+1} of {1,...,d+1}: blocks are
 * disjoint, nonempty and cover everything; the last block has maximum d+1-j
 * and carries color 0 throughout; the first block must contain a color-0
 * element (its minimum in the color-then-value order has color 0); colors
 * elsewhere are free. Counted by exhaustive enumeration of block assignments
 * and colorings.
 */
inline BigInt bar_partition_count(int d, int t, int j, int r)
{
    if (d < 0 || t < 0 || j < 0 || j > d || r < 1)
        throw Error("bar_partition_count: index out of range");
    const int n = d + 1;        // elements 1..n
    const int blocks = t + 1;   // block index t is the final block
    const int special_max = d + 1 - j;
    BigInt total = 0;
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    auto color_count = [&](const std::vector<int>& asg) -> BigInt {
        // elements of the final block are pinned to color 0, the rest get
        // every coloring; keep only those giving the first block a color-0
        // element
        if (blocks == 1)
            return 1;
        std::vector<int> colorable;
        for (int e = 0; e < n; ++e)
            if (asg[static_cast<std::size_t>(e)] != blocks - 1)
                colorable.push_back(e);
        BigInt good = 0;
        std::vector<int> col(colorable.size(), 0);
        while (true) {
            bool first_has_zero = false;
            for (std::size_t i = 0; i < colorable.size(); ++i)
                if (asg[static_cast<std::size_t>(colorable[i])] == 0 && col[i] == 0)
                    first_has_zero = true;
            if (first_has_zero)
                good += 1;
            std::size_t pos = colorable.size();
            while (pos > 0) {
                if (++col[pos - 1] < r)
                    break;
                col[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                break;
        }
        return good;
    };
    auto rec = [&](auto&& self, int e) -> void {
        if (e == n) {
            std::vector<bool> used(static_cast<std::size_t>(blocks), false);
            int special_seen_max = -1;
            for (int x = 0; x < n; ++x) {
                used[static_cast<std::size_t>(assign[static_cast<std::size_t>(x)])] = true;
                if (assign[static_cast<std::size_t>(x)] == blocks - 1)
                    special_seen_max = x + 1;
            }
            for (bool u : used)
                if (!u)
                    return;
            if (special_seen_max != special_max)
                return;
            total += color_count(assign);
            return;
        }
        for (int b = 0; b < blocks; ++b) {
            assign[static_cast<std::size_t>(e)] = b;
            self(self, e + 1);
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace mcs

#endif
