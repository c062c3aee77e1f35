#ifndef MCS_POLYNOMIAL_HPP
#define MCS_POLYNOMIAL_HPP

#include "mcs/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace mcs {

/**
 * Dense univariate polynomial with exact integer coefficients, lowest degree
 * first. The zero polynomial has an empty coefficient vector. All root
 * certification below (real-rootedness, interlacing) runs on Sturm sequences
 * over exact arithmetic.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(const BigInt& v)
    {
        return IntPolynomial(std::vector<BigInt>{v});
    }
    // t^k
    static IntPolynomial monomial(std::size_t k, const BigInt& v = 1)
    {
        std::vector<BigInt> c(k + 1, BigInt(0));
        c[k] = v;
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    const BigInt& leading() const
    {
        static const BigInt zero = 0;
        return c_.empty() ? zero : c_.back();
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator-() const
    {
        std::vector<BigInt> r(c_);
        for (auto& x : r)
            x = -x;
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator+(const IntPolynomial& o) const
    {
        std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            r[i] += o.c_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

    IntPolynomial operator*(const IntPolynomial& o) const
    {
        if (is_zero() || o.is_zero())
            return IntPolynomial();
        std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const BigInt& s) const
    {
        if (s == 0)
            return IntPolynomial();
        std::vector<BigInt> r(c_);
        for (auto& x : r)
            x *= s;
        return IntPolynomial(std::move(r));
    }

    IntPolynomial derivative() const
    {
        if (c_.size() <= 1)
            return IntPolynomial();
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * BigInt(i);
        return IntPolynomial(std::move(r));
    }

    Rational eval(const Rational& x) const
    {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + Rational(c_[i]);
        return acc;
    }

    BigInt eval(const BigInt& x) const
    {
        BigInt acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    int sign_at(const Rational& x) const
    {
        return eval(x).sign();
    }

    // sign of p(x) as x -> ±infinity
    int sign_at_pos_inf() const { return is_zero() ? 0 : leading().sign(); }
    int sign_at_neg_inf() const
    {
        if (is_zero())
            return 0;
        int s = leading().sign();
        return (degree() % 2 == 0) ? s : -s;
    }

    // positive gcd of coefficients; content of the zero polynomial is 0
    BigInt content() const
    {
        BigInt g = 0;
        for (const auto& x : c_)
            g = boost::multiprecision::gcd(g, x);
        return g;
    }

    IntPolynomial primitive_part() const
    {
        if (is_zero())
            return IntPolynomial();
        BigInt g = content();
        if (leading() < 0)
            g = -g;
        std::vector<BigInt> r(c_);
        for (auto& x : r)
            x /= g;
        return IntPolynomial(std::move(r));
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            if (!first)
                os << (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0)
                os << "-";
            BigInt a = boost::multiprecision::abs(c_[i]);
            if (a != 1 || i == 0)
                os << a.str();
            if (i >= 1)
                os << "t";
            if (i >= 2)
                os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) { return p * s; }

// Divide by the (positive) content: rescales without touching signs.
inline IntPolynomial divide_content_pos(const IntPolynomial& f)
{
    if (f.is_zero())
        return f;
    BigInt ct = f.content();
    if (ct <= 1)
        return f;
    std::vector<BigInt> r(f.coeffs());
    for (auto& x : r)
        x /= ct;
    return IntPolynomial(std::move(r));
}

// Remainder of f modulo g scaled by a *positive* constant, so the sign class
// of the true remainder is preserved (needed for Sturm chains). g != 0.
inline IntPolynomial pseudo_rem_pos(IntPolynomial f, const IntPolynomial& g)
{
    const long dg = g.degree();
    const BigInt lg = g.leading();
    const BigInt alg = boost::multiprecision::abs(lg);
    const int slg = lg.sign();
    while (!f.is_zero() && f.degree() >= dg) {
        const long shift = f.degree() - dg;
        const BigInt lf = f.leading();
        f = f * alg - g * IntPolynomial::monomial(static_cast<std::size_t>(shift), lf * slg);
        f = divide_content_pos(f);
    }
    return f;
}

// Exact division: q with f = q*g, throws if g does not divide f.
inline IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g)
{
    if (g.is_zero())
        throw Error("divide_exact: division by zero polynomial");
    if (f.is_zero())
        return IntPolynomial();
    std::vector<BigInt> rem(f.coeffs());
    long df = f.degree(), dg = g.degree();
    if (df < dg)
        throw Error("divide_exact: not divisible");
    std::vector<BigInt> q(static_cast<std::size_t>(df - dg) + 1, BigInt(0));
    for (long k = df - dg; k >= 0; --k) {
        BigInt num = rem[static_cast<std::size_t>(k + dg)];
        if (num % g.leading() != 0)
            throw Error("divide_exact: not divisible");
        BigInt qk = num / g.leading();
        q[static_cast<std::size_t>(k)] = qk;
        if (qk != 0)
            for (long i = 0; i <= dg; ++i)
                rem[static_cast<std::size_t>(k + i)] -= qk * g.coeff(static_cast<std::size_t>(i));
    }
    for (const auto& x : rem)
        if (x != 0)
            throw Error("divide_exact: not divisible");
    return IntPolynomial(std::move(q));
}

// Primitive positive gcd via a primitive pseudo-remainder sequence.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b)
{
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem_pos(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return IntPolynomial();
    return a.primitive_part();
}

inline IntPolynomial square_free_part(const IntPolynomial& p)
{
    if (p.degree() <= 0)
        return p.primitive_part();
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0)
        return p.primitive_part();
    return divide_exact(p.primitive_part(), g).primitive_part();
}

/**
 * Sturm chain of the square-free part of p. Sign-variation counts give exact
 * numbers of distinct real roots in half-open intervals (a, b].
 */
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p)
    {
        IntPolynomial s = square_free_part(p);
        if (s.degree() <= 0)
            return;  // constants carry no roots
        chain_.push_back(s);
        chain_.push_back(divide_content_pos(s.derivative()));
        while (chain_.back().degree() > 0) {
            IntPolynomial r =
                divide_content_pos(-pseudo_rem_pos(chain_[chain_.size() - 2], chain_.back()));
            if (r.is_zero())
                break;  // cannot happen for a square-free s, kept as a guard
            chain_.push_back(std::move(r));
        }
    }

    bool trivial() const { return chain_.empty(); }
    long squarefree_degree() const { return chain_.empty() ? 0 : chain_.front().degree(); }
    const IntPolynomial& squarefree() const { return chain_.front(); }

    int variations_at(const Rational& x) const
    {
        int v = 0, prev = 0;
        for (const auto& q : chain_) {
            int s = q.sign_at(x);
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++v;
            prev = s;
        }
        return v;
    }

    int variations_neg_inf() const
    {
        int v = 0, prev = 0;
        for (const auto& q : chain_) {
            int s = q.sign_at_neg_inf();
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++v;
            prev = s;
        }
        return v;
    }

    int variations_pos_inf() const
    {
        int v = 0, prev = 0;
        for (const auto& q : chain_) {
            int s = q.sign_at_pos_inf();
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++v;
            prev = s;
        }
        return v;
    }

    // distinct real roots in (a, b], a < b
    int count_in(const Rational& a, const Rational& b) const
    {
        if (trivial())
            return 0;
        return variations_at(a) - variations_at(b);
    }

    int count_leq(const Rational& x) const
    {
        if (trivial())
            return 0;
        return variations_neg_inf() - variations_at(x);
    }

    int count_all() const
    {
        if (trivial())
            return 0;
        return variations_neg_inf() - variations_pos_inf();
    }

private:
    std::vector<IntPolynomial> chain_;
};

// Exact decision: every complex root of p is real. Constants and the zero
// polynomial count as real-rooted.
inline bool is_real_rooted(const IntPolynomial& p)
{
    if (p.degree() <= 0)
        return true;
    SturmChain sc(p);
    return sc.count_all() == sc.squarefree_degree();
}

// All real roots lie in (-bound, bound).
inline Rational cauchy_bound(const IntPolynomial& p)
{
    BigInt m = 0;
    for (const auto& x : p.coeffs())
        m = std::max(m, BigInt(boost::multiprecision::abs(x)));
    return Rational(m, BigInt(boost::multiprecision::abs(p.leading()))) + 1;
}

struct RootInterval {
    Rational lo, hi;  // half-open (lo, hi], exactly one distinct root inside
};

// Disjoint isolating intervals for the distinct real roots of p, sorted.
inline std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p)
{
    std::vector<RootInterval> out;
    if (p.degree() <= 0)
        return out;
    SturmChain sc(p);
    if (sc.trivial() || sc.count_all() == 0)
        return out;
    Rational b = cauchy_bound(sc.squarefree());
    std::vector<RootInterval> stack{{-b, b}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        int n = sc.count_in(iv.lo, iv.hi);
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        stack.push_back({mid, iv.hi});
        stack.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b2) { return a.lo < b2.lo; });
    return out;
}

// Number of real roots of p in (-inf, x], counted with multiplicity.
// Walks the gcd chain p, gcd(p,p'), gcd(gcd,..)', ...; level j re-counts the
// roots of multiplicity > j once each.
inline int root_count_leq_mult(const IntPolynomial& p, const Rational& x)
{
    int total = 0;
    IntPolynomial g = p.primitive_part();
    while (g.degree() >= 1) {
        total += SturmChain(g).count_leq(x);
        g = poly_gcd(g, g.derivative());
    }
    return total;
}

/**
 * Coefficients of a palindromic polynomial in the basis t^i (1+t)^(n-2i).
 * `center` records the declared symmetry degree n (the center of symmetry is
 * n/2); gammas has floor(n/2)+1 entries.
 */
struct GammaVector {
    long center = 0;  // symmetry degree n
    std::vector<BigInt> gammas;

    bool operator==(const GammaVector& o) const
    {
        return center == o.center && gammas == o.gammas;
    }
};

inline bool is_symmetric(const IntPolynomial& p, long n)
{
    if (p.degree() > n)
        return false;
    for (long i = 0; i <= n; ++i)
        if (p.coeff(static_cast<std::size_t>(i)) != p.coeff(static_cast<std::size_t>(n - i)))
            return false;
    return true;
}

// (1+t)^n
inline IntPolynomial one_plus_t_pow(long n)
{
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = binomial(n, i);
    return IntPolynomial(std::move(c));
}

/**
 * Exact decomposition p = sum_i gamma_i t^i (1+t)^(n-2i) for a polynomial
 * symmetric with respect to degree n; throws NotSymmetricError otherwise.
 * The zero polynomial yields an empty gamma vector.
 */
inline GammaVector gamma_vector(const IntPolynomial& p, long n)
{
    if (p.is_zero())
        return GammaVector{n, {}};
    if (n < 0 || !is_symmetric(p, n))
        throw NotSymmetricError("gamma_vector: polynomial is not symmetric with respect to degree "
                                + std::to_string(n));
    GammaVector gv;
    gv.center = n;
    IntPolynomial rest = p;
    for (long i = 0; i <= n / 2; ++i) {
        BigInt gi = rest.coeff(static_cast<std::size_t>(i));
        gv.gammas.push_back(gi);
        if (gi != 0)
            rest = rest - IntPolynomial::monomial(static_cast<std::size_t>(i), gi)
                              * one_plus_t_pow(n - 2 * i);
    }
    if (!rest.is_zero())
        throw NotSymmetricError("gamma_vector: decomposition did not terminate");
    return gv;
}

// Reconstruction identity sum gamma_i t^i (1+t)^(n-2i).
inline IntPolynomial from_gamma(const GammaVector& gv)
{
    IntPolynomial p;
    for (std::size_t i = 0; i < gv.gammas.size(); ++i)
        if (gv.gammas[i] != 0)
            p = p + IntPolynomial::monomial(i, gv.gammas[i])
                        * one_plus_t_pow(gv.center - 2 * static_cast<long>(i));
    return p;
}

/**
 * Weak interlacing of the real root multisets of p and q, decided exactly.
 * Writing F_p(x) for the number of roots of p that are <= x (with
 * multiplicity), sorted roots weakly alternate iff F_p - F_q stays within a
 * unit band; the band is sampled once per piece of the step function, at
 * rational points obtained from isolating intervals of p*q.
 */
inline bool pair_interlaces(IntPolynomial p, IntPolynomial q)
{
    if (p.is_zero() || q.is_zero())
        return true;  // degenerate by convention; callers feed nonzero inputs
    if (p.degree() < q.degree())
        std::swap(p, q);
    if (p.degree() - q.degree() >= 2)
        return false;
    if (p.degree() == 0)
        return true;
    std::vector<RootInterval> iv = isolate_real_roots(p * q);
    if (iv.empty())
        return true;
    std::vector<Rational> samples;
    samples.push_back(iv.front().lo);
    for (const auto& i : iv)
        samples.push_back(i.hi);
    bool hi_band = true, lo_band = true;  // D in [0,1] resp. [-1,0]
    for (const auto& x : samples) {
        int d = root_count_leq_mult(p, x) - root_count_leq_mult(q, x);
        if (d < 0 || d > 1)
            hi_band = false;
        if (d < -1 || d > 0)
            lo_band = false;
    }
    if (p.degree() == q.degree())
        return hi_band || lo_band;
    return hi_band;  // deg p = deg q + 1: roots of p bracket those of q
}

// True iff every pair in the list interlaces; members must be real-rooted.
inline bool interlacing_sequence(const std::vector<IntPolynomial>& ps)
{
    for (const auto& p : ps)
        if (!is_real_rooted(p))
            throw NotRealRootedError("interlacing_sequence: member is not real-rooted: " + p.str());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (!pair_interlaces(ps[i], ps[j]))
                return false;
    return true;
}

}  // namespace mcs

#endif
