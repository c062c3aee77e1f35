#ifndef MCS_VERIFY_HPP
#define MCS_VERIFY_HPP

#include "mcs/certificate.hpp"
#include "mcs/colored_permutation.hpp"
#include "mcs/eulerian_polynomials.hpp"
#include "mcs/multichain.hpp"
#include "mcs/polynomial.hpp"
#include "mcs/simplicial_complex.hpp"
#include "mcs/subdivisions.hpp"
#include "mcs/transforms.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mcs {

inline std::string vec_str(const std::vector<BigInt>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].str();
    }
    return s + ")";
}

/**
 * Face-count invariance: every admissible shift map with first value 1 gives
 * the same f-vector on the multichain subdivision of the given complex.
 */
inline VerificationCertificate suite_main_theorem(const SimplicialComplex& sc, int r)
{
    VerificationCertificate cert;
    cert.suite = "main-theorem";
    cert.params["r"] = std::to_string(r);
    SuiteTimer timer(cert);
    FacePoset fp = face_poset(sc);
    std::optional<FVector> reference;
    for (const IncreasingMap& iota : admissible_iotas(r)) {
        MultichainComplex mc = build_multichain_complex(fp.poset, r, iota);
        FVector f = mc.complex.f_vector();
        cert.note("iota " + iota.str() + ": f = " + vec_str(f));
        if (!reference)
            reference = f;
        else if (*reference != f)
            cert.fail("f-vector differs at iota " + iota.str());
    }
    return cert;
}

// closed-form chain counts against the recurrence, plus the pinned small
// cases, over every profile with bounded weight
inline VerificationCertificate suite_chain_counts(int max_sum = 5, int max_k = 4, int max_r = 3)
{
    VerificationCertificate cert;
    cert.suite = "f-formula/chain-counts";
    cert.params["max_sum"] = std::to_string(max_sum);
    cert.params["max_k"] = std::to_string(max_k);
    cert.params["max_r"] = std::to_string(max_r);
    SuiteTimer timer(cert);
    long checked = 0;
    for (int r = 1; r <= max_r; ++r) {
        std::vector<long> alphas(static_cast<std::size_t>(r), 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == r) {
                if (alphas[0] < 1)
                    return;
                for (long k = -1; k <= max_k; ++k) {
                    ChainCountParams p{k, alphas};
                    BigInt closed = chain_count(p, ChainCountMethod::Closed);
                    BigInt recur = chain_count(p, ChainCountMethod::Recurrence);
                    ++checked;
                    if (closed != recur) {
                        std::ostringstream os;
                        os << "closed " << closed << " != recurrence " << recur << " at k=" << k
                           << " r=" << r;
                        cert.fail(os.str());
                        return;
                    }
                    if (k == -1 && closed != 0)
                        cert.fail("P_{-1} != 0");
                    if (k == 0 && closed != 1)
                        cert.fail("P_0 != 1");
                    if (k == 1) {
                        long tail = 0;
                        for (std::size_t i = 1; i < alphas.size(); ++i)
                            tail += alphas[i];
                        BigInt expect = (ipow(BigInt(2), alphas[0]) - 1) * ipow(BigInt(2), tail) - 1;
                        if (closed != expect)
                            cert.fail("P_1 does not match the pinned closed value");
                    }
                }
                return;
            }
            for (int v = 0; v <= left; ++v) {
                alphas[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, max_sum);
    }
    cert.note("profiles checked: " + std::to_string(checked));
    return cert;
}

/**
 * Face-count transform: the closed-form matrix, the weighted multichain sum
 * and the brute-force subdivision agree entrywise on the given complex.
 */
inline VerificationCertificate suite_f_formula(const std::optional<SimplicialComplex>& sc, int r)
{
    VerificationCertificate cert;
    cert.suite = "f-formula";
    cert.params["r"] = std::to_string(r);
    SuiteTimer timer(cert);
    {
        VerificationCertificate cc = suite_chain_counts();
        if (!cc.pass) {
            cert.pass = false;
            cert.witness = cc.witness;
            return cert;
        }
        cert.note("chain-count sweep passed (" + cc.witness.back() + ")");
    }
    if (!sc)
        return cert;
    FVector f = sc->f_vector();
    FVector closed = transform_f(f, r);
    FVector brute = type_I(*sc, r).f_vector();
    cert.note("transform: " + vec_str(closed));
    if (closed != brute) {
        cert.fail("matrix transform " + vec_str(closed) + " != brute force " + vec_str(brute));
        return cert;
    }
    const long d = static_cast<long>(f.size()) - 1;
    for (long k = 0; k <= d - 1; ++k) {
        BigInt via_sum = f_via_multichain_sum(*sc, r, k);
        if (via_sum != closed[static_cast<std::size_t>(k) + 1]) {
            cert.fail("multichain sum disagrees at k=" + std::to_string(k));
            return cert;
        }
    }
    BigInt alt = 0;
    for (std::size_t i = 1; i < closed.size(); ++i)
        alt += (i % 2 == 1) ? closed[i] : -closed[i];
    cert.note("alternating face sum: " + alt.str());
    return cert;
}

// R_d = H_d F_d H_d^{-1} exactly, for all d <= max_d, r <= max_r
inline VerificationCertificate suite_h_matrix_identity(long max_d = 4, int max_r = 3)
{
    VerificationCertificate cert;
    cert.suite = "h-formula/matrix-identity";
    cert.params["max_d"] = std::to_string(max_d);
    cert.params["max_r"] = std::to_string(max_r);
    SuiteTimer timer(cert);
    for (long d = 0; d <= max_d; ++d) {
        IntegerMatrix H = h_conversion_matrix(d);
        IntegerMatrix Hinv = h_conversion_matrix_inverse(d);
        if (!(H * Hinv == IntegerMatrix::identity(static_cast<std::size_t>(d) + 1))) {
            cert.fail("closed-form inverse of the f->h conversion failed at d=" + std::to_string(d));
            return cert;
        }
        for (int r = 1; r <= max_r; ++r) {
            IntegerMatrix R = h_matrix(d, r);
            IntegerMatrix F = f_matrix(d, r);
            if (!(R == H * F * Hinv)) {
                cert.fail("descent matrix != conjugated face matrix at d=" + std::to_string(d)
                          + " r=" + std::to_string(r));
                return cert;
            }
        }
    }
    cert.note("descent matrix equals the conjugated face-count matrix up to d="
              + std::to_string(max_d));
    return cert;
}

/**
 * h-transform: the descent-count matrix applied to h equals the h-vector of
 * the brute-force subdivision; the matrix is the conjugate of the face-count
 * transform; pinned spot columns hold.
 */
inline VerificationCertificate suite_h_formula(const std::optional<SimplicialComplex>& sc, int r)
{
    VerificationCertificate cert;
    cert.suite = "h-formula";
    cert.params["r"] = std::to_string(r);
    SuiteTimer timer(cert);
    {
        VerificationCertificate mi = suite_h_matrix_identity();
        if (!mi.pass) {
            cert.pass = false;
            cert.witness = mi.witness;
            return cert;
        }
        cert.note(mi.witness.back());
    }
    // pinned columns: k = 0 column is the h-vector of the subdivided simplex
    if (h_matrix(2, 2).column(0) != std::vector<BigInt>{1, 3, 0}) {
        cert.fail("column 0 of the d=2, r=2 descent matrix is not (1,3,0)");
        return cert;
    }
    if (h_matrix(3, 3).column(0) != std::vector<BigInt>{1, 34, 19, 0}) {
        cert.fail("column 0 of the d=3, r=3 descent matrix is not (1,34,19,0)");
        return cert;
    }
    if (h_matrix(2, 1).column(0) != std::vector<BigInt>{1, 1, 0}) {
        cert.fail("column 0 of the d=2, r=1 descent matrix is not (1,1,0)");
        return cert;
    }
    cert.note("pinned descent-matrix columns hold");
    if (!sc)
        return cert;
    HVector h = f_to_h(sc->f_vector());
    HVector lhs = transform_h(h, r);
    HVector rhs = f_to_h(type_I(*sc, r).f_vector());
    cert.note("transformed h: " + vec_str(lhs));
    if (lhs != rhs)
        cert.fail("h transform " + vec_str(lhs) + " != brute force " + vec_str(rhs));
    return cert;
}

/**
 * Descent-count recurrences against exhaustive counting for every entry up
 * to the given group size, plus the two reversal symmetries and the
 * cardinality invariants.
 */
inline VerificationCertificate suite_eulerian_recurrences(int max_n = 5, int max_r = 3)
{
    VerificationCertificate cert;
    cert.suite = "eulerian-recurrences";
    cert.params["max_n"] = std::to_string(max_n);
    cert.params["max_r"] = std::to_string(max_r);
    SuiteTimer timer(cert);
    for (int r = 1; r <= max_r; ++r) {
        for (int n = 1; n <= max_n; ++n) {
            EulerianTable rec = EulerianTable::recurrence(n, r);
            EulerianTable bf = EulerianTable::bruteforce(n, r);
            if (!(rec == bf)) {
                cert.fail("recurrence table != brute force at n=" + std::to_string(n)
                          + " r=" + std::to_string(r));
                return cert;
            }
            BigInt expect_total = ipow(BigInt(r), n - 1);
            for (int i = 2; i <= n; ++i)
                expect_total *= i;
            if (rec.total() != expect_total) {
                cert.fail("group cardinality mismatch at n=" + std::to_string(n));
                return cert;
            }
            if (n >= 2) {
                BigInt expect_block = ipow(BigInt(r), n - 2);
                for (int i = 2; i <= n - 1; ++i)
                    expect_block *= i;
                for (int j = 1; j <= n; ++j)
                    for (int s = 0; s < r; ++s) {
                        BigInt bs = 0;
                        for (int m = 0; m <= n; ++m)
                            bs += rec.count(j, s, m);
                        if (bs != expect_block) {
                            cert.fail("block cardinality mismatch at n=" + std::to_string(n));
                            return cert;
                        }
                    }
            }
        }
        // reversal symmetries on the table of size d+1
        for (int d = 0; d + 1 <= max_n; ++d) {
            EulerianTable t = EulerianTable::recurrence(d + 1, r);
            for (int k = 0; k <= d; ++k)
                for (int m = 0; m <= d; ++m) {
                    if (t.count(k + 1, 0, m) != t.count(d + 1 - k, 0, d - m)) {
                        cert.fail("color-0 reversal symmetry fails at d=" + std::to_string(d));
                        return cert;
                    }
                    for (int s = 1; s < r; ++s)
                        if (t.count(k + 1, s, m) != t.count(d + 1 - k, r - s, d + 1 - m)) {
                            cert.fail("nonzero-color reversal symmetry fails at d="
                                      + std::to_string(d));
                            return cert;
                        }
                }
        }
    }
    cert.note("tables agree and symmetries hold up to group size " + std::to_string(max_n));
    return cert;
}

inline std::vector<BigInt> trimmed_gammas(const GammaVector& gv)
{
    std::vector<BigInt> g = gv.gammas;
    while (!g.empty() && g.back() == 0)
        g.pop_back();
    return g;
}

/**
 * Gamma vectors by polynomial decomposition equal the slide-statistic counts
 * and are entrywise nonnegative; the slide-count binomial relation holds.
 */
inline VerificationCertificate suite_gamma(int max_d = 5, int max_r = 3)
{
    VerificationCertificate cert;
    cert.suite = "gamma";
    cert.params["max_d"] = std::to_string(max_d);
    cert.params["max_r"] = std::to_string(max_r);
    SuiteTimer timer(cert);
    for (int r = 1; r <= max_r; ++r)
        for (int d = 1; d <= max_d; ++d) {
            // every element carries at least one slide; a nonzero final
            // color forces at least two
            for_each_colored_permutation(d, r, ColoredFilter::a_d(),
                                         [&](const ColoredPermutation& cp) {
                                             int sl = slide_count(cp);
                                             if (sl < 1 || (cp.eps.back() != 0 && sl < 2))
                                                 cert.fail("slide lower bound violated by "
                                                           + cp.str());
                                         });
            if (!cert.pass)
                return cert;
            for (GammaWhich which : {GammaWhich::Color0, GammaWhich::Nonzero}) {
                EulerianSelector sel = which == GammaWhich::Color0
                                           ? EulerianSelector::color(0)
                                           : EulerianSelector::nonzero();
                IntPolynomial p = eulerian_polynomial(d, r, sel, EulerianMethod::Bruteforce);
                long center = gamma_center(d, which);
                GammaVector by_poly = p.is_zero() ? GammaVector{center, {}}
                                                  : gamma_vector(p, center);
                GammaVector by_slides = gamma_via_slides(d, r, which);
                if (trimmed_gammas(by_poly) != trimmed_gammas(by_slides)) {
                    cert.fail("gamma mismatch at d=" + std::to_string(d) + " r="
                              + std::to_string(r)
                              + (which == GammaWhich::Color0 ? " color0" : " nonzero"));
                    return cert;
                }
                for (const auto& g : by_slides.gammas)
                    if (g < 0) {
                        cert.fail("negative gamma entry at d=" + std::to_string(d));
                        return cert;
                    }
                // binomial relation between slide-refined counts; the free
                // symbol count tracks the symmetry center (the terminal
                // padding symbol joins the last slide when the final color
                // is nonzero)
                const int free_base = which == GammaWhich::Color0 ? d - 1 : d;
                for (int s = 0; 2 * s <= free_base; ++s) {
                    BigInt base = slide_descent_count(d, r, which, s, s);
                    for (int k = s; k <= free_base - s; ++k) {
                        BigInt lhs = slide_descent_count(d, r, which, k, s);
                        if (lhs != binomial(free_base - 2 * s, k - s) * base) {
                            cert.fail("slide-count binomial relation fails at d="
                                      + std::to_string(d) + " k=" + std::to_string(k)
                                      + " s=" + std::to_string(s));
                            return cert;
                        }
                    }
                }
            }
        }
    cert.note("gamma vectors agree and are nonnegative up to d=" + std::to_string(max_d));
    return cert;
}

/**
 * Exact real-rootedness of the descent polynomials, and of the h-transform
 * of every nonnegative h-vector with bounded weight.
 */
inline VerificationCertificate suite_real_rooted(int max_d = 6, int max_r = 3, int h_sum = 6,
                                                 long h_max_d = 3)
{
    VerificationCertificate cert;
    cert.suite = "real-rooted";
    cert.params["max_d"] = std::to_string(max_d);
    cert.params["max_r"] = std::to_string(max_r);
    SuiteTimer timer(cert);
    for (int r = 1; r <= max_r; ++r)
        for (int d = 1; d <= max_d; ++d)
            for (const EulerianSelector& sel :
                 {EulerianSelector::total(), EulerianSelector::color(0),
                  EulerianSelector::nonzero()}) {
                IntPolynomial p = eulerian_polynomial(d, r, sel, EulerianMethod::Recurrence);
                if (!is_real_rooted(p)) {
                    cert.fail("descent polynomial not real-rooted at d=" + std::to_string(d)
                              + " r=" + std::to_string(r) + ": " + p.str());
                    return cert;
                }
            }
    cert.note("descent polynomials are real-rooted up to d=" + std::to_string(max_d));
    long transformed = 0;
    for (long d = 1; d <= h_max_d; ++d) {
        std::vector<BigInt> h(static_cast<std::size_t>(d) + 1, BigInt(0));
        auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
            if (!cert.pass)
                return;
            if (pos == h.size()) {
                for (int r = 1; r <= max_r; ++r) {
                    IntPolynomial p(transform_h(h, r));
                    ++transformed;
                    if (!is_real_rooted(p)) {
                        cert.fail("h-transform of " + vec_str(h) + " at r=" + std::to_string(r)
                                  + " is not real-rooted");
                        return;
                    }
                }
                return;
            }
            for (int v = 0; v <= left; ++v) {
                h[pos] = v;
                self(self, pos + 1, left - v);
            }
            h[pos] = 0;
        };
        rec(rec, 0, h_sum);
        if (!cert.pass)
            return cert;
    }
    cert.note("h-transforms certified real-rooted: " + std::to_string(transformed));
    return cert;
}

/**
 * The ordered family of block polynomials (color 0 first, then colors r-1
 * down to 1, last value descending inside each color) is pairwise
 * interlacing; empty blocks contribute the zero polynomial and are skipped.
 */
inline VerificationCertificate suite_interlacing(int max_d = 4, int max_r = 3)
{
    VerificationCertificate cert;
    cert.suite = "interlacing";
    cert.params["max_d"] = std::to_string(max_d);
    cert.params["max_r"] = std::to_string(max_r);
    SuiteTimer timer(cert);
    for (int r = 1; r <= max_r; ++r)
        for (int d = 1; d <= max_d; ++d) {
            std::vector<IntPolynomial> seq;
            std::vector<int> colors{0};
            for (int s = r - 1; s >= 1; --s)
                colors.push_back(s);
            for (int s : colors)
                for (int k = 0; k <= d; ++k) {
                    IntPolynomial p = eulerian_polynomial(
                        d, r, EulerianSelector::block(k + 1, s), EulerianMethod::Recurrence);
                    if (!p.is_zero())
                        seq.push_back(p);
                }
            if (!interlacing_sequence(seq)) {
                cert.fail("block polynomial sequence fails interlacing at d=" + std::to_string(d)
                          + " r=" + std::to_string(r));
                return cert;
            }
        }
    cert.note("block sequences interlace up to d=" + std::to_string(max_d));
    return cert;
}

/**
 * Colored bar partitions against the binomially weighted face-matrix rows,
 * and the fold recurrence of the matrix entries themselves.
 */
inline VerificationCertificate suite_bar_partitions(int max_d = 4, int max_r = 3,
                                                    int rec_max_d = 5)
{
    VerificationCertificate cert;
    cert.suite = "bar-partitions";
    cert.params["max_d"] = std::to_string(max_d);
    cert.params["max_r"] = std::to_string(max_r);
    SuiteTimer timer(cert);
    for (int r = 1; r <= max_r; ++r) {
        for (long l = 1; l <= rec_max_d - 1; ++l)
            for (long m = 1; m <= rec_max_d; ++m) {
                BigInt lhs = 0;
                for (long jj = 1; jj <= m; ++jj)
                    lhs += ipow(BigInt(r), jj) * binomial(m, jj) * f_matrix_entry(l, m - jj, r);
                if (lhs != f_matrix_entry(l + 1, m, r)) {
                    cert.fail("face-matrix fold recurrence fails at l=" + std::to_string(l)
                              + " m=" + std::to_string(m) + " r=" + std::to_string(r));
                    return cert;
                }
            }
        for (int d = 0; d <= max_d; ++d)
            for (int t = 0; t <= d; ++t)
                for (int j = 0; j <= d; ++j) {
                    BigInt lhs = bar_partition_count(d, t, j, r);
                    BigInt rhs = 0;
                    for (int m = 0; m <= d; ++m)
                        rhs += binomial(d - j, d - m) * f_matrix_entry(t, m, r);
                    if (lhs != rhs) {
                        cert.fail("bar partition count " + lhs.str() + " != weighted row sum "
                                  + rhs.str() + " at d=" + std::to_string(d) + " t="
                                  + std::to_string(t) + " j=" + std::to_string(j)
                                  + " r=" + std::to_string(r));
                        return cert;
                    }
                }
    }
    cert.note("bar partition identity and fold recurrence hold up to d=" + std::to_string(max_d));
    return cert;
}

}  // namespace mcs

#endif
