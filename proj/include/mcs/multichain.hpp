#ifndef MCS_MULTICHAIN_HPP
#define MCS_MULTICHAIN_HPP

#include "mcs/numeric.hpp"
#include "mcs/poset.hpp"
#include "mcs/simplicial_complex.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace mcs {

/**
 * A strictly increasing shift map [r] -> [2r]. The multichain order it
 * parameterizes is reflexive exactly when every value lands in {2t-1, 2t};
 * such maps are called admissible here.
 */
struct IncreasingMap {
    std::vector<int> values;  // values[t-1] = image of t

    int r() const { return static_cast<int>(values.size()); }

    bool strictly_increasing_in_range() const
    {
        const int n = r();
        for (int t = 1; t <= n; ++t) {
            int v = values[static_cast<std::size_t>(t - 1)];
            if (v < 1 || v > 2 * n)
                return false;
            if (t >= 2 && v <= values[static_cast<std::size_t>(t - 2)])
                return false;
        }
        return true;
    }

    bool admissible() const
    {
        if (!strictly_increasing_in_range())
            return false;
        for (int t = 1; t <= r(); ++t) {
            int v = values[static_cast<std::size_t>(t - 1)];
            if (v != 2 * t - 1 && v != 2 * t)
                return false;
        }
        return true;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(values[i]);
        }
        return s + ")";
    }

    // t -> 2t-1 for all t
    static IncreasingMap type_i(int r)
    {
        IncreasingMap m;
        for (int t = 1; t <= r; ++t)
            m.values.push_back(2 * t - 1);
        return m;
    }

    // t -> 2t for even t, 2t-1 for odd t
    static IncreasingMap type_ii(int r)
    {
        IncreasingMap m;
        for (int t = 1; t <= r; ++t)
            m.values.push_back(t % 2 == 0 ? 2 * t : 2 * t - 1);
        return m;
    }
};

// All 2^(r-1) admissible maps with value 1 at t=1, ordered with the smaller
// choice first at each position.
inline std::vector<IncreasingMap> admissible_iotas(int r)
{
    if (r < 1)
        throw Error("admissible_iotas: r must be positive");
    std::vector<IncreasingMap> out;
    std::vector<int> vals(static_cast<std::size_t>(r));
    vals[0] = 1;
    auto rec = [&](auto&& self, int t) -> void {
        if (t > r) {
            out.push_back(IncreasingMap{vals});
            return;
        }
        for (int v : {2 * t - 1, 2 * t}) {
            vals[static_cast<std::size_t>(t - 1)] = v;
            self(self, t + 1);
        }
    };
    rec(rec, 2);
    return out;
}

// Weakly increasing r-tuple of poset element ids.
using Multichain = std::vector<int>;

inline std::string multichain_label(const Multichain& m, const FinitePoset& p)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += "⊆";  // subset-or-equal separator
        s += p.label(m[i]);
    }
    return s;
}

/**
 * The order relation on r-multichains: p precedes q iff p_t >= q_s whenever
 * s <= iota(t)-t and p_t <= q_s whenever s > iota(t)-t. Evaluates any
 * strictly increasing map, admissible or not, so non-reflexive maps can be
 * probed in tests.
 */
inline bool multichain_le(const Multichain& p, const Multichain& q, const IncreasingMap& iota,
                          const FinitePoset& poset)
{
    const int r = iota.r();
    if (static_cast<int>(p.size()) != r || static_cast<int>(q.size()) != r)
        throw LengthMismatchError("multichain_le: multichain length does not match the map");
    for (int t = 1; t <= r; ++t) {
        const int cut = iota.values[static_cast<std::size_t>(t - 1)] - t;
        const int pt = p[static_cast<std::size_t>(t - 1)];
        for (int s = 1; s <= r; ++s) {
            const int qs = q[static_cast<std::size_t>(s - 1)];
            if (s <= cut) {
                if (!poset.le(qs, pt))
                    return false;
            } else {
                if (!poset.le(pt, qs))
                    return false;
            }
        }
    }
    return true;
}

// All r-multichains of P in lexicographic order (by element ids).
inline std::vector<Multichain> enumerate_multichains(const FinitePoset& poset, int r)
{
    if (r < 1)
        throw Error("enumerate_multichains: r must be positive");
    std::vector<Multichain> out;
    Multichain cur;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == r) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e < poset.size(); ++e) {
            if (!cur.empty() && !poset.le(cur.back(), e))
                continue;
            cur.push_back(e);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct MultichainComplex {
    SimplicialComplex complex;          // vertex i carries multichains[i]
    std::vector<Multichain> multichains;
    IncreasingMap iota;

    const Multichain& multichain_of(const std::string& label) const
    {
        int id = complex.vertex_id(label);
        if (id < 0)
            throw Error("multichain_of: unknown vertex label " + label);
        return multichains[static_cast<std::size_t>(id)];
    }
};

/**
 * Clique complex of the relation graph on r-multichains of P. Requires an
 * admissible map (otherwise the relation is not even reflexive and no
 * subdivision exists). Asserts that the top face cardinality equals the
 * longest chain of P.
 */
inline MultichainComplex build_multichain_complex(const FinitePoset& poset, int r,
                                                  const IncreasingMap& iota)
{
    if (iota.r() != r)
        throw LengthMismatchError("build_multichain_complex: map length != r");
    if (!iota.admissible())
        throw NonAdmissibleIotaError("build_multichain_complex: map " + iota.str()
                                     + " is not admissible");
    std::vector<Multichain> chains = enumerate_multichains(poset, r);
    std::vector<std::string> labels;
    labels.reserve(chains.size());
    for (const auto& m : chains)
        labels.push_back(multichain_label(m, poset));
    VertexGraph g(labels);
    const int n = static_cast<int>(chains.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = chains[static_cast<std::size_t>(i)];
            const auto& b = chains[static_cast<std::size_t>(j)];
            if (multichain_le(a, b, iota, poset) || multichain_le(b, a, iota, poset))
                g.add_edge(i, j);
        }
    SimplicialComplex sc = clique_complex(g);
    if (sc.dim() + 1 != poset.longest_chain())
        throw Error("build_multichain_complex: top clique size " + std::to_string(sc.dim() + 1)
                    + " != longest chain " + std::to_string(poset.longest_chain()));
    return MultichainComplex{std::move(sc), std::move(chains), iota};
}

struct MultichainSubdivision {
    MultichainComplex chains;
    FacePoset base;  // face poset of the subdivided complex
};

inline MultichainSubdivision multichain_subdivision(const SimplicialComplex& sc, int r,
                                                    const IncreasingMap& iota)
{
    FacePoset fp = face_poset(sc);
    MultichainComplex mc = build_multichain_complex(fp.poset, r, iota);
    return MultichainSubdivision{std::move(mc), std::move(fp)};
}

inline SimplicialComplex type_I(const SimplicialComplex& sc, int r)
{
    return multichain_subdivision(sc, r, IncreasingMap::type_i(r)).chains.complex;
}

inline SimplicialComplex type_II(const SimplicialComplex& sc, int r)
{
    return multichain_subdivision(sc, r, IncreasingMap::type_ii(r)).chains.complex;
}

/**
 * A face of the multichain complex in matrix form: columns are pairwise
 * related multichains, sorted along the relation.
 */
struct MultichainFace {
    std::vector<Multichain> columns;

    int k() const { return static_cast<int>(columns.size()) - 1; }
};

// Sorts the columns of a clique along the relation and validates that every
// pair is related; throws NotAFaceError otherwise.
inline MultichainFace make_face(std::vector<Multichain> cols, const IncreasingMap& iota,
                                const FinitePoset& poset)
{
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
            if (cols[i] == cols[j])
                throw NotAFaceError("make_face: duplicate columns");
            if (!multichain_le(cols[i], cols[j], iota, poset)
                && !multichain_le(cols[j], cols[i], iota, poset))
                throw NotAFaceError("make_face: columns are not pairwise related");
        }
    std::sort(cols.begin(), cols.end(), [&](const Multichain& a, const Multichain& b) {
        if (a == b)
            return false;
        return multichain_le(a, b, iota, poset);
    });
    for (std::size_t j = 0; j + 1 < cols.size(); ++j)
        if (!multichain_le(cols[j], cols[j + 1], iota, poset))
            throw NotAFaceError("make_face: relation does not linearly order the clique");
    return MultichainFace{std::move(cols)};
}

/**
 * Row normalization underlying the face-count invariance: in every row t with
 * iota(t) = 2t, the ranks of the distinct values are reversed (the row flips
 * between monotone decreasing and monotone increasing); rows with
 * iota(t) = 2t-1 are untouched. Applying it to a face of the iota-complex
 * yields a face of the type-I complex of the same dimension, and the same
 * operation maps type-I faces back, so it is its own inverse recipe.
 */
inline MultichainFace normalize_face(const MultichainFace& face, const IncreasingMap& iota)
{
    const int r = iota.r();
    const int cols = face.k() + 1;
    std::vector<Multichain> out(static_cast<std::size_t>(cols),
                                Multichain(static_cast<std::size_t>(r)));
    for (int t = 0; t < r; ++t) {
        const bool flip = iota.values[static_cast<std::size_t>(t)] == 2 * (t + 1);
        std::vector<int> row(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j)
            row[static_cast<std::size_t>(j)] = face.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
        if (flip) {
            std::vector<int> distinct;
            for (int v : row)
                if (distinct.empty() || distinct.back() != v)
                    distinct.push_back(v);
            // monotone row: first-seen order enumerates the distinct values
            const std::size_t m = distinct.size();
            for (auto& v : row) {
                std::size_t b =
                    static_cast<std::size_t>(std::find(distinct.begin(), distinct.end(), v)
                                             - distinct.begin());
                v = distinct[m - 1 - b];
            }
        }
        for (int j = 0; j < cols; ++j)
            out[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] = row[static_cast<std::size_t>(j)];
    }
    return MultichainFace{std::move(out)};
}

// Faces of the complex of a MultichainComplex, per dimension, in matrix form.
inline std::vector<MultichainFace> faces_of_dim(const MultichainComplex& mc, int k,
                                                const FinitePoset& poset)
{
    std::vector<MultichainFace> out;
    for (const auto& f : mc.complex.sorted_faces()) {
        if (static_cast<int>(f.size()) != k + 1)
            continue;
        std::vector<Multichain> cols;
        for (int v : f)
            cols.push_back(mc.multichains[static_cast<std::size_t>(v)]);
        out.push_back(make_face(std::move(cols), mc.iota, poset));
    }
    return out;
}

}  // namespace mcs

#endif
