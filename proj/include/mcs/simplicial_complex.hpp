#ifndef MCS_SIMPLICIAL_COMPLEX_HPP
#define MCS_SIMPLICIAL_COMPLEX_HPP

#include "mcs/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mcs {

// A face is a strictly sorted vector of canonical vertex ids.
using Face = std::vector<int>;

struct FaceHash {
    std::size_t operator()(const Face& f) const
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : f)
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9ull + (h << 6) + (h >> 2);
        return h;
    }
};

using FaceSet = std::unordered_set<Face, FaceHash>;

using FVector = std::vector<BigInt>;  // (f_-1, f_0, ..., f_{d-1})
using HVector = std::vector<BigInt>;  // (h_0, ..., h_d)

/**
 * Finite abstract simplicial complex over opaque string labels. Labels are
 * canonicalized to dense integer ids in first-seen order; faces are stored
 * strictly sorted in a hash set, so membership tests used by the
 * downward-closure, flagness and isomorphism checks are O(1).
 * Immutable after construction.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets)
    {
        if (facets.empty())
            throw EmptyInputError("from_facets: no facets given");
        SimplicialComplex sc;
        for (const auto& facet : facets) {
            if (facet.empty())
                throw EmptyFacetError("from_facets: empty facet");
            Face f;
            for (const auto& lab : facet)
                f.push_back(sc.intern(lab));
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            sc.insert_closed(f);
        }
        return sc;
    }

    // `faces` must already be downward closed and cover all singletons.
    static SimplicialComplex from_face_set(std::vector<std::string> labels, FaceSet faces)
    {
        SimplicialComplex sc;
        sc.labels_ = std::move(labels);
        for (std::size_t i = 0; i < sc.labels_.size(); ++i)
            sc.index_[sc.labels_[i]] = static_cast<int>(i);
        sc.faces_ = std::move(faces);
        for (const auto& f : sc.faces_) {
            sc.dim_ = std::max(sc.dim_, static_cast<long>(f.size()) - 1);
            for (std::size_t i = 0; i < f.size(); ++i) {
                Face sub(f);
                sub.erase(sub.begin() + static_cast<long>(i));
                if (!sub.empty() && !sc.faces_.count(sub))
                    throw Error("from_face_set: face set is not downward closed");
            }
        }
        for (int v = 0; v < sc.num_vertices(); ++v)
            if (!sc.faces_.count(Face{v}))
                throw Error("from_face_set: vertex " + sc.labels_[static_cast<std::size_t>(v)]
                            + " has no singleton face");
        return sc;
    }

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    long dim() const { return dim_; }
    std::size_t num_faces() const { return faces_.size(); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const FaceSet& faces() const { return faces_; }

    bool contains(const Face& f) const { return faces_.count(f) > 0; }

    int vertex_id(const std::string& label) const
    {
        auto it = index_.find(label);
        return it == index_.end() ? -1 : it->second;
    }

    std::string face_label(const Face& f) const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i)
                s += ",";
            s += labels_[static_cast<std::size_t>(f[i])];
        }
        return s + "}";
    }

    // faces sorted by (cardinality, lex); the deterministic ordering used for
    // face posets and subdivision vertex orders
    std::vector<Face> sorted_faces() const
    {
        std::vector<Face> out(faces_.begin(), faces_.end());
        std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return out;
    }

    std::vector<Face> facets() const
    {
        std::vector<Face> out;
        for (const auto& f : faces_) {
            bool maximal = true;
            for (int v = 0; v < num_vertices() && maximal; ++v) {
                if (std::binary_search(f.begin(), f.end(), v))
                    continue;
                Face g(f);
                g.insert(std::lower_bound(g.begin(), g.end(), v), v);
                if (faces_.count(g))
                    maximal = false;
            }
            if (maximal)
                out.push_back(f);
        }
        std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return out;
    }

    FVector f_vector() const
    {
        FVector f(static_cast<std::size_t>(dim_) + 2, BigInt(0));
        f[0] = 1;
        for (const auto& face : faces_)
            f[face.size()] += 1;
        return f;
    }

    // sum over i >= 0 of (-1)^i f_i
    BigInt euler_characteristic() const
    {
        BigInt chi = 0;
        for (const auto& face : faces_)
            chi += (face.size() % 2 == 1) ? 1 : -1;
        return chi;
    }

private:
    int intern(const std::string& label)
    {
        auto it = index_.find(label);
        if (it != index_.end())
            return it->second;
        int id = static_cast<int>(labels_.size());
        labels_.push_back(label);
        index_[label] = id;
        return id;
    }

    void insert_closed(const Face& facet)
    {
        const std::size_t n = facet.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    sub.push_back(facet[i]);
            faces_.insert(std::move(sub));
        }
        dim_ = std::max(dim_, static_cast<long>(n) - 1);
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    FaceSet faces_;
    long dim_ = -1;
};

inline SimplicialComplex complex_from_facets(const std::vector<std::vector<std::string>>& facets)
{
    return SimplicialComplex::from_facets(facets);
}

// h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}
inline HVector f_to_h(const FVector& f)
{
    const long d = static_cast<long>(f.size()) - 1;
    HVector h(f.size(), BigInt(0));
    for (long j = 0; j <= d; ++j)
        for (long i = 0; i <= j; ++i) {
            BigInt term = binomial(d - i, j - i) * f[static_cast<std::size_t>(i)];
            h[static_cast<std::size_t>(j)] += ((j - i) % 2 == 0) ? term : -term;
        }
    return h;
}

// f_{j-1} = sum_i C(d-i, j-i) h_i
inline FVector h_to_f(const HVector& h)
{
    const long d = static_cast<long>(h.size()) - 1;
    FVector f(h.size(), BigInt(0));
    for (long j = 0; j <= d; ++j)
        for (long i = 0; i <= j; ++i)
            f[static_cast<std::size_t>(j)] += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
    return f;
}

/**
 * Undirected loop-free graph on labelled nodes; the 1-skeleton container for
 * clique complexes and flagness tests.
 */
class VertexGraph {
public:
    VertexGraph() = default;
    explicit VertexGraph(std::vector<std::string> labels) : labels_(std::move(labels))
    {
        adj_.assign(labels_.size(), std::vector<bool>(labels_.size(), false));
    }

    int num_nodes() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    void add_edge(int a, int b)
    {
        if (a == b)
            throw Error("VertexGraph: loops are not allowed");
        if (a < 0 || b < 0 || a >= num_nodes() || b >= num_nodes())
            throw Error("VertexGraph: edge endpoint out of range");
        adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        adj_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    }

    bool adjacent(int a, int b) const
    {
        return adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    std::size_t num_edges() const
    {
        std::size_t e = 0;
        for (int a = 0; a < num_nodes(); ++a)
            for (int b = a + 1; b < num_nodes(); ++b)
                if (adjacent(a, b))
                    ++e;
        return e;
    }

    // Bron-Kerbosch with pivoting; returns every maximal clique (isolated
    // nodes come back as singletons), deterministically ordered.
    std::vector<Face> maximal_cliques() const
    {
        std::vector<Face> out;
        std::vector<int> R, P, X;
        for (int v = 0; v < num_nodes(); ++v)
            P.push_back(v);
        bron_kerbosch(R, P, X, out);
        std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return out;
    }

private:
    void bron_kerbosch(std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                       std::vector<Face>& out) const
    {
        if (P.empty() && X.empty()) {
            Face f(R);
            std::sort(f.begin(), f.end());
            out.push_back(std::move(f));
            return;
        }
        // pivot: vertex of P u X with most neighbours in P
        int pivot = -1;
        std::size_t best = 0;
        for (const auto* side : {&P, &X})
            for (int u : *side) {
                std::size_t cnt = 0;
                for (int v : P)
                    if (adjacent(u, v))
                        ++cnt;
                if (pivot < 0 || cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
        std::vector<int> candidates;
        for (int v : P)
            if (pivot < 0 || !adjacent(pivot, v))
                candidates.push_back(v);
        for (int v : candidates) {
            std::vector<int> P2, X2;
            for (int w : P)
                if (adjacent(v, w))
                    P2.push_back(w);
            for (int w : X)
                if (adjacent(v, w))
                    X2.push_back(w);
            R.push_back(v);
            bron_kerbosch(R, std::move(P2), std::move(X2), out);
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> adj_;
};

// The complex whose faces are exactly the nonempty cliques of G.
inline SimplicialComplex clique_complex(const VertexGraph& g)
{
    FaceSet faces;
    for (const auto& clique : g.maximal_cliques()) {
        const std::size_t n = clique.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    sub.push_back(clique[i]);
            faces.insert(std::move(sub));
        }
    }
    return SimplicialComplex::from_face_set(g.labels(), std::move(faces));
}

inline VertexGraph one_skeleton(const SimplicialComplex& sc)
{
    VertexGraph g(sc.vertex_labels());
    for (const auto& f : sc.faces())
        if (f.size() == 2)
            g.add_edge(f[0], f[1]);
    return g;
}

// A complex is flag iff it equals the clique complex of its 1-skeleton.
inline bool is_flag(const SimplicialComplex& sc)
{
    SimplicialComplex cl = clique_complex(one_skeleton(sc));
    if (cl.num_faces() != sc.num_faces())
        return false;
    for (const auto& f : cl.faces())
        if (!sc.contains(f))
            return false;
    return true;
}

using VertexBijection = std::map<std::string, std::string>;

/**
 * Full simplicial isomorphism test: `map` must be a bijection between the
 * vertex labels of a and b, and F is a face of a iff map(F) is a face of b.
 */
inline bool is_simplicial_iso(const VertexBijection& map, const SimplicialComplex& a,
                              const SimplicialComplex& b)
{
    if (map.size() != static_cast<std::size_t>(a.num_vertices())
        || map.size() != static_cast<std::size_t>(b.num_vertices()))
        throw NotABijectionError("is_simplicial_iso: size mismatch");
    std::vector<int> img(static_cast<std::size_t>(a.num_vertices()), -1);
    std::set<int> hit;
    for (const auto& [la, lb] : map) {
        int ia = a.vertex_id(la);
        int ib = b.vertex_id(lb);
        if (ia < 0 || ib < 0 || !hit.insert(ib).second)
            throw NotABijectionError("is_simplicial_iso: not a vertex bijection at " + la);
        img[static_cast<std::size_t>(ia)] = ib;
    }
    if (a.num_faces() != b.num_faces())
        return false;
    for (const auto& f : a.faces()) {
        Face g;
        for (int v : f)
            g.push_back(img[static_cast<std::size_t>(v)]);
        std::sort(g.begin(), g.end());
        if (!b.contains(g))
            return false;
    }
    return true;  // counts equal and forward inclusion holds, so both directions do
}

// Edge-level variant: enough for flag complexes when paired with flagness of
// both sides; the full check above stays available.
inline bool is_edge_level_iso(const VertexBijection& map, const SimplicialComplex& a,
                              const SimplicialComplex& b)
{
    if (!is_flag(a) || !is_flag(b))
        return false;
    std::vector<int> img(static_cast<std::size_t>(a.num_vertices()), -1);
    for (const auto& [la, lb] : map) {
        int ia = a.vertex_id(la);
        int ib = b.vertex_id(lb);
        if (ia < 0 || ib < 0)
            throw NotABijectionError("is_edge_level_iso: unknown label " + la);
        img[static_cast<std::size_t>(ia)] = ib;
    }
    std::size_t edges_a = 0, edges_b = 0;
    for (const auto& f : a.faces())
        if (f.size() == 2) {
            ++edges_a;
            Face g{img[static_cast<std::size_t>(f[0])], img[static_cast<std::size_t>(f[1])]};
            std::sort(g.begin(), g.end());
            if (!b.contains(g))
                return false;
        }
    for (const auto& f : b.faces())
        if (f.size() == 2)
            ++edges_b;
    return edges_a == edges_b;
}

}  // namespace mcs

#endif
