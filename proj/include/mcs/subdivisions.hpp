#ifndef MCS_SUBDIVISIONS_HPP
#define MCS_SUBDIVISIONS_HPP

#include "mcs/certificate.hpp"
#include "mcs/multichain.hpp"
#include "mcs/numeric.hpp"
#include "mcs/poset.hpp"
#include "mcs/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace mcs {

// Total order on the faces of the base complex: smaller cardinality first,
// lexicographic on sorted vertex ids inside a cardinality.
inline bool sd_vertex_less(const Face& a, const Face& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

/**
 * Barycentric subdivision: vertices are the nonempty faces (in the order
 * above), faces are the chains under strict inclusion. Built as the clique
 * complex of the inclusion graph, so vertex ids match the face order.
 */
inline SimplicialComplex barycentric(const SimplicialComplex& sc)
{
    std::vector<Face> faces = sc.sorted_faces();
    std::vector<std::string> labels;
    for (const auto& f : faces)
        labels.push_back(sc.face_label(f));
    VertexGraph g(labels);
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            bool ij = std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
            bool ji = std::includes(faces[i].begin(), faces[i].end(), faces[j].begin(), faces[j].end());
            if (ij || ji)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return clique_complex(g);
}

/**
 * Vertex of an edgewise subdivision: nonnegative weights on the base
 * vertices summing to r, with support a face of the base complex. Weights
 * are stored along the chosen coordinate order.
 */
struct EdgewiseVertexData {
    std::vector<int> u;  // aligned to the coordinate order
};

struct EdgewiseResult {
    SimplicialComplex complex;
    std::vector<EdgewiseVertexData> vertices;  // per complex vertex id
    std::vector<int> order;                    // coordinate position -> base vertex id
};

inline std::string edgewise_label(const std::vector<int>& u, const std::vector<int>& order,
                                  const std::vector<std::string>& base_labels)
{
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        s += base_labels[static_cast<std::size_t>(order[i])];
        if (u[i] > 1)
            s += "^" + std::to_string(u[i]);
    }
    return s;
}

/**
 * r-fold edgewise subdivision with respect to a total order on the base
 * vertices. A set of weight vectors spans a face iff the union of their
 * supports is a face of the base complex and all pairwise partial-sum
 * differences land in {0,1}^m or {0,-1}^m.
 */
inline EdgewiseResult edgewise(const SimplicialComplex& sc, int r, std::vector<int> order)
{
    if (r < 1)
        throw Error("edgewise: r must be positive");
    const std::size_t m = static_cast<std::size_t>(sc.num_vertices());
    if (order.size() != m)
        throw Error("edgewise: order must cover all vertices");
    // enumerate weight vectors with face support
    std::vector<std::vector<int>> us;
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == m) {
            if (left != 0)
                return;
            Face supp;
            for (std::size_t i = 0; i < m; ++i)
                if (cur[i] > 0)
                    supp.push_back(order[i]);
            std::sort(supp.begin(), supp.end());
            if (!supp.empty() && sc.contains(supp))
                us.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
            cur[pos] = 0;
        }
    };
    rec(rec, 0, r);
    std::sort(us.begin(), us.end());

    const std::size_t n = us.size();
    std::vector<std::vector<int>> psums(n, std::vector<int>(m, 0));
    std::vector<Face> supports(n);
    for (std::size_t i = 0; i < n; ++i) {
        int acc = 0;
        for (std::size_t p = 0; p < m; ++p) {
            acc += us[i][p];
            psums[i][p] = acc;
            if (us[i][p] > 0)
                supports[i].push_back(order[p]);
        }
        std::sort(supports[i].begin(), supports[i].end());
    }
    auto compatible = [&](std::size_t i, std::size_t j) {
        bool up = true, down = true;
        for (std::size_t p = 0; p < m; ++p) {
            int d = psums[i][p] - psums[j][p];
            if (d != 0 && d != 1)
                up = false;
            if (d != 0 && d != -1)
                down = false;
            if (!up && !down)
                return false;
        }
        return true;
    };
    auto union_face = [&](const Face& a, const Face& b) {
        Face u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        return u;
    };

    // every face, grown one vertex at a time; the union-support test is
    // monotone so it prunes whole subtrees
    FaceSet faces;
    std::vector<int> members;
    auto grow = [&](auto&& self, std::size_t next, const Face& usupp) -> void {
        if (!members.empty()) {
            Face f(members.begin(), members.end());
            faces.insert(f);
        }
        for (std::size_t cand = next; cand < n; ++cand) {
            Face nu = union_face(usupp, supports[cand]);
            if (!sc.contains(nu))
                continue;
            bool ok = true;
            for (int mem : members)
                if (!compatible(static_cast<std::size_t>(mem), cand)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            members.push_back(static_cast<int>(cand));
            self(self, cand + 1, nu);
            members.pop_back();
        }
    };
    grow(grow, 0, Face{});

    std::vector<std::string> labels;
    std::vector<EdgewiseVertexData> verts;
    for (const auto& u : us) {
        labels.push_back(edgewise_label(u, order, sc.vertex_labels()));
        verts.push_back(EdgewiseVertexData{u});
    }
    return EdgewiseResult{SimplicialComplex::from_face_set(labels, std::move(faces)),
                          std::move(verts), std::move(order)};
}

inline EdgewiseResult edgewise(const SimplicialComplex& sc, int r)
{
    std::vector<int> order(static_cast<std::size_t>(sc.num_vertices()));
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    return edgewise(sc, r, std::move(order));
}

struct ColoredBarycentricResult {
    EdgewiseResult edge;             // over the barycentric subdivision
    SimplicialComplex base_bary;     // its base, vertex i = i-th sorted face
    std::vector<Face> base_faces;    // sorted faces of the original complex
};

/**
 * r-colored barycentric subdivision: the r-fold edgewise subdivision of the
 * barycentric subdivision, coordinates ordered cardinality-then-lex. With
 * that order the barycentric vertex ids are already sorted, so the identity
 * order is used.
 */
inline ColoredBarycentricResult colored_barycentric_full(const SimplicialComplex& sc, int r)
{
    SimplicialComplex bary = barycentric(sc);
    std::vector<Face> base_faces = sc.sorted_faces();
    std::vector<int> order(static_cast<std::size_t>(bary.num_vertices()));
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    EdgewiseResult er = edgewise(bary, r, std::move(order));
    return ColoredBarycentricResult{std::move(er), std::move(bary), std::move(base_faces)};
}

inline SimplicialComplex colored_barycentric(const SimplicialComplex& sc, int r)
{
    return colored_barycentric_full(sc, r).edge.complex;
}

/**
 * Vertex bijection between an edgewise subdivision of the barycentric
 * subdivision and the multichain picture: a weight vector u with chain
 * support G_1 c ... c G_k maps to the multichain repeating G_i exactly
 * u_{G_i} times. Positions here are face-poset element ids (both sides use
 * the cardinality-then-lex order).
 */
inline Multichain theta(const std::vector<int>& u, const std::vector<int>& order)
{
    Multichain m;
    for (std::size_t p = 0; p < u.size(); ++p)
        for (int c = 0; c < u[p]; ++c)
            m.push_back(order[p]);
    return m;
}

inline std::vector<int> theta_inverse(const Multichain& m, const std::vector<int>& order)
{
    std::vector<int> pos_of(order.size());
    for (std::size_t p = 0; p < order.size(); ++p)
        pos_of[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
    std::vector<int> u(order.size(), 0);
    for (int e : m)
        ++u[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(e)])];
    return u;
}

namespace detail {

inline void check_iso_pair(VerificationCertificate& cert, const SimplicialComplex& lhs,
                           const SimplicialComplex& rhs, const VertexBijection& bij,
                           const std::string& lhs_name, const std::string& rhs_name)
{
    if (lhs.num_vertices() != rhs.num_vertices()) {
        cert.fail("vertex count mismatch: " + lhs_name + " has "
                  + std::to_string(lhs.num_vertices()) + ", " + rhs_name + " has "
                  + std::to_string(rhs.num_vertices()));
        return;
    }
    // edge preservation, both directions
    std::size_t edges = 0;
    for (const auto& f : lhs.faces()) {
        if (f.size() != 2)
            continue;
        ++edges;
        Face g{rhs.vertex_id(bij.at(lhs.vertex_labels()[static_cast<std::size_t>(f[0])])),
               rhs.vertex_id(bij.at(lhs.vertex_labels()[static_cast<std::size_t>(f[1])]))};
        std::sort(g.begin(), g.end());
        if (!rhs.contains(g)) {
            cert.fail("edge " + lhs.face_label(f) + " of " + lhs_name
                      + " does not map to an edge of " + rhs_name);
            return;
        }
    }
    std::size_t rhs_edges = 0;
    for (const auto& f : rhs.faces())
        if (f.size() == 2)
            ++rhs_edges;
    if (edges != rhs_edges) {
        cert.fail("edge count mismatch: " + std::to_string(edges) + " vs "
                  + std::to_string(rhs_edges));
        return;
    }
    if (!is_flag(lhs)) {
        cert.fail(lhs_name + " is not flag");
        return;
    }
    if (!is_flag(rhs)) {
        cert.fail(rhs_name + " is not flag");
        return;
    }
    if (!is_simplicial_iso(bij, lhs, rhs)) {
        cert.fail("full face-level isomorphism check failed between " + lhs_name + " and "
                  + rhs_name);
        return;
    }
    cert.note("vertices matched: " + std::to_string(lhs.num_vertices()));
    cert.note("edges matched: " + std::to_string(edges));
    cert.note("faces matched: " + std::to_string(lhs.num_faces()));
}

}  // namespace detail

/**
 * Machine check that the r-colored barycentric subdivision and the type-I
 * multichain subdivision are the same complex under the multiplicity-vector
 * bijection: vertex bijection, edge preservation both ways, flagness of both
 * sides, then the full face-level isomorphism.
 */
inline VerificationCertificate verify_prop_5_1(const SimplicialComplex& sc, int r)
{
    VerificationCertificate cert;
    cert.suite = "prop51";
    cert.params["r"] = std::to_string(r);
    SuiteTimer timer(cert);

    ColoredBarycentricResult cb = colored_barycentric_full(sc, r);
    MultichainSubdivision ms = multichain_subdivision(sc, r, IncreasingMap::type_i(r));

    VertexBijection bij;
    for (std::size_t v = 0; v < cb.edge.vertices.size(); ++v) {
        Multichain m = theta(cb.edge.vertices[v].u, cb.edge.order);
        std::vector<int> back = theta_inverse(m, cb.edge.order);
        if (back != cb.edge.vertices[v].u) {
            cert.fail("theta round-trip failed at vertex "
                      + cb.edge.complex.vertex_labels()[v]);
            return cert;
        }
        bij[cb.edge.complex.vertex_labels()[v]] = multichain_label(m, ms.base.poset);
    }
    detail::check_iso_pair(cert, cb.edge.complex, ms.chains.complex, bij,
                           "colored barycentric", "type-I multichain complex");
    return cert;
}

/**
 * Apex-cube subdivision with slicing depth N, built combinatorially from
 * box-face chains. For every facet (treated as a simplex on its own vertex
 * set) and every apex vertex, the cube opposite the apex is cut into
 * N^(dim) grid cells; the simplices are the chains in the face lattice of
 * each cell. A face is labelled by its barycenter in doubled coordinates
 * (apex 2N, pinned 2k, free 2k+1); zero coordinates are dropped, which glues
 * shared boundary faces across cells, apexes and facets.
 */
struct CmsResult {
    SimplicialComplex complex;
    std::vector<std::map<int, int>> coords;  // complex vertex id -> {base id -> 1..2N}
    int N = 1;
};

inline std::string cms_label(const std::map<int, int>& coords,
                             const std::vector<std::string>& base_labels)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [v, k] : coords) {
        if (!first)
            s += ",";
        s += base_labels[static_cast<std::size_t>(v)] + ":" + std::to_string(k);
        first = false;
    }
    return s + "}";
}

inline CmsResult cms(const SimplicialComplex& sc, int N)
{
    if (N < 1)
        throw Error("cms: N must be positive");
    enum State { LO, HI, FREE };
    std::vector<std::vector<std::string>> facet_labels;
    std::map<std::string, std::map<int, int>> coord_of_label;

    for (const Face& facet : sc.facets()) {
        const int c = static_cast<int>(facet.size());
        for (int apex = 0; apex < c; ++apex) {
            std::vector<int> others;
            for (int i = 0; i < c; ++i)
                if (i != apex)
                    others.push_back(i);
            const std::size_t g = others.size();
            // walk the grid of cells
            std::vector<int> cell(g, 0);
            while (true) {
                // a face of the cell is a LO/HI/FREE state per coordinate
                auto label_of = [&](const std::vector<State>& st) {
                    std::map<int, int> coords;
                    coords[facet[static_cast<std::size_t>(apex)]] = 2 * N;
                    for (std::size_t i = 0; i < g; ++i) {
                        int k2 = 0;
                        if (st[i] == LO)
                            k2 = 2 * cell[i];
                        else if (st[i] == HI)
                            k2 = 2 * cell[i] + 2;
                        else
                            k2 = 2 * cell[i] + 1;
                        if (k2 > 0)
                            coords[facet[static_cast<std::size_t>(others[i])]] = k2;
                    }
                    return coords;
                };
                // maximal chains: pick a corner, then free coordinates one by
                // one in every order
                std::vector<State> corner(g, LO);
                while (true) {
                    std::vector<std::size_t> perm(g);
                    for (std::size_t i = 0; i < g; ++i)
                        perm[i] = i;
                    do {
                        std::vector<std::string> chain;
                        std::vector<State> st = corner;
                        auto push = [&]() {
                            std::map<int, int> coords = label_of(st);
                            std::string lab = cms_label(coords, sc.vertex_labels());
                            coord_of_label.emplace(lab, std::move(coords));
                            chain.push_back(std::move(lab));
                        };
                        push();
                        for (std::size_t step = 0; step < g; ++step) {
                            st[perm[step]] = FREE;
                            push();
                        }
                        facet_labels.push_back(std::move(chain));
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    // next corner
                    std::size_t pos = 0;
                    while (pos < g && corner[pos] == HI) {
                        corner[pos] = LO;
                        ++pos;
                    }
                    if (pos == g)
                        break;
                    corner[pos] = HI;
                }
                // next cell
                std::size_t pos = 0;
                while (pos < g && cell[pos] == N - 1) {
                    cell[pos] = 0;
                    ++pos;
                }
                if (pos == g)
                    break;
                ++cell[pos];
            }
        }
    }
    CmsResult out;
    out.N = N;
    out.complex = SimplicialComplex::from_facets(facet_labels);
    out.coords.resize(static_cast<std::size_t>(out.complex.num_vertices()));
    for (const auto& [lab, coords] : coord_of_label) {
        int id = out.complex.vertex_id(lab);
        if (id < 0)
            throw Error("cms: dangling label " + lab);
        out.coords[static_cast<std::size_t>(id)] = coords;
    }
    return out;
}

/**
 * Vertex bijection between the apex-cube picture and 2N-multichains of
 * faces: coordinate k_v counts the chain levels containing v, so level l of
 * the multichain is {v : k_v >= 2N+1-l}. Requires some coordinate to reach
 * 2N (the apex); throws ApexMissingError otherwise.
 */
inline std::vector<Face> phi(const std::map<int, int>& coords, int N)
{
    std::vector<Face> levels;
    bool apex = false;
    for (const auto& [v, k] : coords)
        if (k == 2 * N)
            apex = true;
    if (!apex)
        throw ApexMissingError("phi: no coordinate equals 2N");
    for (int l = 2 * N; l >= 1; --l) {
        Face f;
        for (const auto& [v, k] : coords)
            if (k >= l)
                f.push_back(v);
        std::sort(f.begin(), f.end());
        levels.push_back(std::move(f));
    }
    return levels;  // increasing chain of faces, length 2N
}

inline std::map<int, int> phi_inverse(const std::vector<Face>& levels)
{
    std::map<int, int> coords;
    for (const auto& f : levels)
        for (int v : f)
            ++coords[v];
    return coords;
}

/**
 * Machine check that the apex-cube subdivision at depth N and the type-II
 * multichain subdivision at r = 2N agree under phi: vertex bijection, edge
 * preservation both ways, flagness, full isomorphism.
 */
inline VerificationCertificate verify_prop_5_2(const SimplicialComplex& sc, int N)
{
    VerificationCertificate cert;
    cert.suite = "prop52";
    cert.params["N"] = std::to_string(N);
    SuiteTimer timer(cert);

    CmsResult cm = cms(sc, N);
    MultichainSubdivision ms = multichain_subdivision(sc, 2 * N, IncreasingMap::type_ii(2 * N));

    // face -> poset element id
    std::map<Face, int> elem_of;
    for (std::size_t i = 0; i < ms.base.elements.size(); ++i)
        elem_of[ms.base.elements[i]] = static_cast<int>(i);

    VertexBijection bij;
    for (std::size_t v = 0; v < cm.coords.size(); ++v) {
        std::vector<Face> levels = phi(cm.coords[v], N);
        if (phi_inverse(levels) != cm.coords[v]) {
            cert.fail("phi round-trip failed at vertex "
                      + cm.complex.vertex_labels()[v]);
            return cert;
        }
        Multichain m;
        for (const auto& f : levels) {
            auto it = elem_of.find(f);
            if (it == elem_of.end()) {
                cert.fail("phi image level " + sc.face_label(f) + " is not a face of the base");
                return cert;
            }
            m.push_back(it->second);
        }
        bij[cm.complex.vertex_labels()[v]] = multichain_label(m, ms.base.poset);
    }
    detail::check_iso_pair(cert, cm.complex, ms.chains.complex, bij, "apex-cube subdivision",
                           "type-II multichain complex");
    return cert;
}

}  // namespace mcs

#endif
