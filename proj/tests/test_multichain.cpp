#include "test_helpers.hpp"

#include <doctest.h>

#include <set>

using namespace mcs;
using namespace mcs_test;

namespace {

// all strictly increasing maps [r] -> [2r], admissible or not
std::vector<IncreasingMap> all_increasing_maps(int r)
{
    std::vector<IncreasingMap> out;
    std::vector<int> vals(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int t, int lo) -> void {
        if (t > r) {
            out.push_back(IncreasingMap{vals});
            return;
        }
        for (int v = lo; v <= 2 * r; ++v) {
            vals[static_cast<std::size_t>(t - 1)] = v;
            self(self, t + 1, v + 1);
        }
    };
    rec(rec, 1, 1);
    return out;
}

}  // namespace

TEST_CASE("admissible shift maps")
{
    auto r1 = admissible_iotas(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].values == std::vector<int>{1});

    auto r2 = admissible_iotas(2);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].values == std::vector<int>{1, 3});
    CHECK(r2[1].values == std::vector<int>{1, 4});

    auto r3 = admissible_iotas(3);
    REQUIRE(r3.size() == 4);
    CHECK(r3[0].values == std::vector<int>{1, 3, 5});
    CHECK(r3[1].values == std::vector<int>{1, 3, 6});
    CHECK(r3[2].values == std::vector<int>{1, 4, 5});
    CHECK(r3[3].values == std::vector<int>{1, 4, 6});
    for (const auto& m : r3)
        CHECK(m.admissible());
    CHECK_FALSE(IncreasingMap{{1, 2}}.admissible());
    CHECK(IncreasingMap{{2, 4}}.admissible());  // first value 2 is allowed by the criterion
}

TEST_CASE("multichain order relation")
{
    FinitePoset chain2 = chain_poset(2);
    // r = 1: the relation collapses to the poset order
    IncreasingMap one{{1}};
    CHECK(multichain_le({0}, {1}, one, chain2));
    CHECK_FALSE(multichain_le({1}, {0}, one, chain2));
    CHECK(multichain_le({0}, {0}, one, chain2));

    // r = 2 on the chain 1 < 2, p = (1,2), q = (1,1)
    Multichain p{0, 1}, q{0, 0};
    CHECK(multichain_le(p, q, IncreasingMap{{1, 4}}, chain2));
    CHECK_FALSE(multichain_le(p, q, IncreasingMap{{1, 3}}, chain2));
    CHECK(multichain_le(q, p, IncreasingMap{{1, 3}}, chain2));
    CHECK_THROWS_AS(multichain_le({0}, {0, 1}, IncreasingMap{{1, 3}}, chain2),
                    LengthMismatchError);
}

TEST_CASE("reflexivity holds exactly for admissible maps")
{
    for (int r = 1; r <= 3; ++r)
        for (const SimplicialComplex& sc : test_complexes()) {
            FacePoset fp = face_poset(sc);
            std::vector<Multichain> chains = enumerate_multichains(fp.poset, r);
            for (const IncreasingMap& iota : all_increasing_maps(r)) {
                bool reflexive = true;
                for (const auto& m : chains)
                    if (!multichain_le(m, m, iota, fp.poset)) {
                        reflexive = false;
                        break;
                    }
                CHECK(reflexive == iota.admissible());
            }
        }
}

TEST_CASE("f-vector invariance on posets that are not face posets")
{
    // diamond: bottom < a, b < top
    std::vector<std::vector<bool>> dle(4, std::vector<bool>(4, false));
    for (int i = 0; i < 4; ++i)
        dle[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    dle[0][1] = dle[0][2] = dle[0][3] = true;
    dle[1][3] = dle[2][3] = true;
    FinitePoset diamond(dle, {"bot", "a", "b", "top"});

    // fence: a < x > b (zigzag)
    std::vector<std::vector<bool>> fle(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i)
        fle[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    fle[0][1] = fle[2][1] = true;
    FinitePoset fence(fle, {"a", "x", "b"});

    for (const FinitePoset& p : {diamond, fence, chain_poset(4), antichain_poset(3)})
        for (int r = 2; r <= 3; ++r) {
            std::vector<FVector> fs;
            for (const IncreasingMap& iota : admissible_iotas(r))
                fs.push_back(build_multichain_complex(p, r, iota).complex.f_vector());
            for (std::size_t i = 1; i < fs.size(); ++i)
                CHECK(fs[i] == fs[0]);
        }

    // r = 1 on a generic poset is the order complex: chains of the diamond
    MultichainComplex oc = build_multichain_complex(diamond, 1, IncreasingMap{{1}});
    CHECK(oc.complex.f_vector() == FVector{1, 4, 5, 2});
}

TEST_CASE("multichain enumeration")
{
    CHECK(enumerate_multichains(antichain_poset(5), 3).size() == 5);
    CHECK(enumerate_multichains(face_poset(simplex2()).poset, 3).size() == 37);
    CHECK(enumerate_multichains(face_poset(edge_complex()).poset, 2).size() == 5);
    // count formula: sum over l of (r^l - (r-1)^l) f_{l-1}
    for (const auto& sc : test_complexes())
        for (int r = 1; r <= 3; ++r) {
            FacePoset fp = face_poset(sc);
            FVector f = sc.f_vector();
            BigInt expect = 0;
            for (std::size_t l = 1; l < f.size(); ++l)
                expect += (ipow(BigInt(r), static_cast<long>(l))
                           - ipow(BigInt(r - 1), static_cast<long>(l)))
                          * f[l];
            CHECK(BigInt(static_cast<long long>(enumerate_multichains(fp.poset, r).size()))
                  == expect);
        }
}

TEST_CASE("multichain subdivision complexes")
{
    // r = 1 gives the order complex, i.e. the barycentric subdivision
    SimplicialComplex sd1 = type_I(simplex2(), 1);
    SimplicialComplex bary = barycentric(simplex2());
    CHECK(sd1.f_vector() == FVector{1, 7, 12, 6});
    CHECK(is_simplicial_iso(
        [&] {
            VertexBijection b;
            for (const auto& lab : sd1.vertex_labels())
                b[lab] = lab;
            return b;
        }(),
        sd1, bary));

    FacePoset fp = face_poset(simplex2());
    MultichainComplex m135 = build_multichain_complex(fp.poset, 3, IncreasingMap{{1, 3, 5}});
    CHECK(m135.complex.f_vector() == FVector{1, 37, 90, 54});
    for (const IncreasingMap& iota : admissible_iotas(2))
        CHECK(build_multichain_complex(fp.poset, 2, iota).complex.f_vector()
              == FVector{1, 19, 42, 24});

    CHECK(type_I(simplex2(), 3).num_vertices() == 37);
    CHECK(type_II(simplex2(), 2).num_vertices() == 19);
    CHECK_THROWS_AS(build_multichain_complex(fp.poset, 2, IncreasingMap{{1, 2}}),
                    NonAdmissibleIotaError);

    // the 1-skeleton is exactly the relation graph and the output is flag
    CHECK(is_flag(m135.complex));
    for (std::size_t i = 0; i < m135.multichains.size(); ++i)
        for (std::size_t j = i + 1; j < m135.multichains.size(); ++j) {
            const auto& a = m135.multichains[i];
            const auto& b = m135.multichains[j];
            bool related = multichain_le(a, b, m135.iota, fp.poset)
                           || multichain_le(b, a, m135.iota, fp.poset);
            Face e{m135.complex.vertex_id(multichain_label(a, fp.poset)),
                   m135.complex.vertex_id(multichain_label(b, fp.poset))};
            std::sort(e.begin(), e.end());
            CHECK(m135.complex.contains(e) == related);
        }
}

TEST_CASE("face normalization is a dimension-preserving bijection")
{
    // frozen row behavior: a monotone decreasing row with values (3,2,1,1)
    // flips to (1,2,3,3); ids are 0-based, row 1 is the flipped row here
    MultichainFace face{{Multichain{2, 9}, Multichain{1, 9}, Multichain{0, 9}, Multichain{0, 9}}};
    MultichainFace flipped = normalize_face(face, IncreasingMap{{2, 3}});
    CHECK(flipped.columns[0][0] == 0);
    CHECK(flipped.columns[1][0] == 1);
    CHECK(flipped.columns[2][0] == 2);
    CHECK(flipped.columns[3][0] == 2);
    for (int j = 0; j < 4; ++j)
        CHECK(flipped.columns[static_cast<std::size_t>(j)][1] == 9);

    for (const SimplicialComplex& sc : {edge_complex(), simplex2()})
        for (int r = 2; r <= 3; ++r) {
            FacePoset fp = face_poset(sc);
            IncreasingMap type_i = IncreasingMap::type_i(r);
            MultichainComplex ref = build_multichain_complex(fp.poset, r, type_i);
            for (const IncreasingMap& iota2 : admissible_iotas(r)) {
                MultichainComplex mc = build_multichain_complex(fp.poset, r, iota2);
                for (long k = 0; k <= mc.complex.dim(); ++k) {
                    std::vector<MultichainFace> source =
                        faces_of_dim(mc, static_cast<int>(k), fp.poset);
                    std::vector<MultichainFace> target =
                        faces_of_dim(ref, static_cast<int>(k), fp.poset);
                    std::set<std::vector<Multichain>> image, expected;
                    for (const auto& f : target)
                        expected.insert(f.columns);
                    for (const auto& f : source) {
                        MultichainFace nf = normalize_face(f, iota2);
                        // same dimension, lands in the type-I complex
                        CHECK(nf.columns.size() == f.columns.size());
                        MultichainFace sorted_nf = make_face(nf.columns, type_i, fp.poset);
                        image.insert(sorted_nf.columns);
                        // and the inverse recipe returns to the source complex
                        MultichainFace back = normalize_face(sorted_nf, iota2);
                        MultichainFace sorted_back = make_face(back.columns, iota2, fp.poset);
                        CHECK(sorted_back.columns == f.columns);
                    }
                    CHECK(image == expected);  // injective and surjective per dimension
                }
            }
        }
}

TEST_CASE("restriction: dropping the last column of a face leaves a face")
{
    FacePoset fp = face_poset(simplex2());
    MultichainComplex mc = build_multichain_complex(fp.poset, 2, IncreasingMap{{1, 4}});
    for (long k = 1; k <= mc.complex.dim(); ++k)
        for (const auto& f : faces_of_dim(mc, static_cast<int>(k), fp.poset)) {
            std::vector<Multichain> cols(f.columns.begin(), f.columns.end() - 1);
            CHECK_NOTHROW(make_face(cols, mc.iota, fp.poset));
        }
}

TEST_CASE("multichain labels")
{
    FacePoset fp = face_poset(edge_complex());
    std::vector<Multichain> chains = enumerate_multichains(fp.poset, 2);
    bool found = false;
    for (const auto& m : chains)
        if (multichain_label(m, fp.poset) == "{1}⊆{1,2}")
            found = true;
    CHECK(found);
}
