// Acceptance suite: one line per criterion, exact arithmetic end to end.
// Exit status is the number of failing criteria.

#include "mcs/mcs.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mcs;

namespace {

struct Runner {
    int failures = 0;

    void run(const std::string& name, const std::function<void(std::ostringstream&)>& body)
    {
        std::ostringstream detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string error;
        try {
            body(detail);
        } catch (const std::exception& e) {
            ok = false;
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (!ok)
            ++failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)";
        if (!detail.str().empty())
            std::cout << " -- " << detail.str();
        if (!ok)
            std::cout << " -- " << error;
        std::cout << "\n";
    }
};

void require(bool cond, const std::string& msg)
{
    if (!cond)
        throw Error(msg);
}

void require_cert(const VerificationCertificate& cert)
{
    if (!cert.pass) {
        std::string why = cert.suite + " failed";
        if (!cert.witness.empty())
            why += ": " + cert.witness.back();
        throw Error(why);
    }
}

SimplicialComplex edge() { return complex_from_facets({{"1", "2"}}); }
SimplicialComplex simplex2() { return complex_from_facets({{"1", "2", "3"}}); }
SimplicialComplex hollow() { return complex_from_facets({{"1", "2"}, {"2", "3"}, {"1", "3"}}); }
SimplicialComplex glued() { return complex_from_facets({{"1", "2", "3"}, {"2", "3", "4"}}); }

std::string vec(const std::vector<BigInt>& v) { return vec_str(v); }

}  // namespace

int main()
{
    Runner runner;

    runner.run("criterion 1: f-vector invariance across admissible maps", [](std::ostringstream& out) {
        auto start = std::chrono::steady_clock::now();
        int cases = 0;
        for (const SimplicialComplex& sc : {edge(), simplex2(), hollow(), glued()})
            for (int r = 2; r <= 3; ++r) {
                require_cert(suite_main_theorem(sc, r));
                ++cases;
            }
        require_cert(suite_main_theorem(edge(), 4));
        ++cases;
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        require(secs < 60, "over the 60 s budget");
        out << cases << " complex/r pairs, every admissible map agrees";
    });

    runner.run("criterion 2: face-count transform equals brute-force subdivision",
               [](std::ostringstream& out) {
                   for (const SimplicialComplex& sc : {edge(), simplex2(), hollow(), glued()})
                       for (int r = 1; r <= 3; ++r) {
                           FVector closed = transform_f(sc.f_vector(), r);
                           require(closed == type_I(sc, r).f_vector(),
                                   "transform != brute force at r=" + std::to_string(r));
                           for (long k = 0; k + 1 < static_cast<long>(closed.size()); ++k)
                               require(f_via_multichain_sum(sc, r, k)
                                           == closed[static_cast<std::size_t>(k) + 1],
                                       "weighted chain-count sum disagrees");
                       }
                   FVector a = transform_f({1, 3, 3, 1}, 3);
                   require(a == FVector{1, 37, 90, 54}, "pinned r=3 value");
                   FVector b = transform_f({1, 3, 3, 1}, 2);
                   require(b == FVector{1, 19, 42, 24}, "pinned r=2 value");
                   require(a[1] - a[2] + a[3] == 1 && b[1] - b[2] + b[3] == 1,
                           "alternating sum is not 1");
                   out << "pinned: " << vec(a) << " and " << vec(b);
               });

    runner.run("criterion 3: h-transform matrix and conjugation identity",
               [](std::ostringstream& out) {
                   require_cert(suite_h_matrix_identity(4, 3));
                   require(h_matrix(2, 2).column(0) == std::vector<BigInt>{1, 3, 0},
                           "column 0 of R_2 at r=2");
                   require(h_matrix(3, 3).column(0) == std::vector<BigInt>{1, 34, 19, 0},
                           "column 0 of R_3 at r=3");
                   for (const SimplicialComplex& sc : {edge(), simplex2(), hollow(), glued()})
                       for (int r = 1; r <= 3; ++r)
                           require(transform_h(f_to_h(sc.f_vector()), r)
                                       == f_to_h(type_I(sc, r).f_vector()),
                                   "h-transform != brute force");
                   out << "R = H F H^-1 for d <= 4, r <= 3; spot columns hold";
               });

    runner.run("criterion 4: descent-table recurrences and symmetries",
               [](std::ostringstream& out) {
                   auto start = std::chrono::steady_clock::now();
                   require_cert(suite_eulerian_recurrences(5, 3));
                   auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
                   require(secs < 60, "over the 60 s budget");
                   out << "group sizes up to 5, r <= 3";
               });

    runner.run("criterion 5: chain-count closed form equals recurrence",
               [](std::ostringstream& out) {
                   VerificationCertificate cert = suite_chain_counts(5, 4, 3);
                   require_cert(cert);
                   out << cert.witness.back();
               });

    runner.run("criterion 6: face-matrix fold recurrence and bar partitions",
               [](std::ostringstream& out) {
                   require_cert(suite_bar_partitions(4, 3, 5));
                   out << "fold recurrence d <= 5; bar partitions d <= 4, all (t,j)";
               });

    runner.run("criterion 7: gamma vectors from slides, nonnegative",
               [](std::ostringstream& out) {
                   require_cert(suite_gamma(5, 3));
                   out << "decomposition == slide counts for d <= 5, r <= 3";
               });

    runner.run("criterion 8: real-rootedness and interlacing", [](std::ostringstream& out) {
        require_cert(suite_real_rooted(6, 3, 6, 3));
        require_cert(suite_interlacing(4, 3));
        out << "descent polynomials d <= 6; block sequences d <= 4; h-transforms sum <= 6";
    });

    runner.run("criterion 9: colored barycentric vs type-I isomorphism",
               [](std::ostringstream& out) {
                   for (const SimplicialComplex& sc : {edge(), simplex2(), hollow()})
                       for (int r = 1; r <= 3; ++r)
                           require_cert(verify_prop_5_1(sc, r));
                   require(colored_barycentric(simplex2(), 3).num_vertices() == 37, "37 vertices");
                   require(colored_barycentric(simplex2(), 2).num_vertices() == 19, "19 vertices");
                   require(colored_barycentric(simplex2(), 1).num_vertices() == 7, "7 vertices");
                   out << "full isomorphism certificates; vertex counts 37/19/7";
               });

    runner.run("criterion 10: apex-cube vs type-II isomorphism", [](std::ostringstream& out) {
        require_cert(verify_prop_5_2(edge(), 1));
        require_cert(verify_prop_5_2(simplex2(), 1));
        require_cert(verify_prop_5_2(edge(), 2));
        require(cms(simplex2(), 1).complex.num_vertices() == 19, "19 vertices at N=1");
        FVector f2 = cms(simplex2(), 2).complex.f_vector();
        require(f2[1] == 61, "61 vertices at N=2");
        require(f2 == transform_f({1, 3, 3, 1}, 4), "N=2 face counts match the transform");
        out << "isomorphism certificates; vertex counts 19 and 61";
    });

    runner.run("criterion 11: degenerations at r = 1", [](std::ostringstream& out) {
        for (const SimplicialComplex& sc : {edge(), simplex2(), hollow(), glued()}) {
            SimplicialComplex t1 = type_I(sc, 1);
            SimplicialComplex bary = barycentric(sc);
            SimplicialComplex cb1 = colored_barycentric(sc, 1);
            std::set<std::string> l1(t1.vertex_labels().begin(), t1.vertex_labels().end());
            std::set<std::string> l2(bary.vertex_labels().begin(), bary.vertex_labels().end());
            std::set<std::string> l3(cb1.vertex_labels().begin(), cb1.vertex_labels().end());
            require(l1 == l2 && l2 == l3, "labels differ among the r=1 constructions");
            VertexBijection id;
            for (const auto& lab : l1)
                id[lab] = lab;
            require(is_simplicial_iso(id, t1, bary), "type-I(.,1) != barycentric");
            require(is_simplicial_iso(id, bary, cb1), "barycentric != colored(.,1)");
            EdgewiseResult e1 = edgewise(sc, 1);
            VertexBijection base_id;
            for (const auto& lab : sc.vertex_labels())
                base_id[lab] = lab;
            require(is_simplicial_iso(base_id, e1.complex, sc), "edgewise(.,1) != base");
        }
        out << "identical labels at r=1; edgewise(.,1) is the identity relabelling";
    });

    std::cout << (runner.failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << "\n";
    return runner.failures;
}
