#include "test_helpers.hpp"

#include <doctest.h>

using namespace mcs;

TEST_CASE("complex JSON parsing")
{
    json j = json::parse(R"({"facets": [[1, 2, 3]]})");
    SimplicialComplex sc = complex_from_json(j);
    CHECK(sc.f_vector() == FVector{1, 3, 3, 1});
    CHECK(sc.vertex_labels() == std::vector<std::string>{"1", "2", "3"});

    json mixed = json::parse(R"({"facets": [["a", 2], [2, "c"]]})");
    SimplicialComplex sm = complex_from_json(mixed);
    CHECK(sm.f_vector() == FVector{1, 3, 2});

    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets": []})")), EmptyInputError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets": [[]]})")), EmptyFacetError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"([1,2])")), Error);
}

TEST_CASE("complex JSON emission and round trip")
{
    SimplicialComplex sc = complex_from_json(json::parse(R"({"facets": [[1,2,3],[2,3,4]]})"));
    json out = complex_to_json(sc);
    CHECK(out["vertices"] == json::parse("[1,2,3,4]"));
    CHECK(out["f_vector"] == json::parse("[1,4,5,2]"));
    CHECK(out["h_vector"] == json::parse("[1,1,0,0]"));
    REQUIRE(out.contains("facets"));
    SimplicialComplex back = complex_from_json(out);
    CHECK(back.f_vector() == sc.f_vector());
    // emission is deterministic
    CHECK(complex_to_json(sc).dump() == out.dump());

    // string labels stay strings
    SimplicialComplex named = complex_from_json(json::parse(R"({"facets": [["x","y"]]})"));
    CHECK(complex_to_json(named)["vertices"] == json::parse(R"(["x","y"])"));
}

TEST_CASE("big integers in JSON")
{
    CHECK(bigint_to_json(BigInt(42)) == json(42));
    CHECK(bigint_to_json(BigInt(-7)) == json(-7));
    BigInt huge = ipow(BigInt(10), 25);
    json j = bigint_to_json(huge);
    CHECK(j.is_string());
    CHECK(bigint_from_json(j) == huge);
    CHECK(bigint_from_json(json(123)) == 123);
}

TEST_CASE("certificates serialize")
{
    VerificationCertificate cert = suite_main_theorem(
        complex_from_json(json::parse(R"({"facets": [[1,2]]})")), 2);
    json j = certificate_to_json(cert);
    CHECK(j["suite"] == "main-theorem");
    CHECK(j["pass"] == true);
    CHECK(j["witness"].size() >= 2);
}
