#include <doctest.h>

#include "prismslice/serialize.hpp"

using namespace prismslice;

TEST_CASE("polynomials serialize as arrays of p/q strings, index = degree") {
    RatPoly p{Rational(1), Rational(BigInt(-1), BigInt(2)), Rational(0), Rational(3)};
    json arr = to_json(p);
    CHECK(arr.dump() == R"(["1","-1/2","0","3"])");
    CHECK(rat_poly_from_json(arr) == p);

    CHECK(to_json(RatPoly{}).dump() == "[]");
    CHECK(rat_poly_from_json(json::array()) == RatPoly{});

    IntPoly h{BigInt(1), BigInt(2), BigInt(1)};
    CHECK(to_json(h).dump() == R"(["1","2","1"])");
}

TEST_CASE("weighted permutations serialize in canonical cycle order") {
    auto p = WeightedPermutation::create(8, {{3, 5, 7}, {1, 2, 6}, {4, 8}}, {2, 1, 0});
    json obj = to_json(p);
    CHECK(obj.dump() == R"({"cycles":[[1,2,6],[3,5,7],[4,8]],"weights":[1,2,0]})");
}

TEST_CASE("cap vectors serialize as plain arrays") {
    CHECK(to_json(CapVector({6, 3, 4})).dump() == "[6,3,4]");
}
