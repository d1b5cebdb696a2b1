#include <doctest.h>

#include "qtwist/cartan.hpp"

using namespace qtwist;

TEST_SUITE("cartan") {

TEST_CASE("validation") {
    CHECK(validate_cartan({{2}}).size() == 1);
    CHECK(validate_cartan({{2, -1}, {-1, 2}}).size() == 2);
    CHECK_THROWS_WITH_AS(validate_cartan({{2, 0}, {-1, 2}}), doctest::Contains("ZeroAsymmetry"),
                         Error);
    CHECK_THROWS_WITH_AS(validate_cartan({{1}}), doctest::Contains("BadDiagonal"), Error);
    CHECK_THROWS_WITH_AS(validate_cartan({{2, 1}, {-1, 2}}),
                         doctest::Contains("PositiveOffDiagonal"), Error);
    CHECK_THROWS_AS(validate_cartan({{2, -1}}), Error);
}

TEST_CASE("symmetrizers of the rank-2 types") {
    CHECK(symmetrize(validate_cartan({{2, -1}, {-1, 2}})).d == std::vector<long>{1, 1});
    CHECK(symmetrize(validate_cartan({{2, -1}, {-2, 2}})).d == std::vector<long>{2, 1});
    CHECK(symmetrize(validate_cartan({{2, -1}, {-3, 2}})).d == std::vector<long>{3, 1});
    // A2 + A1: per-component gcd 1
    CHECK(symmetrize(validate_cartan({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}})).d ==
          std::vector<long>{1, 1, 1});
    // B2 + A1
    CHECK(symmetrize(validate_cartan({{2, -1, 0}, {-2, 2, 0}, {0, 0, 2}})).d ==
          std::vector<long>{2, 1, 1});
}

TEST_CASE("symmetrizer identity holds exactly") {
    auto m = validate_cartan({{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}}); // B3-ish chain
    auto d = symmetrize(m).d;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d[i] * m.at(i, j) == d[j] * m.at(j, i));
}

TEST_CASE("not symmetrizable") {
    // a_12 a_23 a_31 ratio inconsistent around the triangle
    std::vector<std::vector<int>> m{{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}};
    CHECK_THROWS_WITH_AS(symmetrize(validate_cartan(m)), doctest::Contains("NotSymmetrizable"),
                         Error);
}

TEST_CASE("connected components") {
    auto one = components(validate_cartan({{2, 0}, {0, 2}}));
    CHECK(one == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(components(validate_cartan({{2, -1}, {-1, 2}})) == std::vector<std::vector<int>>{{0, 1}});
    auto mixed = components(validate_cartan({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}));
    CHECK(mixed == std::vector<std::vector<int>>{{0, 1}, {2}});
    // transitive closure through the middle node
    auto chain = components(validate_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    CHECK(chain == std::vector<std::vector<int>>{{0, 1, 2}});
}

} // TEST_SUITE
