#include <doctest.h>

#include "mdim/poly.hpp"

using namespace mdim;

TEST_CASE("arithmetic basics") {
    IPoly a = {1, 2, 1};            // (x+1)^2
    IPoly b = {-1, 1};              // x-1
    CHECK(ipoly_mul(a, b) == IPoly{-1, -1, 1, 1});
    CHECK(ipoly_degree(ipoly_sub(a, a)) == -1);
    CHECK(ipoly_derivative(a) == IPoly{2, 2});
    CHECK(ipoly_eval(a, Rat(2)) == 9);
}

TEST_CASE("gcd and content") {
    IPoly f = ipoly_mul({-1, 1}, {-2, 1});   // (x-1)(x-2)
    IPoly g = ipoly_mul({-1, 1}, {-3, 1});   // (x-1)(x-3)
    CHECK(ipoly_gcd(f, g) == IPoly{-1, 1});
    CHECK(ipoly_content({6, -9, 12}) == 3);
}

TEST_CASE("squarefree decomposition") {
    // (x-1)^2 (x+2)
    IPoly f = ipoly_mul(ipoly_mul({-1, 1}, {-1, 1}), {2, 1});
    auto parts = ipoly_squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == IPoly{2, 1});
    CHECK(parts[1] == IPoly{-1, 1});
}

TEST_CASE("sturm root counting") {
    // x^4 - 4x^2 + 2: four real roots, two in (0, 2]
    IPoly f = {2, 0, -4, 0, 1};
    auto chain = sturm_chain(f);
    CHECK(sturm_count(chain, Rat(-10), Rat(10)) == 4);
    CHECK(sturm_count(chain, Rat(0), Rat(2)) == 2);
    CHECK(sturm_count(chain, Rat(0), Rat(1)) == 1);
    CHECK(sturm_count(chain, Rat(2), Rat(10)) == 0);
}

TEST_CASE("rational root multiplicity") {
    // x^2 (x - 1/2)^3 scaled to integers: 8x^5 - 12x^4 + 6x^3 - x^2
    IPoly f = {0, 0, -1, 6, -12, 8};
    CHECK(rational_root_multiplicity(f, Rat(0)) == 2);
    CHECK(rational_root_multiplicity(f, Rat(1, 2)) == 3);
    CHECK(rational_root_multiplicity(f, Rat(1)) == 0);
}
