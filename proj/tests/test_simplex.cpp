#include "itdual/simplex.hpp"

#include <doctest.h>

using namespace itdual;

namespace {

std::vector<Rat> col(std::vector<int> v)
{
    return std::vector<Rat>(v.begin(), v.end());
}

}

TEST_CASE("decide_cone_membership")
{
    SUBCASE("interior point of a 2d cone")
    {
        // columns (1,0), (1,1); rhs (3,2) = 1*(1,0) + 2*(1,1)
        auto r = decide_cone_membership({col({1, 0}), col({1, 1})}, col({3, 2}));
        REQUIRE(r.feasible);
        CHECK(r.combination == std::vector<Rat>{1, 2});
    }
    SUBCASE("zero rhs is always inside")
    {
        auto r = decide_cone_membership({col({1, 2}), col({-1, 1})}, col({0, 0}));
        REQUIRE(r.feasible);
        CHECK(r.combination == std::vector<Rat>{0, 0});
    }
    SUBCASE("outside: a separator comes back (checked internally too)")
    {
        // cone of (1,0) and (1,1) does not contain (-1, 1)
        auto r = decide_cone_membership({col({1, 0}), col({1, 1})}, col({-1, 1}));
        REQUIRE(!r.feasible);
        REQUIRE(r.separator.size() == 2);
        // s^T columns >= 0, <s, rhs> < 0
        CHECK(r.separator[0] >= 0);
        CHECK(r.separator[0] + r.separator[1] >= 0);
        CHECK(-r.separator[0] + r.separator[1] < 0);
    }
    SUBCASE("negative rhs entries are handled by row flips")
    {
        auto r = decide_cone_membership({col({-1, 0}), col({0, -2})}, col({-5, -3}));
        REQUIRE(r.feasible);
        CHECK(r.combination == std::vector<Rat>{5, Rat(3, 2)});
    }
    SUBCASE("fractional data stays exact")
    {
        auto r = decide_cone_membership(
            {{Rat(1, 3), Rat(0)}, {Rat(0), Rat(1, 7)}}, {Rat(2, 9), Rat(5, 14)});
        REQUIRE(r.feasible);
        CHECK(r.combination == std::vector<Rat>{Rat(2, 3), Rat(5, 2)});
    }
    SUBCASE("dimension mismatch is rejected")
    {
        CHECK_THROWS_AS(decide_cone_membership({col({1})}, col({1, 2})),
                        std::invalid_argument);
    }
}
