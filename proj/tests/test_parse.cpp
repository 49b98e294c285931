#include "itdual/parse.hpp"

#include "itdual/catalog.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace itdual;
using test::ground_of_size;
using test::random_expr;

TEST_CASE("parse_expr")
{
    SUBCASE("the Ingleton inequality text form")
    {
        InfExpr parsed = parse_expr("I(A;B|C) + I(A;B|D) + I(C;D) - I(A;B)");
        CHECK(expr_equal(parsed, catalog_entry("ingleton").expr));
    }
    SUBCASE("explicit ground set widens the expression")
    {
        InfExpr c = parse_expr("H(A)", GroundSet({"A", "B"}));
        CHECK(c.ground().size() == 2);
        CHECK(c.coeff(1) == 1);
    }
    SUBCASE("cancellation yields the empty expression")
    {
        InfExpr c = parse_expr("2/3 H(A,B) - 2/3 H(A,B)");
        CHECK(c.empty());
        CHECK(c.ground().size() == 2);
    }
    SUBCASE("uppercase runs split, identifiers do not")
    {
        CHECK(expr_equal(parse_expr("H(AB)"), parse_expr("H(A,B)")));
        InfExpr x = parse_expr("H(X1)");
        CHECK(x.ground().labels() == std::vector<std::string>{"X1"});
    }
    SUBCASE("colon works as the mutual information separator")
    {
        CHECK(expr_equal(parse_expr("I(A:B|C)"), parse_expr("I(A;B|C)")));
    }
    SUBCASE("coefficients: integers, fractions, optional star")
    {
        InfExpr c = parse_expr("2*H(A) + 1/2 H(B) - 3 H(A,B)");
        CHECK(c.coeff(1) == 2);
        CHECK(c.coeff(2) == Rat(1, 2));
        CHECK(c.coeff(3) == -3);
    }
    SUBCASE("errors carry positions")
    {
        CHECK_THROWS_AS(parse_expr("I(A;B"), ParseError);
        CHECK_THROWS_AS(parse_expr("H()"), ParseError);
        CHECK_THROWS_AS(parse_expr("H(A) + + H(B)"), ParseError);
        CHECK_THROWS_AS(parse_expr("1/0 H(A)"), ParseError);
        CHECK_THROWS_AS(parse_expr(""), ParseError);
        try {
            parse_expr("H(A) # H(B)");
            CHECK(false);
        } catch (const ParseError& e) {
            CHECK(e.position == 5);
        }
    }
    SUBCASE("unknown labels are rejected under an explicit ground set")
    {
        CHECK_THROWS_AS(parse_expr("H(A,Q)", GroundSet({"A", "B"})), ParseError);
    }
}

TEST_CASE("print_expr round trips")
{
    SUBCASE("H-form of a small expression")
    {
        InfExpr c = parse_expr("I(A;B)");
        CHECK(print_expr(c, ExprStyle::HForm) == "H(A) + H(B) - H(A,B)");
        CHECK(print_expr(c, ExprStyle::IFormGreedy) == "I(A;B)");
    }
    SUBCASE("empty expression prints as 0")
    {
        CHECK(print_expr(InfExpr(ground_of_size(2)), ExprStyle::HForm) == "0");
        CHECK(print_expr(InfExpr(ground_of_size(2)), ExprStyle::IFormGreedy) == "0");
        CHECK(parse_expr("0", ground_of_size(2)).empty());
        CHECK_THROWS_AS(parse_expr("0"), ParseError);
    }
    SUBCASE("parse(print(c)) is the identity on catalog entries")
    {
        for (const auto& entry : catalog()) {
            const std::string h = print_expr(entry.expr, ExprStyle::HForm);
            CHECK(expr_equal(parse_expr(h, entry.expr.ground()), entry.expr));
            // the greedy I-form is display-oriented but still parses back
            const std::string i = print_expr(entry.expr, ExprStyle::IFormGreedy);
            CHECK(expr_equal(parse_expr(i, entry.expr.ground()), entry.expr));
        }
    }
    SUBCASE("parse(print(c)) on random expressions")
    {
        std::mt19937_64 rng(43);
        for (int n = 2; n <= 5; ++n) {
            const GroundSet g = ground_of_size(n);
            for (int round = 0; round < 60; ++round) {
                InfExpr c = random_expr(rng, g);
                CHECK(expr_equal(parse_expr(print_expr(c, ExprStyle::HForm), g), c));
                CHECK(expr_equal(parse_expr(print_expr(c, ExprStyle::IFormGreedy), g), c));
            }
        }
    }
    SUBCASE("the dual of the basic inequality prints as I(A;B|D)")
    {
        InfExpr basic = parse_expr("I(A;B|C)", GroundSet({"A", "B", "C", "D"}));
        CHECK(print_expr(dual_expr(basic), ExprStyle::IFormGreedy) == "I(A;B|D)");
    }
}

TEST_CASE("parse_label_list")
{
    CHECK(parse_label_list("A,B,C") == std::vector<std::string>{"A", "B", "C"});
    CHECK(parse_label_list("ABC") == std::vector<std::string>{"A", "B", "C"});
    CHECK(parse_label_list("X1,Y2") == std::vector<std::string>{"X1", "Y2"});
    CHECK_THROWS_AS(parse_label_list("A,,B"), std::invalid_argument);
    CHECK_THROWS_AS(parse_label_list("A,A"), std::invalid_argument);
}
