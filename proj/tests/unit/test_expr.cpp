#include "doctest.h"
#include "dynamo/expr.hpp"

using namespace dynamo;

TEST_CASE("rational literal binding") {
    CHECK(eval_q("2/3^2", {}) == Q(4, 9));
    CHECK(eval_q("z/2/3", {{"z", Q(1)}}) == Q(1, 6));
    CHECK(eval_q("-1/2 + 3*x", {{"x", Q(1, 3)}}) == Q(1, 2));
    CHECK_THROWS_AS(eval_q("1/(x-1)", {{"x", Q(1)}}), DegenerateParameter);
    CHECK_THROWS_AS(eval_q("y+1", {}), UnboundSymbol);
    CHECK_THROWS_AS(parse_expr("2z"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(1+2"), SyntaxError);
}

TEST_CASE("map parsing") {
    auto tet = parse_map("(z^3+a)/(a*z^2)", {{"a", Q(-3)}});
    auto ref = QDyn::make({Q(1), Q(0), Q(0), Q(-3)}, {Q(0), Q(-3), Q(0), Q(0)}, 3);
    CHECK(tet.F().p.c == ref.F().p.c);
    CHECK(tet.G().p.c == ref.G().p.c);
    auto inv = parse_map("1/z^3");
    CHECK(inv.degree() == 3);
    CHECK_THROWS_AS(parse_map("(z^2+1)/(z^2+1)"), DegenerateMap);
    CHECK_THROWS_AS(parse_map("(z^2+a)/z", {}), UnboundSymbol);
    auto g = parse_map_any("(z^3+a)/(a*z^2)", {}, true);
    REQUIRE(g.generic);
    CHECK(g.param == "a");
}

TEST_CASE("mobius parsing") {
    auto m = parse_mobius("[[1,-1@i],[-1@i,1]]");
    CHECK(!mobius_is_rational(m));
    auto r = parse_mobius("[[0, 1], [1, 0]]");
    CHECK(mobius_is_rational(r));
    CHECK_THROWS_AS(parse_mobius("[[1,1],[1,1]]"), NonInvertible);
    CHECK_THROWS_AS(parse_mobius("[[1,1],[1]]"), SyntaxError);
}

TEST_CASE("polynomial relations") {
    auto p = parse_mpoly("s1 - 2*s2 - s3 + 12");
    CHECK(p.eval({{"s1", Q(1)}, {"s2", Q(2)}, {"s3", Q(9)}}) == Q(0));
    CHECK(p.variables().size() == 3);
}
