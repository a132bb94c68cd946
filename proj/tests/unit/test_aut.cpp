#include "doctest.h"
#include "dynamo/automorphism.hpp"
#include "dynamo/expr.hpp"

using namespace dynamo;

TEST_CASE("rational automorphisms of 1/z^3") {
    auto f = parse_map("1/z^3");
    CHECK(is_automorphism(f, Mobius<Q>(0, 1, 1, 0)));
    auto rep = rational_automorphisms(f, 1);
    CHECK(rep.order == 4);
    auto tet = parse_map("(z^3-3)/(-3*z^2)");
    CHECK(rational_automorphisms(tet, 2).order == 1);
    auto c2 = parse_map("(z^3+2*z)/(5*z^2+1)");
    CHECK(is_automorphism(c2, Mobius<Q>(-1, 0, 0, 1)));
}

TEST_CASE("group tables over quadratic rings") {
    auto f = parse_map("(z^3+5)/(5*z^2)");
    auto zeta = parse_mobius("[[1@zeta3,0],[0,1]]");
    CHECK(verify_group_table(f, {zeta}, 3));
    CHECK_THROWS_AS(verify_group_table(f, {zeta}, 2), ClosureExceeded);
    auto g = parse_map("(z^4+3*z)/(3*z^3+1)");
    CHECK(verify_group_table(g, {parse_mobius("[[0,1],[1,0]]")}, 2));
    CHECK(verify_group_table(g, {zeta, parse_mobius("[[0,1],[1,0]]")}, 6));
}

TEST_CASE("explicit conjugations") {
    auto f = parse_map("(z^3+2)/(2*z^2)");
    auto g = parse_map("2*z/(2*z^3+1)");
    CHECK(is_conjugate_by(f, g, Mobius<Q>(0, 1, 1, 0)));
    auto f2 = parse_map("(3*z^2+1)/(z^3+3*z)");
    auto f3 = parse_map("(z^3+3*z)/(3*z^2+1)");
    CHECK(is_conjugate_by(f2, f3, parse_mobius("[[1,-1@i],[-1@i,1]]")));
    // parameter k goes to (k+3)/(k-1); k = 3 is fixed
    CHECK(is_conjugate_by(parse_map("(5*z^2+1)/(z^3+5*z)"), parse_map("(z^3+2*z)/(2*z^2+1)"),
                          parse_mobius("[[1,-1@i],[-1@i,1]]")));
    CHECK_FALSE(is_conjugate_by(parse_map("(5*z^2+1)/(z^3+5*z)"), parse_map("(z^3+5*z)/(5*z^2+1)"),
                                parse_mobius("[[1,-1@i],[-1@i,1]]")));
    CHECK(is_conjugate_by(parse_map("1/z^3"), parse_map("1/(16*z^3)"), Mobius<Q>(2, 0, 0, 1)));
}

TEST_CASE("sigma separation") {
    CHECK(sigma_separates(parse_map("(z^3+1)/z^2"), parse_map("(z^3+2)/(2*z^2)"), {1}));
    CHECK(!sigma_separates(parse_map("(2*z^2-1)/(z^3-2*z)"), parse_map("(5*z^2-1)/(z^3-5*z)"), {1}));
}
