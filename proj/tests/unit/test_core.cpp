#include "doctest.h"
#include "dynamo/arith.hpp"
#include "dynamo/dynatomic.hpp"
#include "dynamo/roots.hpp"

using namespace dynamo;

static QPoly qp(std::initializer_list<long> c) {
    std::vector<Q> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(v);
}

TEST_CASE("resultant of small polynomials") {
    CHECK(resultant(qp({1, 0, 1}), qp({-2, 1})) == Q(5));
}

TEST_CASE("rational roots") {
    auto r = rational_roots(qp({1, -2, -5, 6}));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Q(-1, 2));
    CHECK(r[1] == Q(1, 3));
    CHECK(r[2] == Q(1));
}

TEST_CASE("factor") {
    auto f = prime_divisors(Z(10403));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 101);
}

TEST_CASE("sigma of 1/z^3") {
    auto f = QDyn::make({Q(0), Q(0), Q(0), Q(1)}, {Q(1), Q(0), Q(0), Q(0)}, 3);
    auto s = sigma_invariants(f, 1, false);
    REQUIRE(s.values.size() == 4);
    CHECK(s.values[0] == Q(-12));
    CHECK(s.values[1] == Q(54));
    CHECK(s.values[2] == Q(-108));
    CHECK(s.values[3] == Q(81));
}
