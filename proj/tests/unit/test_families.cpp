#include "doctest.h"
#include "dynamo/automorphism.hpp"
#include "dynamo/expr.hpp"
#include "dynamo/families.hpp"

#include <chrono>
#include <fstream>

using namespace dynamo;

namespace {

std::vector<std::vector<Q>> load(const std::string& id) {
    std::ifstream in(std::string(DYNAMO_DATA_DIR) + "/" + id + ".tsv");
    REQUIRE(in);
    return read_params_tsv(in);
}

std::vector<std::vector<Q>> samples(const std::string& id) {
    const auto& fam = family_spec(id);
    std::vector<std::vector<Q>> out;
    const std::vector<Q> pool{Q(2), Q(-3), Q(5, 2), Q(-7, 3), Q(4)};
    for (size_t i = 0; out.size() < 3 && i < pool.size(); ++i) {
        std::vector<Q> p;
        for (size_t j = 0; j < fam.params.size(); ++j) p.push_back(pool[(i + 2 * j) % pool.size()]);
        try {
            family_make(id, p);
            out.push_back(p);
        } catch (const DegenerateParameter&) {
        }
    }
    return out;
}

} // namespace

TEST_CASE("family construction") {
    CHECK(same_map(family_make("a3c3", {Q(-3)}), parse_map("(z^3-3)/(-3*z^2)")));
    CHECK_THROWS_AS(family_make("a3d2g", {Q(1)}), DegenerateParameter);
    CHECK_THROWS_AS(family_make("a3c2f", {Q(2), Q(1, 2)}), DegenerateParameter);
    CHECK_THROWS_AS(family_make("a4c2", {Q(2), Q(1), Q(1)}), DegenerateParameter);
    CHECK_THROWS_AS(family_make("a3c3", {}), IndexOutOfRange);
    CHECK_THROWS_AS(family_spec("a5c9"), UnknownFamily);
    for (const auto& fam : family_catalog()) {
        std::vector<Q> p(fam.params.size(), Q(3));
        auto f = family_make(fam.id, p);
        CHECK(f.degree() == fam.degree);
    }
}

TEST_CASE("shipped generators close into the stated groups") {
    for (const auto& fam : family_catalog()) {
        std::vector<Q> p(fam.params.size(), Q(3));
        std::vector<Mobius<NF>> gens;
        for (const auto& g : fam.generators) gens.push_back(parse_mobius(g.matrix));
        CHECK_MESSAGE(verify_group_table(family_make(fam.id, p), gens, fam.group_order), fam.id);
    }
}

TEST_CASE("locus parametrizations") {
    CHECK(locus_parameterize("a3c3", "extra_fixed", Q(2)) == std::vector<Q>{Q(-1, 7)});
    CHECK(locus_parameterize("a4c4", "extra_fixed", Q(1)) == std::vector<Q>{Q(2)});
    CHECK(locus_parameterize("a4d3", "two_cycle", Q(2)) == std::vector<Q>{Q(31, 4)});
    CHECK_THROWS_AS(locus_parameterize("a3c3", "extra_fixed", Q(1)), ExcludedParameter);
    CHECK_THROWS_AS(locus_parameterize("a3d2g", "tails_pm1", Q(-2)), ExcludedParameter);
    CHECK_THROWS_AS(locus_parameterize("a3c3", "nowhere", Q(2)), IndexOutOfRange);
    for (const auto& fam : family_catalog())
        for (const auto& l : fam.loci)
            for (int n : {2, 3, -3}) {
                auto p = locus_parameterize(fam.id, l.name, Q(n));
                CHECK_MESSAGE(classify_graph(fam.id, p) == l.tmpl, std::string(fam.id + "/" + l.name + " t=" + std::to_string(n)));
            }
}

TEST_CASE("generic members land on the base template") {
    CHECK(classify_graph("a3c3", {Q(7)}) == "G4");
    CHECK(classify_graph("a4c4", {Q(3)}) == "G1");
    CHECK(classify_graph("a4d3", {Q(3)}) == "G1");
    CHECK(classify_graph("a3d2f", {Q(7)}) == "G1");
    CHECK(classify_graph("a3d2g", {Q(7)}) == "G1");
    CHECK(classify_graph("a3c4", {}) == "G1");
    CHECK(classify_graph("a3a4tet", {}) == "G1");
    CHECK(classify_graph("a4c5", {}) == "G1");
}

TEST_CASE("sigma closed forms and relations") {
    for (const auto& fam : family_catalog()) {
        if (fam.forms.empty() && fam.relations.empty()) continue;
        auto s = samples(fam.id);
        REQUIRE(!s.empty());
        bool any = false;
        for (int n : {1, 2}) {
            bool ok = false;
            try {
                ok = verify_sigma_closed_forms(fam.id, n, s);
            } catch (const IndexOutOfRange&) {
                continue;
            }
            any = true;
            CHECK_MESSAGE(ok, std::string(fam.id + " n=" + std::to_string(n)));
        }
        CHECK(any);
        for (const auto& p : s) CHECK_MESSAGE(failing_relations(fam.id, p).empty(), fam.id);
    }
}

TEST_CASE("census over the shipped parameter lists") {
    // a3c2f (0,-14/3) repeats the graph of (0,1); a3c2g (-13/5,-13/5) repeats (0,0)
    const std::map<std::string, int> expect{{"a3c2f", 31}, {"a3c2g", 22}, {"a4c3", 13}, {"a4c2", 55}};
    for (const auto& [id, count] : expect) {
        auto params = load(id);
        auto r = run_census(id, params, {}, 4);
        CHECK_MESSAGE(r.distinct == count, id);
        for (const auto& rec : r.records) {
            REQUIRE(rec.ok);
            for (const auto& d : census_shapes())
                if (d.family == id && d.params == params_str(rec.params) && !d.next.empty()) {
                    if (id == "a3c2f" && d.params == "(0,-14/3)") {
                        CHECK(canonical_key(d.next) != rec.key);
                        continue;
                    }
                    CHECK_MESSAGE(canonical_key(d.next) == rec.key, std::string(id + " " + d.params));
                }
        }
    }
}

TEST_CASE("census details") {
    auto dup = run_census("a3c2f", {{Q(0), Q(1)}, {Q(0), Q(-14, 3)}});
    CHECK(dup.distinct == 1);
    CHECK(dup.records[1].node_count == 2);
    CHECK(run_census("a3c3", {{Q(1)}, {Q(1)}}).distinct == 1);

    // the table heading's tuple (-13/5,-13/15) in place of (-13/5,-13/5)
    auto params = load("a3c2g");
    for (auto& p : params)
        if (p == std::vector<Q>{Q(-13, 5), Q(-13, 5)}) p[1] = Q(-13, 15);
    CHECK(run_census("a3c2g", params).distinct == 23);

    // the degree default cap misses the 6-cycle of (-3,-3/2,1)
    GraphConfig four;
    four.cap = 4;
    CHECK(run_census("a4c2", load("a4c2"), four, 2).distinct == 54);

    auto deg = run_census("a3c2f", {{Q(2), Q(1, 2)}, {Q(0), Q(1)}}, {}, 2);
    CHECK_FALSE(deg.records[0].ok);
    CHECK(deg.records[1].ok);
    CHECK(deg.distinct == 1);
    CHECK(census_tsv(deg).find("ERROR") != std::string::npos);
    CHECK(census_json(deg).find("\"distinct\": 1") != std::string::npos);
}
