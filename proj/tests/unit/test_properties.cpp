#include "doctest.h"
#include "dynamo/arith.hpp"
#include "dynamo/automorphism.hpp"
#include "dynamo/dynatomic.hpp"
#include "dynamo/expr.hpp"
#include "dynamo/families.hpp"
#include "dynamo/preperiodic.hpp"
#include "dynamo/roots.hpp"
#include "modp_oracle.hpp"

#include <fstream>
#include <random>

using namespace dynamo;

namespace {

std::mt19937 rng(20240611);

long rnd(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

QPoly random_poly(int maxdeg, long h) {
    int d = static_cast<int>(rnd(0, maxdeg));
    std::vector<Q> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(rnd(-h, h));
    if (is_zero(c.back())) c.back() = Q(1);
    return QPoly(c);
}

Mobius<Q> random_mobius(long h) {
    for (;;) {
        Mobius<Q> a(Q(rnd(-h, h)), Q(rnd(-h, h)), Q(rnd(-h, h)), Q(rnd(-h, h)));
        if (a.invertible()) return a;
    }
}

QPoint random_point(long h) {
    if (rnd(0, 9) == 0) return QPoint::infinity();
    return QPoint::affine(make_q(rnd(-h, h), rnd(1, h)));
}

const std::vector<std::string> kMaps{"1/z^3",           "(z^3-3)/(-3*z^2)",    "1/z^4",
                                     "(z^3+2)/(2*z^2)", "(2*z^2-1)/(z^3-2*z)", "(z^3+2*z)/(5*z^2+1)",
                                     "(z^4+3*z)/(3*z^3+1)", "(z^4+1)/(2*z^3)"};

} // namespace

TEST_CASE("polynomial round trips") {
    for (int i = 0; i < 100; ++i) {
        QPoly p = random_poly(5, 9), q = random_poly(4, 9);
        QPoly pq = p * q;
        CHECK(poly_exact_div(pq, q) == p);
        CHECK(q * poly_exact_div(pq, q) == pq);
    }
}

TEST_CASE("resultant vanishes exactly on a common factor") {
    int shared = 0;
    for (int i = 0; i < 100; ++i) {
        QPoly p = random_poly(5, 6), q = random_poly(5, 6);
        if (i % 2) {
            QPoly c = QPoly({Q(rnd(-3, 3)), Q(1)});
            p = p * c;
            q = q * c;
        }
        if (p.degree() < 1 || q.degree() < 1) continue;
        bool common = poly_gcd(p, q).degree() > 0;
        shared += common;
        CHECK(is_zero(resultant(p, q)) == common);
    }
    CHECK(shared >= 40);
}

TEST_CASE("rational roots against exhaustive candidates") {
    for (int i = 0; i < 60; ++i) {
        QPoly p = QPoly::constant(Q(rnd(1, 3)));
        for (int k = rnd(0, 3); k > 0; --k) p = p * QPoly({Q(-rnd(-4, 4)), Q(rnd(1, 3))});
        p = p * random_poly(2, 3);
        if (p.degree() < 1 || is_zero(p.c[0])) continue;
        auto [zp, scale] = integer_model(p);
        long lead = std::abs(zp.c.back().get_si()), trail = std::abs(zp.c[0].get_si());
        std::set<Q> brute;
        for (long b = -trail; b <= trail; ++b)
            for (long c = 1; c <= lead; ++c) {
                Q x(b, c);
                x.canonicalize();
                if (is_zero(eval(p, x))) brute.insert(x);
            }
        auto roots = rational_roots(p);
        CHECK(std::set<Q>(roots.begin(), roots.end()) == brute);
    }
}

TEST_CASE("moebius and factorization") {
    for (long n = 1; n <= 100; ++n) {
        long s = 0;
        for (long d : divisors(n)) s += moebius(d);
        CHECK(s == (n == 1));
    }
    for (int i = 0; i < 50; ++i) {
        Z n = Z(rnd(2, 1000000)) * Z(rnd(1, 100000));
        Z prod = 1;
        for (const auto& f : factor_int(n)) {
            CHECK(is_prime(f));
            prod *= f;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("conjugation, iteration and multipliers") {
    for (int i = 0; i < 50; ++i) {
        QDyn f = parse_map(kMaps[i % kMaps.size()]);
        Mobius<Q> a = random_mobius(3);
        CHECK(same_map(dyn_conjugate(dyn_conjugate(f, a), a.inverse()), f));
    }
    for (int i = 0; i < 20; ++i) {
        QDyn f = parse_map(kMaps[i % kMaps.size()]);
        QPoint P = random_point(9);
        QPoint cur = P;
        for (int n = 1; n <= 4; ++n) {
            cur = dyn_eval(f, cur);
            CHECK(dyn_eval(dyn_iterate_map(f, n), P) == cur);
        }
    }
    for (const auto& s : kMaps) {
        QDyn f = parse_map(s);
        auto fixed = rational_periodic_points(f, {1});
        for (const auto& P : fixed[1]) {
            Mobius<Q> a = random_mobius(3);
            QDyn g = dyn_conjugate(f, a);
            CHECK(dyn_multiplier(f, P, 1) == dyn_multiplier(g, a.inverse().apply(P), 1));
        }
    }
}

TEST_CASE("good primes reduce to morphisms") {
    for (const auto& s : kMaps) {
        QDyn f = parse_map(s);
        auto bad = bad_primes(f);
        for (uint32_t p : primes_below(200)) {
            if (std::find(bad.begin(), bad.end(), Z(p)) != bad.end()) continue;
            auto m = oracle::reduce(f, p);
            REQUIRE(m);
            CHECK(mod_p(f.resultant(), p) != 0);
        }
    }
}

TEST_CASE("dynatomic reconstruction and roots") {
    for (const char* s : {"z^2-29/16", "(z^2+1)/(2*z)", "1/z^3"}) {
        QDyn f = parse_map(s);
        std::vector<int> ns{1, 2, 3, 4};
        if (f.degree() == 2) ns.push_back(6);
        for (int n : ns) {
            Homog<Q> prod(0, QPoly::constant(Q(1)));
            for (int e = 1; e <= n; ++e)
                if (n % e == 0) prod = prod * dynatomic_star(f, e).poly;
            Homog<Q> phi = phi_n(f, n).poly;
            // equal up to the scalar fixed by sign normalization
            Q r = 0;
            for (int i = 0; i <= phi.deg && is_zero(r); ++i)
                if (!is_zero(phi.coeff(i))) r = prod.coeff(i) / phi.coeff(i);
            CHECK(prod.coeffs() == phi.scaled(r).coeffs());
            CHECK((r == 1 || r == -1));
            for (const Q& z : rational_roots(dynatomic_star(f, n).poly.dehomogenize())) {
                QPoint P = QPoint::affine(z), cur = P;
                for (int k = 0; k < n; ++k) cur = dyn_eval(f, cur);
                CHECK(cur == P);
            }
        }
    }
}

TEST_CASE("sigma mod p equals brute force when every point is rational") {
    // 1/z^3: fixed points z^4 = 1 split mod 5 and 13; period-2 points z^8 = 1, 0, inf split mod 17
    QDyn f = parse_map("1/z^3");
    for (auto [n, p] : std::vector<std::pair<int, long>>{{1, 5}, {1, 13}, {2, 17}}) {
        auto m = oracle::reduce(f, p);
        REQUIRE(m);
        auto lam = oracle::multipliers(*m, n);
        auto sigma = sigma_invariants(f, n, false).values;
        REQUIRE(lam.size() == sigma.size());
        auto e = oracle::elementary(lam, p);
        for (size_t k = 0; k < sigma.size(); ++k) CHECK(*oracle::qmod(sigma[k], p) == e[k]);
    }
    // otherwise the F_p-rational multipliers are roots of the reduced multiplier polynomial
    for (const char* s : {"(z^3+2)/(2*z^2)", "(z^4+3*z)/(3*z^3+1)", "(z^3+2*z)/(5*z^2+1)"}) {
        QDyn g = parse_map(s);
        for (long p : {5L, 7L, 11L, 13L}) {
            if (!is_good_prime(g, p)) continue;
            for (int n : {1, 2}) {
                auto m = oracle::reduce(g, p);
                auto poly = oracle::multiplier_poly(sigma_invariants(g, n, false).values, p);
                if (!m || !poly) continue;
                for (long l : oracle::multipliers(*m, n)) CHECK(oracle::divide_root(*poly, l, p));
            }
        }
    }
}

TEST_CASE("conjugation invariance of sigma") {
    for (int i = 0; i < 20; ++i) {
        QDyn f = parse_map(kMaps[i % kMaps.size()]);
        Mobius<Q> a = random_mobius(3);
        QDyn g = dyn_conjugate(f, a);
        REQUIRE(is_conjugate_by(f, g, a));
        for (int n : {1, 2}) CHECK(sigma_invariants(f, n, false).values == sigma_invariants(g, n, false).values);
    }
}

TEST_CASE("automorphism groups") {
    for (const char* s : {"1/z^3", "(z^3+2*z)/(5*z^2+1)", "(3*z^2+1)/(z^3+3*z)", "1/z^4"}) {
        QDyn f = parse_map(s);
        auto rep = rational_automorphisms(f, 1);
        const auto& G = rep.rational_group;
        REQUIRE(!G.empty());
        CHECK(G.front().is_identity_mod_scalars());
        auto has = [&](const Mobius<Q>& m) { return std::find(G.begin(), G.end(), normalized(m)) != G.end(); };
        for (const auto& a : G) {
            CHECK(has(a.inverse()));
            for (const auto& b : G) CHECK(has(a * b));
        }
        Mobius<Q> beta = random_mobius(3);
        QDyn fb = dyn_conjugate(f, beta);
        for (const auto& a : G) CHECK(is_automorphism(fb, beta.inverse() * a * beta));
    }
}

TEST_CASE("preperiodic graph structure") {
    for (const auto& s : kMaps) {
        QDyn f = parse_map(s);
        auto g = build_preperiodic_graph(f);
        size_t cyc = 0;
        for (const auto& c : g.cycles) cyc += c.size();
        size_t per = 0;
        for (size_t i = 0; i < g.nodes.size(); ++i) {
            REQUIRE(g.next[i] >= 0);
            REQUIRE(g.next[i] < static_cast<int>(g.nodes.size()));
            CHECK(dyn_eval(f, g.nodes[i]) == g.nodes[g.next[i]]);
            per += g.period[i] > 0;
            for (const auto& R : rational_preimages(f, g.nodes[i])) CHECK(dyn_eval(f, R) == g.nodes[i]);
        }
        CHECK(cyc == per);
        GraphConfig five;
        five.prime_count = 5;
        CHECK(canonical_key(build_preperiodic_graph(f, five)) == canonical_key(g));

        // reduction of each rational periodic point obeys the period rule
        for (uint64_t p : good_odd_primes(f, 4)) {
            auto fg = functional_graph_mod_p(f, p);
            auto m = oracle::reduce(f, static_cast<long>(p));
            REQUIRE(m);
            for (size_t i = 0; i < g.nodes.size(); ++i) {
                if (g.period[i] == 0) continue;
                long x = g.nodes[i].is_infinity() ? static_cast<long>(p) : *oracle::qmod(g.nodes[i].x, p);
                int mp = 0;
                long y = x;
                do {
                    y = m->image(y);
                    ++mp;
                } while (y != x && mp <= static_cast<int>(p) + 1);
                REQUIRE(y == x);
                CHECK(g.period[i] % mp == 0);
                long lam = 1;
                for (int k = 0; k < mp; ++k, y = m->image(y)) lam = lam * m->deriv(y) % static_cast<long>(p);
                int n = g.period[i];
                bool ok = n == mp;
                if (!ok && lam != 0) {
                    long r = static_cast<long>(mult_order(lam, p));
                    ok = n == mp * r;
                    for (long pe = static_cast<long>(p); !ok && mp * r * pe <= n; pe *= static_cast<long>(p))
                        ok = n == mp * r * pe;
                }
                CHECK(ok);
            }
            (void)fg;
        }
    }
}

TEST_CASE("canonical keys agree with isomorphism search") {
    std::vector<PreperGraph> pool;
    for (const char* id : {"a3c2f", "a3c2g", "a4c3"}) {
        std::ifstream in(std::string(DYNAMO_DATA_DIR) + "/" + id + ".tsv");
        for (const auto& p : read_params_tsv(in)) pool.push_back(build_preperiodic_graph(family_make(id, p)));
    }
    int same = 0;
    for (int i = 0; i < 200; ++i) {
        const auto& a = pool[rnd(0, pool.size() - 1)];
        const auto& b = i % 4 == 0 ? a : pool[rnd(0, pool.size() - 1)];
        bool iso = graph_isomorphic(a, b);
        same += iso;
        CHECK(iso == (canonical_key(a) == canonical_key(b)));
    }
    CHECK(same >= 50);
}

TEST_CASE("families: sigma separation and random classification") {
    std::set<std::vector<Q>> seen;
    std::set<Q> as;
    while (as.size() < 20) {
        Q a(rnd(-40, 40), rnd(1, 12));
        a.canonicalize();
        if (is_zero(a)) continue;
        if (!as.insert(a).second) continue;
        seen.insert(sigma_invariants(family_make("a3c3", {a}), 1, false).values);
    }
    CHECK(seen.size() == 20);

    for (int i = 0; i < 10; ++i) {
        QDyn f = family_make("a3d2g", {make_q(rnd(2, 50), rnd(1, 7))});
        CHECK(sigma_invariants(f, 1, false).values == std::vector<Q>{Q(-12), Q(54), Q(-108), Q(81)});
    }

    for (const auto& fam : family_catalog())
        for (const auto& l : fam.loci)
            for (int i = 0; i < 10; ++i) {
                Q t(rnd(-30, 30), rnd(1, 9));
                t.canonicalize();
                std::vector<Q> p;
                try {
                    p = locus_parameterize(fam.id, l.name, t);
                } catch (const ExcludedParameter&) {
                    continue;
                }
                CHECK_MESSAGE(classify_graph(fam.id, p) == l.tmpl, std::string(fam.id + "/" + l.name + " t=" + to_str(t)));
            }
}

namespace {

std::string random_expr(int depth) {
    if (depth == 0 || rnd(0, 3) == 0) {
        switch (rnd(0, 2)) {
        case 0: return "z";
        case 1: return std::to_string(rnd(0, 9));
        default: return std::to_string(rnd(1, 9)) + "/" + std::to_string(rnd(1, 9));
        }
    }
    std::string a = random_expr(depth - 1), b = random_expr(depth - 1);
    switch (rnd(0, 5)) {
    case 0: return a + "+" + b;
    case 1: return a + "-" + b;
    case 2: return a + "*" + b;
    case 3: return "(" + a + ")/(" + b + ")";
    case 4: return "-(" + a + ")";
    default: return "(" + a + ")^" + std::to_string(rnd(0, 3));
    }
}

} // namespace

TEST_CASE("grammar round trip") {
    int n = 0;
    while (n < 100) {
        std::string text = random_expr(4);
        Expr e = parse_expr(text);
        Expr back = parse_expr(expr_str(e));
        CHECK(expr_str(back) == expr_str(e));
        for (long z : {-2L, 3L, 7L}) {
            std::map<std::string, Q> b{{"z", Q(z)}};
            std::optional<Q> v1, v2;
            try {
                v1 = eval_q(e, b);
            } catch (const DegenerateParameter&) {
            }
            try {
                v2 = eval_q(back, b);
            } catch (const DegenerateParameter&) {
            }
            CHECK(v1 == v2);
        }
        ++n;
        // the printed normal form of a valid map parses to the same map
        try {
            QDyn f = parse_map(text);
            CHECK(same_map(parse_map(map_str(f)), f));
        } catch (const Error&) {
        }
    }
}
