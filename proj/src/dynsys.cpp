#include "dynamo/dynsys.hpp"

#include "dynamo/arith.hpp"

namespace dynamo {

namespace {

ZPoly to_z(const QPoly& p) {
    return map_coeffs(p, [](const Q& x) {
        if (x.get_den() != 1) throw InvariantViolation("expected integer coefficients");
        return Z(x.get_num());
    });
}

int first_nonzero_sign(const UniPoly<Q>& F, const UniPoly<Q>& G) {
    for (const auto& x : F.c)
        if (sgn(x) != 0) return sgn(x);
    for (const auto& x : G.c)
        if (sgn(x) != 0) return sgn(x);
    return 1;
}

} // namespace

void normalize_pair(Homog<Q>& F, Homog<Q>& G) {
    Z den = 1, g = 0;
    for (const auto* h : {&F, &G})
        for (const auto& x : h->p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (const auto* h : {&F, &G})
        for (const auto& x : h->p.c) {
            Z v = x.get_num() * (den / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    if (g == 0) return;
    Q scale = make_q(den, g);
    if (first_nonzero_sign(F.p, G.p) < 0) scale = -scale;
    if (scale == 1) return;
    F.p = F.p.scaled(scale);
    G.p = G.p.scaled(scale);
}

void normalize_pair(Homog<NF>& F, Homog<NF>& G) {
    const NF* lead = nullptr;
    for (const auto* h : {&F, &G}) {
        for (const auto& x : h->p.c)
            if (!is_zero(x)) {
                lead = &x;
                break;
            }
        if (lead) break;
    }
    if (!lead) return;
    NF inv = lead->inverse();
    F.p = F.p.scaled(inv);
    G.p = G.p.scaled(inv);
    bool rational = true;
    for (const auto* h : {&F, &G})
        for (const auto& x : h->p.c) rational = rational && x.is_rational();
    if (!rational) return;
    Homog<Q> fq(F.deg, map_coeffs(F.p, [](const NF& x) { return x.c0(); }));
    Homog<Q> gq(G.deg, map_coeffs(G.p, [](const NF& x) { return x.c0(); }));
    normalize_pair(fq, gq);
    F.p = map_coeffs(fq.p, [](const Q& x) { return NF(x); });
    G.p = map_coeffs(gq.p, [](const Q& x) { return NF(x); });
}

void normalize_pair(Homog<RF>& F, Homog<RF>& G) {
    // clear denominators, then divide by the polynomial gcd of all numerators
    QPoly den = QPoly::constant(Q(1));
    for (const auto* h : {&F, &G})
        for (const auto& x : h->p.c) {
            QPoly g = poly_gcd(den, x.den());
            den = exact_div(den * x.den(), g);
        }
    QPoly g;
    std::vector<QPoly> nums;
    for (const auto* h : {&F, &G})
        for (const auto& x : h->p.c) {
            QPoly v = exact_div(x.num() * den, x.den());
            g = poly_gcd(g, v);
        }
    if (g.zero()) return;
    // integer content of the numerators after dividing by g
    std::vector<QPoly> all;
    for (const auto* h : {&F, &G})
        for (const auto& x : h->p.c) all.push_back(exact_div(exact_div(x.num() * den, x.den()), g));
    Z cden = 1, cnum = 0;
    for (const auto& p : all)
        for (const auto& x : p.c) mpz_lcm(cden.get_mpz_t(), cden.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& p : all)
        for (const auto& x : p.c) {
            Z v = x.get_num() * (cden / x.get_den());
            mpz_gcd(cnum.get_mpz_t(), cnum.get_mpz_t(), v.get_mpz_t());
        }
    Q c = make_q(cden, cnum);
    int sign = 1;
    for (const auto& p : all)
        if (!p.zero()) {
            sign = sgn(p.lc());
            break;
        }
    if (sign < 0) c = -c;
    size_t k = 0;
    for (auto* h : {&F, &G}) {
        std::vector<RF> v;
        for (size_t i = 0; i < h->p.c.size(); ++i) v.push_back(RF(all[k++].scaled(c)));
        h->p = UniPoly<RF>(std::move(v));
    }
}

template <>
Q homogeneous_resultant<Q>(const Homog<Q>& F, const Homog<Q>& G) {
    // integer forms after normalization; Bareiss keeps it fraction free
    bool integral = true;
    for (const auto* h : {&F, &G})
        for (const auto& x : h->p.c) integral = integral && x.get_den() == 1;
    if (!integral) return det(sylvester(F.coeffs(), G.coeffs()));
    auto zc = [](const std::vector<Q>& v) {
        std::vector<Z> r;
        for (const auto& x : v) r.push_back(x.get_num());
        return r;
    };
    return Q(det(sylvester(zc(F.coeffs()), zc(G.coeffs()))));
}

template <>
DynSystem<Q> compose_maps<Q>(const DynSystem<Q>& f, const DynSystem<Q>& g) {
    Homog<Z> F(f.degree(), to_z(f.F().p)), G(f.degree(), to_z(f.G().p));
    Homog<Z> Fg(g.degree(), to_z(g.F().p)), Gg(g.degree(), to_z(g.G().p));
    Homog<Z> a = substitute(F, Fg, Gg);
    Homog<Z> b = substitute(G, Fg, Gg);
    if (a.zero() && b.zero()) throw InvariantViolation("composition vanished");
    auto back = [](const Homog<Z>& h) { return Homog<Q>(h.deg, map_coeffs(h.p, [](const Z& x) { return Q(x); })); };
    return DynSystem<Q>::from_forms_trusted(back(a), back(b));
}

std::vector<Z> bad_primes(const QDyn& f) {
    const Q& r = f.resultant();
    if (is_zero(r)) throw DegenerateMap("zero resultant");
    std::vector<Z> out = prime_divisors(r.get_num());
    if (r.get_den() != 1) {
        auto extra = prime_divisors(r.get_den());
        out.insert(out.end(), extra.begin(), extra.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

Mobius<Q> normalized(const Mobius<Q>& m) {
    if (!m.invertible()) throw NonInvertible("singular matrix");
    Z den = 1, g = 0;
    const Q* e[4] = {&m.p, &m.q, &m.r, &m.s};
    for (auto* x : e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x->get_den_mpz_t());
    for (auto* x : e) {
        Z v = x->get_num() * (den / x->get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Q sc = make_q(den, g);
    for (auto* x : e)
        if (sgn(*x) != 0) {
            if (sgn(*x) < 0) sc = -sc;
            break;
        }
    return Mobius<Q>(m.p * sc, m.q * sc, m.r * sc, m.s * sc);
}

Mobius<NF> normalized(const Mobius<NF>& m) {
    if (!m.invertible()) throw NonInvertible("singular matrix");
    Mobius<NF> c = m.canonical();
    if (c.p.is_rational() && c.q.is_rational() && c.r.is_rational() && c.s.is_rational()) {
        auto q = normalized(Mobius<Q>(c.p.c0(), c.q.c0(), c.r.c0(), c.s.c0()));
        return cast<NF>(q);
    }
    return c;
}

QDyn specialize(const DynSystem<RF>& f, const Q& a) {
    auto conv = [&](const Homog<RF>& h) {
        return Homog<Q>(h.deg, map_coeffs(h.p, [&](const RF& x) { return x.at(a); }));
    };
    return QDyn::from_forms(conv(f.F()), conv(f.G()));
}

} // namespace dynamo
