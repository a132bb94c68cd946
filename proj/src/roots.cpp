// Rational roots of integer polynomials.
//
// Every rational root b/c of a primitive P satisfies c | lc(P); with L = lc(P)
// the integer L*b/c is bounded by |L| + max|a_i| (Cauchy). Roots are found
// modulo a prime p for which P stays squarefree, lifted p-adically by Newton
// iteration past twice that bound, and reconstructed as N/L. Each candidate is
// confirmed by exact division by the linear factor c*z - b.

#include "dynamo/roots.hpp"

#include "dynamo/arith.hpp"

#include <algorithm>

namespace dynamo {

namespace {

using ModPoly = std::vector<uint64_t>; // constant first

ModPoly reduce(const ZPoly& p, uint64_t m) {
    ModPoly r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = mod_p(p.c[i], m);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

uint64_t eval_mod(const ModPoly& p, uint64_t x, uint64_t m) {
    uint64_t acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = (acc * x + p[i]) % m;
    return acc;
}

ModPoly deriv_mod(const ModPoly& p, uint64_t m) {
    ModPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * (i % m) % m);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// a mod b in place, b monic-free (uses inverse of lc)
void rem_mod(ModPoly& a, const ModPoly& b, uint64_t m) {
    uint64_t inv = invmod(b.back(), m);
    size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        uint64_t t = a.back() * inv % m;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + m - t * b[j] % m) % m;
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
}

bool squarefree_mod(const ModPoly& p, uint64_t m) {
    ModPoly a = p, b = deriv_mod(p, m);
    if (b.empty()) return false;
    while (!b.empty()) {
        rem_mod(a, b, m);
        std::swap(a, b);
    }
    return a.size() == 1;
}

Z eval_z_mod(const ZPoly& p, const Z& x, const Z& m) {
    Z acc = 0;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x + p.c[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

Z abs_bound(const ZPoly& p) {
    Z mx = 0;
    for (const auto& x : p.c)
        if (abs(x) > mx) mx = abs(x);
    return mx + abs(p.lc());
}

// Simple roots of a squarefree (mod p) primitive polynomial with P(0) != 0.
std::vector<Q> lift_roots(const ZPoly& P, uint64_t p) {
    ModPoly pm = reduce(P, p);
    std::vector<uint64_t> mods;
    for (uint64_t r = 0; r < p; ++r)
        if (eval_mod(pm, r, p) == 0) mods.push_back(r);
    std::vector<Q> out;
    if (mods.empty()) return out;
    ZPoly dP = derivative(P);
    Z L = P.lc();
    Z target = 2 * abs_bound(P) + 1;
    Z pz(static_cast<unsigned long>(p));
    for (uint64_t r0 : mods) {
        Z r(static_cast<unsigned long>(r0)), mod = pz;
        while (mod <= target) {
            mod = mod * mod;
            Z fv = eval_z_mod(P, r, mod);
            Z dv = eval_z_mod(dP, r, mod);
            Z inv;
            if (!mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t()))
                throw InvariantViolation("Hensel lift hit a non-simple root");
            r = r - fv * inv;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
        }
        Z N = L * r;
        mpz_mod(N.get_mpz_t(), N.get_mpz_t(), mod.get_mpz_t());
        if (2 * N > mod) N -= mod;
        out.push_back(make_q(N, L));
    }
    return out;
}

bool divides_linear(const ZPoly& P, const Q& x, ZPoly* quotient) {
    ZPoly lin{Z(-x.get_num()), Z(x.get_den())};
    // cheap modular screen
    static const uint64_t screen = 1000000007ULL;
    if (mpz_fdiv_ui(x.get_den_mpz_t(), screen) != 0) {
        ModPoly pm = reduce(P, screen);
        if (eval_mod(pm, mod_p(x, screen), screen) != 0) return false;
    }
    try {
        ZPoly q = exact_div(P, lin);
        if (quotient) *quotient = std::move(q);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

std::vector<Q> distinct_nonzero_roots(const ZPoly& P) {
    if (P.degree() <= 0) return {};
    if (P.degree() == 1) return {make_q(-P.c[0], P.c[1])};
    uint64_t start = std::max<uint64_t>(200, static_cast<uint64_t>(P.degree()) + 1);
    auto primes = primes_below(static_cast<uint32_t>(std::max<uint64_t>(start * 4, 5000)));
    int tries = 0;
    for (uint32_t p : primes) {
        if (p <= start) continue;
        if (mpz_fdiv_ui(P.lc().get_mpz_t(), p) == 0) continue;
        if (squarefree_mod(reduce(P, p), p)) return lift_roots(P, p);
        if (++tries >= 3) break;
    }
    // Not squarefree over Q: pass to the squarefree part.
    ZPoly g = zpoly_gcd(P, derivative(P));
    if (g.degree() <= 0) throw InvariantViolation("no squarefree reduction found");
    return distinct_nonzero_roots(primitive_part(exact_div(P, g)));
}

} // namespace

std::vector<RationalRoot> rational_roots_mult(const ZPoly& p0) {
    if (p0.zero()) throw std::domain_error("rational_roots of zero polynomial");
    std::vector<RationalRoot> out;
    ZPoly P = primitive_part(p0);
    int k = 0;
    while (k < static_cast<int>(P.c.size()) && is_zero(P.c[k])) ++k;
    if (k) {
        out.push_back({Q(0), k});
        P = ZPoly(std::vector<Z>(P.c.begin() + k, P.c.end()));
    }
    for (const Q& r : distinct_nonzero_roots(P)) {
        ZPoly cur = P, q;
        int m = 0;
        while (divides_linear(cur, r, &q)) {
            ++m;
            cur = std::move(q);
        }
        if (m) out.push_back({r, m});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    return out;
}

std::vector<RationalRoot> rational_roots_mult(const QPoly& p) {
    if (p.zero()) throw std::domain_error("rational_roots of zero polynomial");
    return rational_roots_mult(integer_model(p).first);
}

std::vector<Q> rational_roots(const ZPoly& p) {
    std::vector<Q> r;
    for (auto& x : rational_roots_mult(p)) r.push_back(x.value);
    return r;
}

std::vector<Q> rational_roots(const QPoly& p) { return rational_roots(integer_model(p).first); }

} // namespace dynamo
