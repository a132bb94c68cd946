#include "dynamo/poly.hpp"

#include <cstring>

namespace dynamo {

Z content(const ZPoly& p) {
    Z g = 0;
    for (const auto& x : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.zero()) return p;
    Z g = content(p);
    if (sgn(p.lc()) < 0) g = -g;
    if (g == 1) return p;
    return map_coeffs(p, [&](const Z& x) {
        Z r;
        mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return r;
    });
}

std::pair<ZPoly, Q> integer_model(const QPoly& p) {
    if (p.zero()) return {ZPoly(), Q(0)};
    Z den = 1;
    for (const auto& x : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    ZPoly z = map_coeffs(p, [&](const Q& x) {
        Z r;
        mpz_divexact(r.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        return Z(r * x.get_num());
    });
    Z g = content(z);
    if (sgn(z.lc()) < 0) g = -g;
    ZPoly prim = map_coeffs(z, [&](const Z& x) {
        Z r;
        mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return r;
    });
    return {prim, make_q(g, den)};
}

QPoly to_qpoly(const ZPoly& p) {
    return map_coeffs(p, [](const Z& x) { return Q(x); });
}

namespace {

size_t max_bits(const ZPoly& p) {
    size_t m = 0;
    for (const auto& x : p.c) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
}

// Pack the coefficients with a given sign into a base-2^(64*L) integer.
void pack(const ZPoly& p, size_t L, int sign, Z& out) {
    size_t n = p.c.size();
    mpz_ptr o = out.get_mpz_t();
    mp_limb_t* w = mpz_limbs_write(o, static_cast<mp_size_t>(n * L));
    std::memset(w, 0, n * L * sizeof(mp_limb_t));
    for (size_t i = 0; i < n; ++i) {
        mpz_srcptr x = p.c[i].get_mpz_t();
        if (mpz_sgn(x) != sign) continue;
        size_t sz = mpz_size(x);
        const mp_limb_t* r = mpz_limbs_read(x);
        std::memcpy(w + i * L, r, sz * sizeof(mp_limb_t));
    }
    mpz_limbs_finish(o, static_cast<mp_size_t>(n * L));
}

Z packed(const ZPoly& p, size_t L) {
    Z pos, neg;
    pack(p, L, 1, pos);
    pack(p, L, -1, neg);
    return pos - neg;
}

} // namespace

ZPoly zpoly_mul_fast(const ZPoly& a, const ZPoly& b) {
    static_assert(GMP_NAIL_BITS == 0, "nail bits unsupported");
    size_t n = a.c.size() + b.c.size() - 1;
    size_t bits = max_bits(a) + max_bits(b) + 2;
    size_t m = std::min(a.c.size(), b.c.size());
    while (m) {
        ++bits;
        m >>= 1;
    }
    size_t L = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    Z v = packed(a, L) * packed(b, L);
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    size_t vs = mpz_size(v.get_mpz_t());
    const mp_limb_t* limbs = mpz_limbs_read(v.get_mpz_t());
    std::vector<Z> out(n);
    Z half = Z(1) << (L * GMP_NUMB_BITS - 1);
    Z full = Z(1) << (L * GMP_NUMB_BITS);
    int carry = 0;
    for (size_t i = 0; i < n; ++i) {
        Z d;
        size_t lo = i * L;
        if (lo < vs) {
            size_t cnt = std::min(L, vs - lo);
            mpz_ptr dp = d.get_mpz_t();
            mp_limb_t* w = mpz_limbs_write(dp, static_cast<mp_size_t>(cnt));
            std::memcpy(w, limbs + lo, cnt * sizeof(mp_limb_t));
            mpz_limbs_finish(dp, static_cast<mp_size_t>(cnt));
        }
        if (carry) d += 1;
        if (d >= half) {
            d -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        out[i] = neg ? Z(-d) : d;
    }
    return ZPoly(std::move(out));
}

ZPoly zpoly_gcd(const ZPoly& a0, const ZPoly& b0) {
    if (a0.zero()) return primitive_part(b0);
    if (b0.zero()) return primitive_part(a0);
    Z ca = content(a0), cb = content(b0);
    Z cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a.degree() < b.degree()) std::swap(a, b);
    // subresultant PRS; only the last nonzero remainder is kept
    Z g = 1, h = 1;
    while (!b.zero() && b.degree() > 0) {
        int delta = a.degree() - b.degree();
        ZPoly r = pseudo_rem(a, b);
        a = std::move(b);
        if (r.zero()) {
            b = ZPoly();
            break;
        }
        Z div = g * detail::kpow(h, delta);
        b = map_coeffs(r, [&](const Z& x) { return detail::exact_quo(x, div); });
        g = a.lc();
        if (delta == 1) h = g;
        else if (delta > 1) h = detail::exact_quo(detail::kpow(g, delta), detail::kpow(h, delta - 1));
    }
    ZPoly res = b.zero() ? primitive_part(a) : ZPoly::constant(Z(1));
    return res.scaled(cg);
}

template <>
QPoly poly_gcd<Q>(QPoly a, QPoly b) {
    if (a.zero() && b.zero()) return QPoly();
    auto g = zpoly_gcd(integer_model(a).first, integer_model(b).first);
    QPoly r = to_qpoly(g);
    return r.scaled(Q(1) / r.lc());
}

template <>
Q resultant<Q>(const QPoly& p, const QPoly& q) {
    if (p.zero() || q.zero()) return Q(0);
    auto [zp, sp] = integer_model(p);
    auto [zq, sq] = integer_model(q);
    Z r = resultant_prs(zp, zq);
    // Res(s*p, t*q) = s^deg q * t^deg p * Res(p,q)
    Q f = Q(r);
    for (int i = 0; i < q.degree(); ++i) f *= sp;
    for (int i = 0; i < p.degree(); ++i) f *= sq;
    return f;
}

} // namespace dynamo
