#pragma once

// Brute-force multipliers over F_p, written against plain integer arithmetic.
// Points of P^1(F_p) are 0..p-1 and p for infinity; each point uses its
// standard chart (z for finite points, 1/z at infinity).

#include "dynamo/dynsys.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

struct ModP {
    long p;
    std::vector<long> A; // A[i] coefficient of x^(d-i) y^i in F
    std::vector<long> B; // same for G

    long md(long x) const { return ((x % p) + p) % p; }
    long pw(long b, long e) const {
        long r = 1;
        b = md(b);
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    }
    long inv(long x) const { return pw(x, p - 2); }
    // value and derivative of sum c_i t^(d-i) (finite) or sum c_i u^i (at infinity)
    std::pair<long, long> ev(const std::vector<long>& c, long t, bool at_inf) const {
        long d = static_cast<long>(c.size()) - 1, v = 0, dv = 0;
        for (long i = 0; i <= d; ++i) {
            long e = at_inf ? i : d - i;
            v = md(v + c[i] * pw(t, e));
            if (e > 0) dv = md(dv + c[i] * e % p * pw(t, e - 1));
        }
        return {v, dv};
    }
    long image(long x) const {
        bool inf = x == p;
        long a = ev(A, inf ? 0 : x, inf).first, b = ev(B, inf ? 0 : x, inf).first;
        return b == 0 ? p : a * inv(b) % p;
    }
    long deriv(long x) const {
        bool inf = x == p;
        auto [a, da] = ev(A, inf ? 0 : x, inf);
        auto [b, db] = ev(B, inf ? 0 : x, inf);
        if (b != 0) return md(da * b - a * db) * inv(b * b % p) % p; // image in chart z
        return md(db * a - b * da) * inv(a * a % p) % p;             // image in chart 1/z
    }
};

inline std::optional<long> qmod(const dynamo::Q& x, long p) {
    mpz_class n = x.get_num() % p, d = x.get_den() % p;
    long nn = (n.get_si() + p) % p, dd = (d.get_si() + p) % p;
    if (dd == 0) return std::nullopt;
    long r = 1, b = dd;
    for (long e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return nn * r % p;
}

inline std::optional<ModP> reduce(const dynamo::QDyn& f, long p) {
    ModP m{p, {}, {}};
    for (const auto& c : f.F().coeffs()) {
        auto v = qmod(c, p);
        if (!v) return std::nullopt;
        m.A.push_back(*v);
    }
    for (const auto& c : f.G().coeffs()) {
        auto v = qmod(c, p);
        if (!v) return std::nullopt;
        m.B.push_back(*v);
    }
    return m;
}

// Multipliers of f^n at the F_p-points fixed by f^n.
inline std::vector<long> multipliers(const ModP& m, int n) {
    std::vector<long> out;
    for (long x = 0; x <= m.p; ++x) {
        long y = x, lam = 1;
        for (int i = 0; i < n; ++i) {
            lam = lam * m.deriv(y) % m.p;
            y = m.image(y);
        }
        if (y == x) out.push_back(lam);
    }
    return out;
}

// Elementary symmetric functions e_1..e_k mod p.
inline std::vector<long> elementary(const std::vector<long>& xs, long p) {
    std::vector<long> e{1};
    for (long x : xs) {
        e.push_back(0);
        for (size_t k = e.size() - 1; k > 0; --k) e[k] = (e[k] + e[k - 1] * x) % p;
    }
    return std::vector<long>(e.begin() + 1, e.end());
}

// Coefficients (low first) of M(t) = prod (t - lambda) from sigma values, or
// nothing if some sigma is not p-integral.
inline std::optional<std::vector<long>> multiplier_poly(const std::vector<dynamo::Q>& sigma, long p) {
    std::vector<long> hi{1};
    for (size_t k = 0; k < sigma.size(); ++k) {
        auto v = qmod(sigma[k], p);
        if (!v) return std::nullopt;
        hi.push_back(((k % 2 == 0 ? -*v : *v) % p + p) % p);
    }
    return std::vector<long>(hi.rbegin(), hi.rend());
}

// Divides poly (low first) by (t - lam) in place; false if lam is not a root.
inline bool divide_root(std::vector<long>& poly, long lam, long p) {
    long carry = 0;
    std::vector<long> q(poly.size() - 1);
    for (size_t i = poly.size(); i-- > 0;) {
        long c = ((poly[i] + carry) % p + p) % p;
        if (i == 0) {
            if (c != 0) return false;
        } else {
            q[i - 1] = c;
            carry = c * lam % p;
        }
    }
    poly = q;
    return true;
}

} // namespace oracle
