#pragma once

#include "dynamo/errors.hpp"
#include "dynamo/rational.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace dynamo {

template <class K>
class UniPoly;
using ZPoly = UniPoly<Z>;
using QPoly = UniPoly<Q>;

// Kronecker-substitution product for large integer polynomials (zpoly.cpp).
ZPoly zpoly_mul_fast(const ZPoly& a, const ZPoly& b);

// Univariate polynomial, constant term first, no trailing zeros.
template <class K>
class UniPoly {
public:
    std::vector<K> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<K> v) : c(std::move(v)) { trim(); }
    UniPoly(std::initializer_list<K> v) : c(v) { trim(); }

    static UniPoly constant(const K& k) { return UniPoly(std::vector<K>{k}); }
    static UniPoly monomial(const K& k, int n) {
        std::vector<K> v(n + 1, K(0));
        v[n] = k;
        return UniPoly(std::move(v));
    }
    static UniPoly var() { return monomial(K(1), 1); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const K& lc() const { return c.back(); }
    K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : K(0); }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.zero() || b.zero()) return UniPoly();
        if constexpr (std::is_same_v<K, Z>) {
            if (a.c.size() > 24 && b.c.size() > 24) return zpoly_mul_fast(a, b);
        }
        std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly scaled(const K& k) const {
        if (is_zero(k)) return UniPoly();
        UniPoly r = *this;
        for (auto& x : r.c) x *= k;
        r.trim();
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
};

template <class K>
inline bool is_zero(const UniPoly<K>& p) {
    return p.zero();
}

template <class K>
UniPoly<K> pow(const UniPoly<K>& p, int e) {
    UniPoly<K> r = UniPoly<K>::constant(K(1)), b = p;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

template <class K, class V>
V eval(const UniPoly<K>& p, const V& x) {
    V r(0);
    for (int i = p.degree(); i >= 0; --i) r = r * x + V(p.c[i]);
    return r;
}

template <class K>
UniPoly<K> derivative(const UniPoly<K>& p) {
    std::vector<K> r;
    for (int i = 1; i <= p.degree(); ++i) r.push_back(p.c[i] * K(i));
    return UniPoly<K>(std::move(r));
}

// p(q(z))
template <class K>
UniPoly<K> compose(const UniPoly<K>& p, const UniPoly<K>& q) {
    UniPoly<K> r;
    for (int i = p.degree(); i >= 0; --i) r = r * q + UniPoly<K>::constant(p.c[i]);
    return r;
}

template <class K, class F>
auto map_coeffs(const UniPoly<K>& p, F f) {
    using R = std::decay_t<decltype(f(p.c[0]))>;
    std::vector<R> v;
    v.reserve(p.c.size());
    for (const auto& x : p.c) v.push_back(f(x));
    return UniPoly<R>(std::move(v));
}

// Division with remainder over a field.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly<K>(), a};
    std::vector<K> r = a.c;
    std::vector<K> q(a.degree() - b.degree() + 1, K(0));
    K inv = K(1) / b.lc();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(r[i])) continue;
        K t = r[i] * inv;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.c[j];
    }
    r.resize(db);
    return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

// Quotient p/q, which must be exact. Over Z the coefficient divisions must be exact too.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    if (a.zero()) return UniPoly<K>();
    if (a.degree() < b.degree()) throw InexactDivision("divisor degree exceeds dividend degree");
    std::vector<K> r = a.c;
    std::vector<K> q(a.degree() - b.degree() + 1, K(0));
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(r[i])) continue;
        K t;
        if constexpr (std::is_same_v<K, Z>) {
            if (!mpz_divisible_p(r[i].get_mpz_t(), b.lc().get_mpz_t()))
                throw InexactDivision("coefficient not divisible");
            t = r[i];
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), b.lc().get_mpz_t());
        } else {
            t = r[i] / b.lc();
        }
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.c[j];
    }
    for (int i = 0; i < db; ++i)
        if (!is_zero(r[i])) throw InexactDivision("nonzero remainder");
    return UniPoly<K>(std::move(q));
}

// lc(b)^(deg a - deg b + 1) * a mod b, over an integral domain.
template <class K>
UniPoly<K> pseudo_rem(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    int e = a.degree() - b.degree() + 1;
    UniPoly<K> r = a;
    const K& lb = b.lc();
    while (!r.zero() && r.degree() >= b.degree()) {
        UniPoly<K> t = UniPoly<K>::monomial(r.lc(), r.degree() - b.degree());
        r = r.scaled(lb) - t * b;
        --e;
    }
    K f(1);
    for (int i = 0; i < e; ++i) f *= lb;
    return r.scaled(f);
}

namespace detail {
template <class K>
K exact_quo(const K& a, const K& b) {
    if constexpr (std::is_same_v<K, Z>) {
        K r;
        mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    } else {
        return a / b;
    }
}
template <class K>
K kpow(K b, int e) {
    K r(1);
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}
} // namespace detail

// Resultant by the subresultant PRS over an integral domain, Sylvester sign convention.
template <class K>
K resultant_prs(UniPoly<K> a, UniPoly<K> b) {
    using detail::exact_quo;
    using detail::kpow;
    if (a.zero() || b.zero()) return K(0);
    int sgn_ = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sgn_ = -1;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        K r = kpow(b.lc(), a.degree());
        return sgn_ < 0 ? K(-r) : r;
    }
    K g(1), h(1);
    while (true) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sgn_ = -sgn_;
        UniPoly<K> r = pseudo_rem(a, b);
        if (r.zero()) return K(0);
        a = std::move(b);
        K div = g * kpow(h, delta);
        b = map_coeffs(r, [&](const K& x) { return exact_quo(x, div); });
        g = a.lc();
        // h <- h^(1-delta) g^delta
        if (delta == 0) {
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_quo(kpow(g, delta), kpow(h, delta - 1));
        }
        if (b.degree() == 0) {
            int da = a.degree();
            K lb = kpow(b.lc(), da);
            if (da == 0) h = K(1);
            K res = (da >= 1) ? exact_quo(lb, kpow(h, da - 1)) : lb;
            return sgn_ < 0 ? K(-res) : res;
        }
    }
}

// ---- integer models ------------------------------------------------------

Z content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p); // positive leading coefficient
// p = scale * model with model primitive in Z[z] and positive leading coefficient.
std::pair<ZPoly, Q> integer_model(const QPoly& p);
QPoly to_qpoly(const ZPoly& p);

// ---- operations of the core-algebra API ----------------------------------

enum class ArithOp { Add, Sub, Mul };

template <class K>
UniPoly<K> poly_arith(const UniPoly<K>& p, const UniPoly<K>& q, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
    }
    return {};
}

template <class K>
UniPoly<K> poly_exact_div(const UniPoly<K>& p, const UniPoly<K>& q) {
    return exact_div(p, q);
}

// Monic gcd by Euclid over a field.
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.zero()) return a;
    return a.scaled(K(1) / a.lc());
}

// Over Q: subresultant PRS on primitive integer models, result made monic.
template <>
QPoly poly_gcd<Q>(QPoly a, QPoly b);

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b); // primitive, positive lc

template <class K>
K resultant(const UniPoly<K>& p, const UniPoly<K>& q) {
    return resultant_prs(p, q);
}

template <>
Q resultant<Q>(const QPoly& p, const QPoly& q);

// Printing with a chosen variable name.
template <class K>
std::string poly_str(const UniPoly<K>& p, const std::string& var = "z") {
    if (p.zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (is_zero(p.c[i])) continue;
        std::string cs = to_str(p.c[i]);
        bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos;
        bool neg = !compound && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (compound) cs = "(" + cs + ")";
        if (!s.empty()) s += neg ? "-" : "+";
        else if (neg) s += "-";
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace dynamo
