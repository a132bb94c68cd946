#pragma once

#include "dynamo/poly.hpp"

namespace dynamo {

// Homogeneous form of degree deg in (x, y), stored through the chart x = 1:
// p.c[i] is the coefficient of x^(deg-i) y^i.
template <class K>
struct Homog {
    int deg = 0;
    UniPoly<K> p;

    Homog() = default;
    Homog(int d, UniPoly<K> q) : deg(d), p(std::move(q)) {
        if (p.degree() > deg) throw InvariantViolation("homogeneous form exceeds its degree");
    }
    static Homog from_coeffs(const std::vector<K>& c) {
        return Homog(static_cast<int>(c.size()) - 1, UniPoly<K>(c));
    }

    bool zero() const { return p.zero(); }
    K coeff(int i) const { return p.coeff(i); }
    std::vector<K> coeffs() const {
        std::vector<K> c(deg + 1, K(0));
        for (int i = 0; i <= p.degree(); ++i) c[i] = p.c[i];
        return c;
    }

    // F(z, 1) as a polynomial in z.
    UniPoly<K> dehomogenize() const {
        std::vector<K> c(deg + 1, K(0));
        for (int i = 0; i <= p.degree(); ++i) c[deg - i] = p.c[i];
        return UniPoly<K>(std::move(c));
    }
    static Homog homogenize(const UniPoly<K>& f, int d) {
        if (f.degree() > d) throw InvariantViolation("homogenization degree too small");
        std::vector<K> c(d + 1, K(0));
        for (int i = 0; i <= f.degree(); ++i) c[d - i] = f.c[i];
        return Homog(d, UniPoly<K>(std::move(c)));
    }

    template <class V>
    V eval(const V& x, const V& y) const {
        // sum c_i x^(deg-i) y^i
        V acc(0);
        std::vector<V> xs(deg + 1, V(1));
        for (int i = 1; i <= deg; ++i) xs[i] = xs[i - 1] * x;
        V yp(1);
        for (int i = 0; i <= deg; ++i) {
            if (i <= p.degree() && !is_zero(p.c[i])) acc += V(p.c[i]) * xs[deg - i] * yp;
            yp = yp * y;
        }
        return acc;
    }

    Homog dx() const {
        std::vector<K> c;
        for (int i = 0; i < deg && i <= p.degree(); ++i) c.push_back(p.c[i] * K(deg - i));
        return Homog(deg > 0 ? deg - 1 : 0, UniPoly<K>(std::move(c)));
    }
    Homog dy() const {
        std::vector<K> c;
        for (int i = 1; i <= p.degree(); ++i) c.push_back(p.c[i] * K(i));
        return Homog(deg > 0 ? deg - 1 : 0, UniPoly<K>(std::move(c)));
    }

    friend Homog operator*(const Homog& a, const Homog& b) { return Homog(a.deg + b.deg, a.p * b.p); }
    friend Homog operator+(const Homog& a, const Homog& b) {
        if (a.deg != b.deg && !a.zero() && !b.zero()) throw InvariantViolation("adding forms of different degree");
        return Homog(std::max(a.deg, b.deg), a.p + b.p);
    }
    friend Homog operator-(const Homog& a, const Homog& b) {
        if (a.deg != b.deg && !a.zero() && !b.zero()) throw InvariantViolation("subtracting forms of different degree");
        return Homog(std::max(a.deg, b.deg), a.p - b.p);
    }
    Homog scaled(const K& k) const { return Homog(deg, p.scaled(k)); }
    friend bool operator==(const Homog& a, const Homog& b) { return a.deg == b.deg && a.p == b.p; }
};

// F(P, Q) for forms P, Q of a common degree.
template <class K>
Homog<K> substitute(const Homog<K>& F, const Homog<K>& P, const Homog<K>& Qf) {
    int e = std::max(P.deg, Qf.deg);
    int D = F.deg;
    std::vector<UniPoly<K>> pp(D + 1), qp(D + 1);
    pp[0] = qp[0] = UniPoly<K>::constant(K(1));
    for (int i = 1; i <= D; ++i) {
        pp[i] = pp[i - 1] * P.p;
        qp[i] = qp[i - 1] * Qf.p;
    }
    UniPoly<K> acc;
    for (int i = 0; i <= F.p.degree(); ++i) {
        if (is_zero(F.p.c[i])) continue;
        acc += (pp[D - i] * qp[i]).scaled(F.p.c[i]);
    }
    return Homog<K>(D * e, std::move(acc));
}

} // namespace dynamo
