#pragma once

#include "dynamo/homog.hpp"
#include "dynamo/linalg.hpp"
#include "dynamo/numfield.hpp"
#include "dynamo/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dynamo {

// ---------------------------------------------------------------- points

template <class K>
struct ProjPoint {
    K x{1}, y{0};

    ProjPoint() = default;
    ProjPoint(const K& x0, const K& y0) {
        if (is_zero(x0) && is_zero(y0)) throw std::domain_error("(0:0) is not a point");
        if (is_zero(y0)) {
            x = K(1);
            y = K(0);
        } else {
            x = x0 / y0;
            y = K(1);
        }
    }
    static ProjPoint affine(const K& z) { return ProjPoint(z, K(1)); }
    static ProjPoint infinity() { return ProjPoint(K(1), K(0)); }
    bool is_infinity() const { return is_zero(y); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
};

template <class K>
std::string to_str(const ProjPoint<K>& p) {
    return p.is_infinity() ? std::string("inf") : to_str(p.x);
}

using QPoint = ProjPoint<Q>;

// Total order on rational points: finite points ascending, then infinity.
inline bool point_less(const QPoint& a, const QPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    return !a.is_infinity() && a.x < b.x;
}

// ---------------------------------------------------------------- Mobius

template <class K>
struct Mobius {
    K p{1}, q{0}, r{0}, s{1};

    Mobius() = default;
    Mobius(const K& p0, const K& q0, const K& r0, const K& s0) : p(p0), q(q0), r(r0), s(s0) {}

    static Mobius identity() { return Mobius(); }
    K det() const { return p * s - q * r; }
    bool invertible() const { return !is_zero(det()); }
    // inverse up to scalar (adjugate)
    Mobius inverse() const { return Mobius(s, -q, -r, p); }
    friend Mobius operator*(const Mobius& a, const Mobius& b) {
        return Mobius(a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s, a.r * b.p + a.s * b.r,
                      a.r * b.q + a.s * b.s);
    }
    ProjPoint<K> apply(const ProjPoint<K>& P) const {
        return ProjPoint<K>(p * P.x + q * P.y, r * P.x + s * P.y);
    }
    // Scaled so that the first nonzero entry is 1: equality mod scalars is equality of this.
    Mobius canonical() const {
        const K* e[4] = {&p, &q, &r, &s};
        for (auto* x : e)
            if (!is_zero(*x)) {
                K inv = K(1) / *x;
                return Mobius(p * inv, q * inv, r * inv, s * inv);
            }
        throw NonInvertible("zero matrix");
    }
    bool is_identity_mod_scalars() const { return is_zero(q) && is_zero(r) && p == s; }
    friend bool operator==(const Mobius& a, const Mobius& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
    }
};

Mobius<Q> normalized(const Mobius<Q>& m); // integer content 1, first nonzero positive
Mobius<NF> normalized(const Mobius<NF>& m);

template <class K>
std::string to_str(const Mobius<K>& m) {
    return "[[" + to_str(m.p) + "," + to_str(m.q) + "],[" + to_str(m.r) + "," + to_str(m.s) + "]]";
}

template <class To, class From>
Mobius<To> cast(const Mobius<From>& m) {
    return Mobius<To>(To(m.p), To(m.q), To(m.r), To(m.s));
}

// ---------------------------------------------------------------- maps

// Scale the pair (F, G) into the ring's normal form (see dynsys.cpp).
void normalize_pair(Homog<Q>& F, Homog<Q>& G);
void normalize_pair(Homog<NF>& F, Homog<NF>& G);
void normalize_pair(Homog<RF>& F, Homog<RF>& G);

template <class K>
K homogeneous_resultant(const Homog<K>& F, const Homog<K>& G) {
    return det(sylvester(F.coeffs(), G.coeffs()));
}
template <>
Q homogeneous_resultant<Q>(const Homog<Q>& F, const Homog<Q>& G);

template <class K>
class DynSystem {
public:
    DynSystem() = default;

    // dyn_new: coefficient lists c_0..c_d of x^(d-i) y^i.
    static DynSystem make(const std::vector<K>& Fc, const std::vector<K>& Gc, int d) {
        if (static_cast<int>(Fc.size()) != d + 1 || static_cast<int>(Gc.size()) != d + 1)
            throw DegreeMismatch("coefficient lists must have length d+1 = " + std::to_string(d + 1));
        return from_forms(Homog<K>::from_coeffs(Fc), Homog<K>::from_coeffs(Gc));
    }

    static DynSystem from_forms(Homog<K> F, Homog<K> G) {
        if (F.deg != G.deg) throw DegreeMismatch("components of different degree");
        if (F.zero() && G.zero()) throw DegenerateMap("both components vanish");
        normalize_pair(F, G);
        DynSystem f;
        f.F_ = std::move(F);
        f.G_ = std::move(G);
        f.res_ = homogeneous_resultant(f.F_, f.G_);
        if (is_zero(f.res_)) throw DegenerateMap("Res(F,G) = 0");
        if (f.F_.deg < 1) throw DegreeMismatch("degree must be at least 1");
        return f;
    }

    // Unchecked construction for iterates whose resultant is known to be nonzero.
    static DynSystem from_forms_trusted(Homog<K> F, Homog<K> G) {
        normalize_pair(F, G);
        DynSystem f;
        f.F_ = std::move(F);
        f.G_ = std::move(G);
        return f;
    }

    const Homog<K>& F() const { return F_; }
    const Homog<K>& G() const { return G_; }
    int degree() const { return F_.deg; }
    // Homogeneous resultant; empty for trusted iterates.
    const K& resultant() const { return res_; }

    ProjPoint<K> operator()(const ProjPoint<K>& P) const {
        return ProjPoint<K>(F_.eval(P.x, P.y), G_.eval(P.x, P.y));
    }

    // z-chart numerator and denominator
    UniPoly<K> numerator() const { return F_.dehomogenize(); }
    UniPoly<K> denominator() const { return G_.dehomogenize(); }

    template <class K2>
    DynSystem<K2> cast() const {
        auto conv = [](const Homog<K>& h) {
            return Homog<K2>(h.deg, map_coeffs(h.p, [](const K& x) { return K2(x); }));
        };
        return DynSystem<K2>::from_forms(conv(F_), conv(G_));
    }

private:
    Homog<K> F_, G_;
    K res_{0};
};

using QDyn = DynSystem<Q>;

// Equality up to a nonzero scalar, by vanishing of F1*G2 - F2*G1.
template <class K>
bool same_map(const DynSystem<K>& a, const DynSystem<K>& b) {
    if (a.degree() != b.degree()) return false;
    return (a.F() * b.G() - b.F() * a.G()).zero();
}

template <class K>
ProjPoint<K> dyn_eval(const DynSystem<K>& f, const ProjPoint<K>& P) {
    return f(P);
}

// Homogeneous composition f o g.
template <class K>
DynSystem<K> compose_maps(const DynSystem<K>& f, const DynSystem<K>& g) {
    return DynSystem<K>::from_forms_trusted(substitute(f.F(), g.F(), g.G()), substitute(f.G(), g.F(), g.G()));
}
template <>
DynSystem<Q> compose_maps<Q>(const DynSystem<Q>& f, const DynSystem<Q>& g);

template <class K>
DynSystem<K> dyn_iterate_map(const DynSystem<K>& f, int n) {
    if (n < 1) throw std::domain_error("iterate count must be positive");
    DynSystem<K> r = f;
    for (int i = 1; i < n; ++i) r = compose_maps(f, r);
    return r;
}

// f^alpha = alpha^-1 o f o alpha
template <class K>
DynSystem<K> dyn_conjugate(const DynSystem<K>& f, const Mobius<K>& a) {
    if (!a.invertible()) throw NonInvertible("singular conjugating matrix");
    Homog<K> P(1, UniPoly<K>{a.p, a.q});
    Homog<K> Qh(1, UniPoly<K>{a.r, a.s});
    Homog<K> F1 = substitute(f.F(), P, Qh);
    Homog<K> G1 = substitute(f.G(), P, Qh);
    // adjugate [[s,-q],[-r,p]]
    Homog<K> F2 = F1.scaled(a.s) - G1.scaled(a.q);
    Homog<K> G2 = G1.scaled(a.p) - F1.scaled(a.r);
    F2.deg = G2.deg = f.degree();
    return DynSystem<K>::from_forms(F2, G2);
}

// Derivative of f at P in the standard charts: z = x/y at finite points,
// w = y/x at infinity, for the source and for the target independently.
template <class K>
K local_derivative(const DynSystem<K>& f, const ProjPoint<K>& P) {
    const auto& F = f.F();
    const auto& G = f.G();
    K X = F.eval(P.x, P.y), Y = G.eval(P.x, P.y);
    K dX, dY;
    if (!P.is_infinity()) {
        dX = F.dx().eval(P.x, P.y);
        dY = G.dx().eval(P.x, P.y);
    } else {
        dX = F.dy().eval(P.x, P.y);
        dY = G.dy().eval(P.x, P.y);
    }
    if (!is_zero(Y)) return (dX * Y - X * dY) / (Y * Y);
    return (dY * X - Y * dX) / (X * X);
}

template <class K>
K dyn_multiplier(const DynSystem<K>& f, const ProjPoint<K>& P, int n) {
    if (n < 1) throw std::domain_error("period must be positive");
    K lam(1);
    ProjPoint<K> cur = P;
    for (int i = 0; i < n; ++i) {
        lam *= local_derivative(f, cur);
        cur = f(cur);
    }
    if (cur != P) throw NotPeriodic(to_str(P) + " is not fixed by the " + std::to_string(n) + "-th iterate");
    return lam;
}

std::vector<Z> bad_primes(const QDyn& f);

inline bool is_good_prime(const QDyn& f, unsigned long p) {
    return !mpz_divisible_ui_p(f.resultant().get_num_mpz_t(), p);
}

// Printable normal form "(num)/(den)" in z.
template <class K>
std::string map_str(const DynSystem<K>& f, const std::string& param = "a") {
    auto show = [&](const UniPoly<K>& p) {
        if constexpr (std::is_same_v<K, RF>) {
            if (p.zero()) return std::string("0");
            std::string s;
            for (int i = p.degree(); i >= 0; --i) {
                if (is_zero(p.c[i])) continue;
                if (!s.empty()) s += "+";
                s += "(" + rf_str(p.c[i], param) + ")";
                if (i > 0) s += "*z^" + std::to_string(i);
            }
            return s;
        } else {
            return poly_str(p, "z");
        }
    };
    return "(" + show(f.numerator()) + ")/(" + show(f.denominator()) + ")";
}

// Coefficient lists of a map over Q specialised from a map over Q(a).
QDyn specialize(const DynSystem<RF>& f, const Q& a);

} // namespace dynamo
