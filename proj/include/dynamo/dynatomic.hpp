#pragma once

#include "dynamo/arith.hpp"
#include "dynamo/dynsys.hpp"
#include "dynamo/linalg.hpp"

#include <map>
#include <vector>

namespace dynamo {

template <class K>
struct DynatomicPoly {
    Homog<K> poly;
    int n = 1;
    int m = 0;
    bool formal = true;
};

// nu_d(n) = sum_{e | n} mu(n/e) (d^e + 1)
long dynatomic_degree(int d, int n);

// Exact quotient of forms; InexactDivision if B does not divide A.
template <class K>
Homog<K> homog_exact_div(const Homog<K>& A, const Homog<K>& B) {
    int xa = A.deg - A.p.degree(), xb = B.deg - B.p.degree();
    if (A.zero()) return Homog<K>(A.deg - B.deg, UniPoly<K>());
    if (xa < xb) throw InexactDivision("x-adic valuation");
    UniPoly<K> q = exact_div(A.p, B.p);
    if (q.degree() > A.deg - B.deg) throw InexactDivision("degree");
    return Homog<K>(A.deg - B.deg, std::move(q));
}

// First nonzero coefficient (x^D side first) made positive; over Q(a) the
// leading coefficient of that parameter polynomial is made positive.
template <class K>
Homog<K> sign_normalize(const Homog<K>& h) {
    for (const auto& x : h.p.c) {
        if (is_zero(x)) continue;
        int s = 1;
        if constexpr (std::is_same_v<K, Q>) s = sgn(x);
        else if constexpr (std::is_same_v<K, RF>) s = sgn(x.num().lc()) * sgn(x.den().lc());
        return s < 0 ? h.scaled(K(-1)) : h;
    }
    return h;
}

template <class K>
Homog<K> xform() {
    return Homog<K>(1, UniPoly<K>{K(1)});
}
template <class K>
Homog<K> yform() {
    return Homog<K>(1, UniPoly<K>{K(0), K(1)});
}

// Iterates f^0 .. f^top as (F_i, G_i), content-normalized.
template <class K>
std::vector<DynSystem<K>> iterate_chain(const DynSystem<K>& f, int top) {
    std::vector<DynSystem<K>> out;
    out.reserve(top + 1);
    out.push_back(DynSystem<K>::from_forms_trusted(xform<K>(), yform<K>()));
    for (int i = 1; i <= top; ++i) out.push_back(i == 1 ? f : compose_maps(f, out.back()));
    return out;
}

// Phi_{m,e} = F_{m+e} G_m - F_m G_{m+e}; Phi_{0,e} = y F_e - x G_e.
template <class K>
Homog<K> phi_pair(const std::vector<DynSystem<K>>& it, int m, int e) {
    const auto& a = it[m + e];
    const auto& b = it[m];
    return a.F() * b.G() - b.F() * a.G();
}

template <class K>
DynatomicPoly<K> phi_n(const DynSystem<K>& f, int n) {
    if (n < 1) throw std::domain_error("period must be positive");
    auto fn = dyn_iterate_map(f, n);
    Homog<K> h = yform<K>() * fn.F() - xform<K>() * fn.G();
    return {sign_normalize(h), n, 0, false};
}

namespace detail {
template <class K>
Homog<K> mobius_product(const std::vector<DynSystem<K>>& it, int m, int n) {
    Homog<K> num(0, UniPoly<K>::constant(K(1))), den(0, UniPoly<K>::constant(K(1)));
    for (long e : divisors(n)) {
        int mu = moebius(n / e);
        if (mu == 1) num = num * phi_pair(it, m, static_cast<int>(e));
        else if (mu == -1) den = den * phi_pair(it, m, static_cast<int>(e));
    }
    return homog_exact_div(num, den);
}
} // namespace detail

template <class K>
DynatomicPoly<K> dynatomic_star(const DynSystem<K>& f, int n) {
    if (n < 1) throw std::domain_error("period must be positive");
    auto it = iterate_chain(f, n);
    Homog<K> h = detail::mobius_product(it, 0, n);
    if (h.deg != dynatomic_degree(f.degree(), n))
        throw InvariantViolation("dynatomic degree mismatch");
    return {sign_normalize(h), n, 0, true};
}

// Phi*_{m,n} = Phi*_n(f^m) / Phi*_n(f^(m-1)), with Phi*_n(f^k) built from Phi_{k,e}.
template <class K>
DynatomicPoly<K> generalized_dynatomic(const DynSystem<K>& f, int m, int n) {
    if (n < 1 || m < 0) throw std::domain_error("bad (m,n)");
    if (m == 0) return dynatomic_star(f, n);
    auto it = iterate_chain(f, m + n);
    Homog<K> top = detail::mobius_product(it, m, n);
    Homog<K> bot = detail::mobius_product(it, m - 1, n);
    return {sign_normalize(homog_exact_div(top, bot)), n, m, true};
}

template <class K>
struct SigmaInvariants {
    int n = 1;
    bool formal = false;
    std::vector<K> values; // sigma_1 .. sigma_N
};

// Multiplication-by-lambda matrix on K[z]/(phi) and its characteristic polynomial.
template <class K>
UniPoly<K> poly_inverse_mod(const UniPoly<K>& a, const UniPoly<K>& m) {
    // extended Euclid: s*a + t*m = g
    UniPoly<K> r0 = m, r1 = divmod(a, m).second;
    UniPoly<K> s0, s1 = UniPoly<K>::constant(K(1));
    while (!r1.zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly<K> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw InvariantViolation("multiplier has a pole at a periodic point");
    return divmod(s0.scaled(K(1) / r0.c[0]), m).second;
}

template <class K>
UniPoly<K> charpoly_of_multiplication(const UniPoly<K>& L, const UniPoly<K>& phi) {
    int D = phi.degree();
    Matrix<K> M(D, std::vector<K>(D, K(0)));
    UniPoly<K> col = L;
    UniPoly<K> z = UniPoly<K>::var();
    for (int j = 0; j < D; ++j) {
        for (int i = 0; i < D; ++i) M[i][j] = col.coeff(i);
        if (j + 1 < D) col = divmod(col * z, phi).second;
    }
    return UniPoly<K>(charpoly(M));
}

// Returns the monic polynomial in t whose roots are the multipliers of the
// (formal) n-periodic points with multiplicity; its degree is the degree of
// the dynatomic form used.
template <class K>
UniPoly<K> multiplier_polynomial(const DynSystem<K>& f0, int n, bool formal) {
    DynSystem<K> f = f0;
    Homog<K> phi;
    for (int c = 0;; ++c) {
        phi = formal ? dynatomic_star(f, n).poly : phi_n(f, n).poly;
        if (!is_zero(phi.coeff(0))) break;
        if (c > 64) throw InvariantViolation("no chart avoiding periodic infinity");
        // w = 1/(z - c): the new infinity is z = c
        f = dyn_conjugate(f0, Mobius<K>(K(c), K(1), K(1), K(0)));
    }
    UniPoly<K> P = phi.dehomogenize();
    auto fn = dyn_iterate_map(f, n);
    UniPoly<K> N = fn.numerator(), Dn = fn.denominator();
    UniPoly<K> A = divmod(derivative(N) * Dn - N * derivative(Dn), P).second;
    UniPoly<K> B = divmod(Dn * Dn, P).second;
    UniPoly<K> L = divmod(A * poly_inverse_mod(B, P), P).second;
    return charpoly_of_multiplication(L, P);
}

template <class K>
SigmaInvariants<K> sigma_invariants(const DynSystem<K>& f, int n, bool formal) {
    UniPoly<K> mp = multiplier_polynomial(f, n, formal);
    int N = mp.degree();
    SigmaInvariants<K> s{n, formal, {}};
    K lc = mp.lc();
    for (int i = 1; i <= N; ++i) {
        K v = mp.coeff(N - i) / lc;
        s.values.push_back((i & 1) ? K(-v) : v);
    }
    return s;
}

} // namespace dynamo
