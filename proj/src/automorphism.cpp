#include "dynamo/automorphism.hpp"

#include "dynamo/dynatomic.hpp"

#include <algorithm>
#include <numeric>

namespace dynamo {

bool is_automorphism(const QDyn& f, const Mobius<Q>& a) {
    return same_map(dyn_conjugate(f, a), f);
}

bool is_automorphism(const QDyn& f, const Mobius<NF>& a) {
    if (a.p.is_rational() && a.q.is_rational() && a.r.is_rational() && a.s.is_rational())
        return is_automorphism(f, Mobius<Q>(a.p.c0(), a.q.c0(), a.r.c0(), a.s.c0()));
    auto fn = f.cast<NF>();
    return same_map(dyn_conjugate(fn, a), fn);
}

namespace {

long height(const Mobius<Q>& m) {
    long h = 0;
    for (const Q* x : {&m.p, &m.q, &m.r, &m.s}) h = std::max(h, std::abs(x->get_num().get_si()));
    return h;
}

bool contains(const std::vector<Mobius<Q>>& v, const Mobius<Q>& m) {
    return std::find(v.begin(), v.end(), m) != v.end();
}

} // namespace

AutReport rational_automorphisms(const QDyn& f, int H) {
    if (H < 1) throw std::invalid_argument("height bound must be positive");
    AutReport rep;
    rep.map = map_str(f);
    for (long p = -H; p <= H; ++p)
        for (long q = -H; q <= H; ++q)
            for (long r = -H; r <= H; ++r)
                for (long s = -H; s <= H; ++s) {
                    long g = std::gcd(std::gcd(p, q), std::gcd(r, s));
                    if (g != 1) continue;
                    long first = p ? p : q ? q : r ? r : s;
                    if (first < 0 || p * s - q * r == 0) continue;
                    Mobius<Q> m{Q(p), Q(q), Q(r), Q(s)};
                    if (is_automorphism(f, m)) rep.rational_group.push_back(m);
                }
    std::stable_sort(rep.rational_group.begin(), rep.rational_group.end(),
                     [](const Mobius<Q>& a, const Mobius<Q>& b) {
                         if (a.is_identity_mod_scalars() != b.is_identity_mod_scalars()) return a.is_identity_mod_scalars();
                         return height(a) < height(b);
                     });
    // the search box is not closed under products; closure only fails on a bug
    for (const auto& a : rep.rational_group) {
        if (!contains(rep.rational_group, normalized(a.inverse())))
            throw InvariantViolation("automorphism set not closed under inverse");
        for (const auto& b : rep.rational_group) {
            Mobius<Q> c = normalized(a * b);
            if (height(c) <= H && !contains(rep.rational_group, c))
                throw InvariantViolation("automorphism set not closed under composition");
        }
    }
    rep.order = static_cast<int>(rep.rational_group.size());
    return rep;
}

std::vector<Mobius<NF>> group_closure(const std::vector<Mobius<NF>>& gens, int limit) {
    std::vector<Mobius<NF>> elems{Mobius<NF>::identity()};
    auto has = [&](const Mobius<NF>& m) { return std::find(elems.begin(), elems.end(), m) != elems.end(); };
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            if (!g.invertible()) throw NonInvertible("singular generator");
            Mobius<NF> c = (elems[i] * g).canonical();
            if (has(c)) continue;
            elems.push_back(c);
            if (static_cast<int>(elems.size()) > limit)
                throw ClosureExceeded("generated group has more than " + std::to_string(limit) + " elements");
        }
    return elems;
}

bool verify_group_table(const QDyn& f, const std::vector<Mobius<NF>>& gens, int expected_order) {
    auto elems = group_closure(gens, expected_order);
    if (static_cast<int>(elems.size()) != expected_order) return false;
    for (const auto& m : elems)
        if (!is_automorphism(f, m)) return false;
    return true;
}

bool is_conjugate_by(const QDyn& f, const QDyn& g, const Mobius<Q>& a) {
    return same_map(dyn_conjugate(f, a), g);
}

bool is_conjugate_by(const QDyn& f, const QDyn& g, const Mobius<NF>& a) {
    auto fn = f.cast<NF>();
    return same_map(dyn_conjugate(fn, a), g.cast<NF>());
}

bool sigma_separates(const QDyn& f, const QDyn& g, const std::vector<int>& ns) {
    if (f.degree() != g.degree()) return true;
    for (int n : ns)
        if (sigma_invariants(f, n, false).values != sigma_invariants(g, n, false).values) return true;
    return false;
}

} // namespace dynamo
