#include "dynamo/preperiodic.hpp"

#include "dynamo/arith.hpp"
#include "dynamo/dynatomic.hpp"
#include "dynamo/roots.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace dynamo {

int default_cap(int degree) { return degree == 4 ? 4 : 6; }

GraphConfig resolved(const GraphConfig& cfg, int degree) {
    GraphConfig r = cfg;
    if (r.cap <= 0) r.cap = default_cap(degree);
    if (r.prime_count <= 0) r.prime_count = 8;
    if (r.depth_cap <= 0) r.depth_cap = 16;
    return r;
}

namespace {

struct ModForm {
    int deg = 0;
    std::vector<uint64_t> c; // coefficient of x^(deg-i) y^i
};

ModForm reduce(const Homog<Q>& h, uint64_t p) {
    ModForm m;
    m.deg = h.deg;
    m.c.assign(h.deg + 1, 0);
    for (int i = 0; i <= h.p.degree(); ++i) m.c[i] = mod_p(h.p.c[i], p);
    return m;
}

// value at (x:y) with (x,y) = (z,1) or (1,0)
uint64_t eval_at(const ModForm& f, uint64_t x, uint64_t y, uint64_t p) {
    if (y == 0) return f.c[0];
    // sum c_i z^(deg-i): Horner from i = 0
    uint64_t acc = 0;
    for (int i = 0; i <= f.deg; ++i) acc = (acc * x + f.c[i]) % p;
    return acc;
}

ModForm diff_x(const ModForm& f, uint64_t p) {
    ModForm r;
    r.deg = f.deg - 1;
    for (int i = 0; i < f.deg; ++i) r.c.push_back(f.c[i] * ((f.deg - i) % p) % p);
    return r;
}

ModForm diff_y(const ModForm& f, uint64_t p) {
    ModForm r;
    r.deg = f.deg - 1;
    for (int i = 1; i <= f.deg; ++i) r.c.push_back(f.c[i] * (i % p) % p);
    return r;
}

uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b) % p; }

} // namespace

FpFunctionalGraph functional_graph_mod_p(const QDyn& f, uint64_t p) {
    if (p < 3 || !is_prime(Z(static_cast<unsigned long>(p))) || p > (1ULL << 31))
        throw BadPrime("expected an odd prime below 2^31");
    if (!is_good_prime(f, p)) throw BadPrime(std::to_string(p) + " is a prime of bad reduction");
    ModForm F = reduce(f.F(), p), G = reduce(f.G(), p);
    ModForm Fx = diff_x(F, p), Fy = diff_y(F, p), Gx = diff_x(G, p), Gy = diff_y(G, p);

    FpFunctionalGraph g;
    g.p = p;
    const uint32_t inf = static_cast<uint32_t>(p);
    g.images.resize(p + 1);
    for (uint64_t i = 0; i <= p; ++i) {
        uint64_t x = i == p ? 1 : i, y = i == p ? 0 : 1;
        uint64_t X = eval_at(F, x, y, p), Y = eval_at(G, x, y, p);
        if (Y == 0) {
            if (X == 0) throw InvariantViolation("reduction vanishes at a point of a good prime");
            g.images[i] = inf;
        } else {
            g.images[i] = static_cast<uint32_t>(mulm(X, invmod(Y, p), p));
        }
    }

    auto local = [&](uint32_t i) {
        uint64_t x = i == inf ? 1 : i, y = i == inf ? 0 : 1;
        uint64_t X = eval_at(F, x, y, p), Y = eval_at(G, x, y, p);
        uint64_t dX = i == inf ? eval_at(Fy, x, y, p) : eval_at(Fx, x, y, p);
        uint64_t dY = i == inf ? eval_at(Gy, x, y, p) : eval_at(Gx, x, y, p);
        if (Y != 0) {
            uint64_t num = subm(mulm(dX, Y, p), mulm(X, dY, p), p);
            return mulm(num, invmod(mulm(Y, Y, p), p), p);
        }
        uint64_t num = subm(mulm(dY, X, p), mulm(Y, dX, p), p);
        return mulm(num, invmod(mulm(X, X, p), p), p);
    };

    // cycle detection by colouring
    std::vector<uint8_t> state(p + 1, 0); // 0 new, 1 on stack, 2 done
    for (uint32_t s = 0; s <= inf; ++s) {
        if (state[s]) continue;
        std::vector<uint32_t> path;
        uint32_t v = s;
        while (!state[v]) {
            state[v] = 1;
            path.push_back(v);
            v = g.images[v];
        }
        if (state[v] == 1) {
            std::vector<uint32_t> cyc;
            auto it = std::find(path.begin(), path.end(), v);
            cyc.assign(it, path.end());
            uint64_t lam = 1;
            for (uint32_t u : cyc) lam = mulm(lam, local(u), p);
            g.cycle_lengths.push_back(static_cast<int>(cyc.size()));
            g.cycle_multipliers.push_back(lam);
            g.cycles.push_back(std::move(cyc));
        }
        for (uint32_t u : path) state[u] = 2;
    }
    return g;
}

std::vector<uint64_t> good_odd_primes(const QDyn& f, int count) {
    static const std::vector<uint32_t> primes = primes_below(100000);
    std::vector<uint64_t> out;
    for (uint32_t p : primes) {
        if (p == 2) continue;
        if (static_cast<int>(out.size()) >= count) break;
        if (is_good_prime(f, p)) out.push_back(p);
    }
    if (static_cast<int>(out.size()) < count)
        throw InsufficientGoodPrimes("fewer than " + std::to_string(count) + " good odd primes below 100000");
    return out;
}

std::set<int> possible_periods(const QDyn& f, int prime_count, int cap) {
    if (cap < 1) throw std::domain_error("cap must be positive");
    std::set<int> result;
    bool first = true;
    for (uint64_t p : good_odd_primes(f, prime_count)) {
        FpFunctionalGraph g = functional_graph_mod_p(f, p);
        std::set<int> adm;
        for (size_t i = 0; i < g.cycles.size(); ++i) {
            long m = g.cycle_lengths[i];
            if (m > cap) continue;
            adm.insert(static_cast<int>(m));
            uint64_t lam = g.cycle_multipliers[i];
            if (lam == 0) continue;
            long r = static_cast<long>(mult_order(lam, p));
            for (long n = m * r; n <= cap; n *= static_cast<long>(p)) adm.insert(static_cast<int>(n));
        }
        if (first) {
            result = std::move(adm);
            first = false;
        } else {
            std::set<int> both;
            std::set_intersection(result.begin(), result.end(), adm.begin(), adm.end(),
                                  std::inserter(both, both.begin()));
            result = std::move(both);
        }
    }
    return result;
}

int minimal_period(const QDyn& f, const QPoint& P, int bound) {
    QPoint cur = P;
    for (int n = 1; n <= bound; ++n) {
        cur = f(cur);
        if (cur == P) return n;
    }
    return 0;
}

std::map<int, std::vector<QPoint>> rational_periodic_points(const QDyn& f, const std::set<int>& periods) {
    std::map<int, std::vector<QPoint>> out;
    std::vector<QPoint> seen;
    auto add = [&](const QPoint& P, int n) {
        int m = minimal_period(f, P, n);
        if (m == 0 || n % m != 0) throw InvariantViolation("dynatomic root is not periodic: " + to_str(P));
        if (std::find(seen.begin(), seen.end(), P) != seen.end()) return;
        seen.push_back(P);
        out[m].push_back(P);
    };
    for (int n : periods) {
        Homog<Q> phi = dynatomic_star(f, n).poly;
        if (is_zero(phi.coeff(0))) add(QPoint::infinity(), n);
        for (const Q& z : rational_roots(phi.dehomogenize())) add(QPoint::affine(z), n);
    }
    for (auto& [n, pts] : out) std::sort(pts.begin(), pts.end(), point_less);
    return out;
}

std::vector<QPoint> rational_preimages(const QDyn& f, const QPoint& P) {
    // F(z,1)*Py - G(z,1)*Px
    QPoly eq = f.numerator().scaled(P.y) - f.denominator().scaled(P.x);
    std::vector<QPoint> out;
    if (eq.zero()) throw InvariantViolation("preimage equation vanishes identically");
    for (const Q& z : rational_roots(eq)) out.push_back(QPoint::affine(z));
    if (is_zero(f.F().coeff(0) * P.y - f.G().coeff(0) * P.x)) out.push_back(QPoint::infinity());
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

int PreperGraph::index_of(const QPoint& P) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), P, point_less);
    if (it == nodes.end() || *it != P) return -1;
    return static_cast<int>(it - nodes.begin());
}

std::multiset<int> PreperGraph::cycle_structure() const {
    std::multiset<int> s;
    for (const auto& c : cycles) s.insert(static_cast<int>(c.size()));
    return s;
}

PreperGraph graph_from_points(const QDyn& f, std::vector<QPoint> points) {
    std::sort(points.begin(), points.end(), point_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    PreperGraph g;
    g.map = map_str(f);
    g.nodes = std::move(points);
    size_t n = g.nodes.size();
    g.next.resize(n);
    for (size_t i = 0; i < n; ++i) {
        int j = g.index_of(f(g.nodes[i]));
        if (j < 0) throw InvariantViolation("node set is not forward closed at " + to_str(g.nodes[i]));
        g.next[i] = j;
    }
    // periodic nodes: those reached again from themselves
    g.period.assign(n, 0);
    g.depth.assign(n, -1);
    std::vector<uint8_t> state(n, 0);
    for (size_t s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<int> path;
        int v = static_cast<int>(s);
        while (!state[v]) {
            state[v] = 1;
            path.push_back(v);
            v = g.next[v];
        }
        if (state[v] == 1) {
            auto it = std::find(path.begin(), path.end(), v);
            std::vector<int> cyc(it, path.end());
            // start each cycle at its smallest node
            std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
            for (int u : cyc) {
                g.period[u] = static_cast<int>(cyc.size());
                g.depth[u] = 0;
            }
            g.cycles.push_back(std::move(cyc));
        }
        for (int u : path) state[u] = 2;
    }
    std::sort(g.cycles.begin(), g.cycles.end());
    // tail depths
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> path;
        int v = static_cast<int>(i);
        while (g.depth[v] < 0) {
            path.push_back(v);
            v = g.next[v];
        }
        int d = g.depth[v];
        for (auto it = path.rbegin(); it != path.rend(); ++it) g.depth[*it] = ++d;
    }
    return g;
}

PreperGraph build_preperiodic_graph(const QDyn& f, const GraphConfig& cfg0) {
    GraphConfig cfg = resolved(cfg0, f.degree());
    std::set<int> periods = possible_periods(f, cfg.prime_count, cfg.cap);
    auto periodic = rational_periodic_points(f, periods);
    std::vector<QPoint> pts;
    for (const auto& [n, v] : periodic) pts.insert(pts.end(), v.begin(), v.end());
    std::vector<QPoint> all = pts;
    auto known = [&](const QPoint& P) { return std::find(all.begin(), all.end(), P) != all.end(); };
    std::vector<QPoint> frontier = pts;
    int level = 0;
    while (!frontier.empty()) {
        std::vector<QPoint> nxt;
        for (const auto& P : frontier)
            for (const auto& R : rational_preimages(f, P))
                if (!known(R)) {
                    all.push_back(R);
                    nxt.push_back(R);
                }
        if (!nxt.empty() && ++level > cfg.depth_cap)
            throw DepthCapExceeded("preimage tree deeper than " + std::to_string(cfg.depth_cap));
        frontier = std::move(nxt);
    }
    PreperGraph g = graph_from_points(f, std::move(all));
    g.prime_count = cfg.prime_count;
    g.cap = cfg.cap;
    return g;
}

namespace {

std::string tree_code(int v, const std::vector<std::vector<int>>& kids) {
    std::vector<std::string> parts;
    for (int c : kids[v]) parts.push_back(tree_code(c, kids));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
}

} // namespace

std::string canonical_key(const std::vector<int>& next) {
    size_t n = next.size();
    std::vector<uint8_t> state(n, 0), on_cycle(n, 0);
    std::vector<std::vector<int>> cycles;
    for (size_t s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<int> path;
        int v = static_cast<int>(s);
        while (!state[v]) {
            state[v] = 1;
            path.push_back(v);
            v = next[v];
        }
        if (state[v] == 1) {
            auto it = std::find(path.begin(), path.end(), v);
            cycles.emplace_back(it, path.end());
            for (int u : cycles.back()) on_cycle[u] = 1;
        }
        for (int u : path) state[u] = 2;
    }
    std::vector<std::vector<int>> kids(n);
    for (size_t i = 0; i < n; ++i)
        if (!on_cycle[i]) kids[next[i]].push_back(static_cast<int>(i));

    std::vector<std::pair<size_t, std::string>> codes;
    for (const auto& cyc : cycles) {
        std::vector<std::string> seq;
        for (int u : cyc) seq.push_back(tree_code(u, kids));
        std::vector<std::string> best = seq;
        for (size_t r = 1; r < seq.size(); ++r) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            if (seq < best) best = seq;
        }
        std::string s = "[";
        for (const auto& t : best) s += t;
        codes.emplace_back(cyc.size(), s + "]");
    }
    std::sort(codes.begin(), codes.end());
    std::string key;
    for (const auto& c : codes) key += c.second;
    return key;
}

bool graph_isomorphic(const PreperGraph& a, const PreperGraph& b) {
    return a.nodes.size() == b.nodes.size() && canonical_key(a) == canonical_key(b);
}

std::string export_graph(const PreperGraph& g, const std::string& format) {
    if (format == "dot") {
        std::ostringstream os;
        os << "digraph preperiodic {\n";
        for (const auto& P : g.nodes) os << "  \"" << to_str(P) << "\";\n";
        for (size_t i = 0; i < g.nodes.size(); ++i)
            os << "  \"" << to_str(g.nodes[i]) << "\" -> \"" << to_str(g.nodes[g.next[i]]) << "\";\n";
        os << "}\n";
        return os.str();
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["map"] = g.map;
        j["nodes"] = nlohmann::ordered_json::array();
        for (const auto& P : g.nodes) j["nodes"].push_back(to_str(P));
        j["edges"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < g.nodes.size(); ++i) j["edges"].push_back({static_cast<int>(i), g.next[i]});
        j["cycles"] = g.cycles;
        j["meta"] = {{"prime_count", g.prime_count}, {"cap", g.cap}};
        return j.dump() + "\n";
    }
    throw UnknownFormat("unknown graph format '" + format + "'");
}

} // namespace dynamo
