#include "dynamo/families.hpp"

#include "dynamo/dynatomic.hpp"
#include "dynamo/expr.hpp"

#include "json.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace dynamo {

namespace {

#include "family_data.inc"

GraphTemplate T(std::string name, std::vector<int> next, std::string note) {
    return GraphTemplate{std::move(name), std::move(next), std::move(note)};
}

Locus L(std::string name, std::string expr, std::vector<Q> excluded, std::string tmpl) {
    return Locus{std::move(name), std::move(expr), std::move(excluded), std::move(tmpl)};
}

std::vector<FamilySpec> build_catalog() {
    const AutGenerator neg{"-z", "[[-1,0],[0,1]]"};
    const AutGenerator inv{"1/z", "[[0,1],[1,0]]"};
    const AutGenerator rot3{"zeta3*z", "[[1@zeta3,0],[0,1]]"};
    const AutGenerator rot4{"i*z", "[[1@i,0],[0,1]]"};
    const Q h(1, 2);

    std::vector<FamilySpec> c;
    FamilySpec f;

    f = {};
    f.id = "a3c4";
    f.map = "1/z^3";
    f.degree = 3;
    f.group = "D4";
    f.group_order = 8;
    f.generators = {rot4, inv};
    f.templates = {T("G1", {1, 0, 2, 3}, "2-cycle {0,inf}, fixed 1 and -1")};
    c.push_back(f);

    f = {};
    f.id = "a3a4tet";
    f.map = "(z^3-3)/(-3*z^2)";
    f.degree = 3;
    f.group = "C3";
    f.group_order = 3;
    f.generators = {rot3};
    f.templates = {T("G1", {1, 1}, "0 -> inf, inf fixed")};
    c.push_back(f);

    f = {};
    f.id = "a3c3";
    f.map = "(z^3+a)/(a*z^2)";
    f.degree = 3;
    f.params = {"a"};
    f.nonzero = {"a"};
    f.group = "C3";
    f.group_order = 3;
    f.generators = {rot3};
    f.templates = {T("G1", {1, 1, 2, 2, 2}, "0 -> inf fixed; extra fixed point with two tails"),
                   T("G2", {1, 1, 2}, "0 -> inf fixed; extra fixed point"),
                   T("G3", {1, 2, 2}, "preimage of 0 -> 0 -> inf fixed"),
                   T("G4", {1, 1}, "0 -> inf fixed")};
    f.loci = {L("extra_fixed", "1/(1-t^3)", {Q(0), Q(1)}, "G2"), L("preimage_zero", "t^3", {Q(0)}, "G3")};
    c.push_back(f);

    f = {};
    f.id = "a3d2f";
    f.map = "(a*z^2+1)/(z^3+a*z)";
    f.degree = 3;
    f.params = {"a"};
    f.nonzero = {"a-1", "a+1"};
    f.group = "D2";
    f.group_order = 4;
    f.generators = {neg, inv};
    f.templates = {T("G1", {0, 1, 3, 2}, "fixed 1 and -1, 2-cycle {0,inf}"),
                   T("G2", {0, 0, 0, 3, 3, 3, 7, 6}, "two tails into each of 1 and -1"),
                   T("G3", {0, 1, 3, 2, 5, 4, 7, 6}, "two extra 2-cycles"),
                   T("G4", {0, 1, 3, 2, 2, 2, 3, 3}, "two tails into each of 0 and inf")};
    f.loci = {L("preimage_one", "(t^2+t+1)/t", {Q(0), Q(1), Q(-1)}, "G2"),
              L("two_cycles", "(-t^4-1)/(2*t^2)", {Q(0), Q(1), Q(-1)}, "G3"),
              L("preimages_zero_inf", "-t^2", {Q(0), Q(1), Q(-1)}, "G4")};
    c.push_back(f);

    f = {};
    f.id = "a3d2g";
    f.map = "(a*z^2-1)/(z^3-a*z)";
    f.degree = 3;
    f.params = {"a"};
    f.nonzero = {"a-1", "a+1"};
    f.group = "D2";
    f.group_order = 4;
    f.generators = {neg, inv};
    f.templates = {T("G1", {1, 0, 3, 2}, "2-cycles {1,-1} and {0,inf}"),
                   T("G2", {1, 0, 3, 2, 4, 5, 6, 7}, "four extra fixed points"),
                   T("G3", {1, 0, 3, 2, 2, 2, 3, 3}, "two tails into each point of one 2-cycle")};
    f.loci = {L("fixed_points", "(t^4+1)/(2*t^2)", {Q(0), Q(1), Q(-1)}, "G2"),
              L("tails_zero_inf", "t^2", {Q(0), Q(1), Q(-1)}, "G3"),
              L("tails_pm1", "(3*t^2+3*t+3)/(2*t^2+5*t+2)", {Q(-2), Q(-1), -h, Q(1)}, "G3")};
    c.push_back(f);

    f = {};
    f.id = "a3c2f";
    f.map = "(z^3+a*z)/(b*z^2+1)";
    f.degree = 3;
    f.params = {"a", "b"};
    f.nonzero = {"a*b-1"};
    f.group = "C2";
    f.group_order = 2;
    f.generators = {neg};
    c.push_back(f);

    f = {};
    f.id = "a3c2g";
    f.map = "(a*z^2+1)/(z^3+b*z)";
    f.degree = 3;
    f.params = {"a", "b"};
    f.nonzero = {"a*b-1"};
    f.group = "C2";
    f.group_order = 2;
    f.generators = {neg};
    c.push_back(f);

    f = {};
    f.id = "a4c5";
    f.map = "1/z^4";
    f.degree = 4;
    f.group = "C2";
    f.group_order = 2;
    f.generators = {inv};
    f.templates = {T("G1", {1, 0, 3, 3}, "2-cycle {0,inf}, -1 -> 1 fixed")};
    c.push_back(f);

    f = {};
    f.id = "a4c4";
    f.map = "(z^4+1)/(k*z^3)";
    f.degree = 4;
    f.params = {"k"};
    f.nonzero = {"k"};
    f.group = "C4";
    f.group_order = 4;
    f.generators = {rot4};
    f.templates = {T("G1", {1, 1}, "0 -> inf fixed"), T("G2", {1, 1, 2, 3}, "two extra fixed points"),
                   T("G3", {1, 1, 3, 2}, "extra 2-cycle"), T("G4", {1, 1, 3, 2, 5, 4}, "two extra 2-cycles")};
    f.loci = {L("extra_fixed", "1+t^4", {Q(0)}, "G2"), L("two_cycle", "-(1+t^4)", {Q(0)}, "G3"),
              L("two_cycles", "t^2+1/t^2", {Q(0), Q(1), Q(-1)}, "G4"),
              L("two_cycles_neg", "-(t^2+1/t^2)", {Q(0), Q(1), Q(-1)}, "G4")};
    c.push_back(f);

    f = {};
    f.id = "a4d3";
    f.map = "(z^4+k*z)/(k*z^3+1)";
    f.degree = 4;
    f.params = {"k"};
    f.nonzero = {"k-1", "k+1"};
    f.group = "D3";
    f.group_order = 6;
    f.generators = {rot3, inv};
    f.templates = {T("G1", {1, 1, 2, 3}, "-1 -> 1 fixed, 0 and inf fixed"),
                   T("G2", {3, 3, 3, 3, 4, 5}, "three tails into the fixed point 1"),
                   T("G3", {1, 1, 3, 3, 5, 5}, "one tail into each of 1, 0, inf"),
                   T("G4", {1, 1, 2, 3, 5, 4}, "extra 2-cycle"),
                   T("G5", {2, 2, 3, 3, 4, 5}, "two tails into -1")};
    f.loci = {L("preimages_one", "t+1/t", {Q(0), Q(1), Q(-1)}, "G2"),
              L("tails_fixed", "t^3", {Q(0), Q(1), Q(-1)}, "G3"),
              L("two_cycle", "t^2+t+1+1/t+1/t^2", {Q(0), Q(1), Q(-1)}, "G4"),
              L("tails_minus_one", "(-1-t^4)/(t^3+t)", {Q(0), Q(1), Q(-1)}, "G5")};
    c.push_back(f);

    f = {};
    f.id = "a4c3";
    f.map = "(z^4+k1*z)/(k2*z^3+1)";
    f.degree = 4;
    f.params = {"k1", "k2"};
    f.nonzero = {"k1*k2-1"};
    f.group = "C3";
    f.group_order = 3;
    f.generators = {rot3};
    c.push_back(f);

    f = {};
    f.id = "a4c2";
    f.map = "(z^4+k1*z^2+1)/(k2*z^3+k3*z)";
    f.degree = 4;
    f.params = {"k1", "k2", "k3"};
    f.nonzero = {"k2^2+k3^2-k1*k2*k3"};
    f.group = "C2";
    f.group_order = 2;
    f.generators = {neg};
    // rational 6-cycles occur in this family
    f.census_cap = 6;
    c.push_back(f);

    for (auto& fam : c)
        for (const auto& t : kFormulaTables)
            if (t.family == fam.id) {
                fam.forms = t.forms;
                fam.relations = t.relations;
            }
    return c;
}

} // namespace

const std::vector<FamilySpec>& family_catalog() {
    static const std::vector<FamilySpec> cat = build_catalog();
    return cat;
}

const FamilySpec& family_spec(const std::string& id) {
    for (const auto& f : family_catalog())
        if (f.id == id) return f;
    throw UnknownFamily("'" + id + "'");
}

const std::vector<DrawnGraph>& census_shapes() { return kCensusShapes; }

GraphConfig family_config(const FamilySpec& fam, const GraphConfig& cfg) {
    GraphConfig out = cfg;
    if (out.cap == 0) out.cap = fam.census_cap;
    return out;
}

std::map<std::string, Q> family_bindings(const FamilySpec& fam, const std::vector<Q>& params) {
    if (params.size() != fam.params.size())
        throw IndexOutOfRange(fam.id + " takes " + std::to_string(fam.params.size()) + " parameter(s), got " +
                              std::to_string(params.size()));
    std::map<std::string, Q> b;
    for (size_t i = 0; i < params.size(); ++i) b[fam.params[i]] = params[i];
    return b;
}

QDyn family_make(const std::string& id, const std::vector<Q>& params) {
    const auto& fam = family_spec(id);
    auto b = family_bindings(fam, params);
    for (const auto& cond : fam.nonzero)
        if (is_zero(eval_q(cond, b))) throw DegenerateParameter(id + ": requires " + cond + " != 0");
    try {
        return parse_map(fam.map, b);
    } catch (const DegenerateMap& e) {
        throw InvariantViolation(id + ": resultant vanished at admissible parameters");
    }
}

std::vector<Q> locus_parameterize(const std::string& id, const std::string& locus, const Q& t) {
    const auto& fam = family_spec(id);
    for (const auto& l : fam.loci) {
        if (l.name != locus) continue;
        for (const auto& x : l.excluded)
            if (x == t) throw ExcludedParameter(id + "/" + locus + ": t = " + to_str(t) + " is excluded");
        Q v;
        try {
            v = eval_q(l.expr, {{"t", t}});
        } catch (const DegenerateParameter&) {
            throw ExcludedParameter(id + "/" + locus + ": pole at t = " + to_str(t));
        }
        std::vector<Q> p{v};
        auto b = family_bindings(fam, p);
        for (const auto& cond : fam.nonzero)
            if (is_zero(eval_q(cond, b)))
                throw ExcludedParameter(id + "/" + locus + ": t = " + to_str(t) + " gives a degenerate map");
        return p;
    }
    throw IndexOutOfRange(id + " has no locus '" + locus + "'");
}

std::string classify_graph(const FamilySpec& fam, const PreperGraph& g) {
    std::string key = canonical_key(g);
    for (const auto& t : fam.templates)
        if (canonical_key(t.next) == key) return t.name;
    for (const auto& d : census_shapes())
        if (d.family == fam.id && !d.next.empty() && canonical_key(d.next) == key) return d.params;
    return "unrecognized";
}

std::string classify_graph(const std::string& id, const std::vector<Q>& params, const GraphConfig& cfg) {
    const auto& fam = family_spec(id);
    return classify_graph(fam, build_preperiodic_graph(family_make(id, params), family_config(fam, cfg)));
}

// ---------------------------------------------------------------- census

std::string params_str(const std::vector<Q>& params) {
    std::string s = "(";
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + to_str(params[i]);
    return s + ")";
}

CensusResult run_census(const std::string& id, const std::vector<std::vector<Q>>& params_list,
                        const GraphConfig& cfg, int jobs) {
    const GraphConfig fcfg = family_config(family_spec(id), cfg);
    CensusResult res;
    res.family = id;
    res.records.resize(params_list.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < params_list.size(); i = next++) {
            CensusRecord& r = res.records[i];
            r.params = params_list[i];
            try {
                PreperGraph g = build_preperiodic_graph(family_make(id, r.params), fcfg);
                r.key = canonical_key(g);
                r.node_count = static_cast<int>(g.nodes.size());
                r.cycle_structure = g.cycle_structure();
                r.ok = true;
            } catch (const Error& e) {
                r.error = e.what();
            }
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::set<std::string> keys;
    for (const auto& r : res.records)
        if (r.ok) keys.insert(r.key);
    res.distinct = static_cast<int>(keys.size());
    return res;
}

std::vector<std::vector<Q>> read_params_tsv(std::istream& in) {
    std::vector<std::vector<Q>> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<Q> row;
        std::string cell;
        while (ss >> cell) {
            try {
                row.push_back(eval_q(cell, {}));
            } catch (const Error& e) {
                throw SyntaxError("line " + std::to_string(lineno) + ": bad rational '" + cell + "'", 0);
            }
        }
        if (!row.empty()) out.push_back(std::move(row));
    }
    return out;
}

namespace {

std::string cycles_str(const std::multiset<int>& cs) {
    std::string s;
    for (int c : cs) s += (s.empty() ? "" : ",") + std::to_string(c);
    return s.empty() ? "-" : s;
}

} // namespace

std::string census_tsv(const CensusResult& r) {
    std::ostringstream os;
    os << "params\tkey\tnode_count\tcycle_structure\n";
    for (const auto& rec : r.records) {
        std::string p;
        for (const auto& x : rec.params) p += (p.empty() ? "" : ",") + to_str(x);
        if (rec.ok)
            os << p << '\t' << rec.key << '\t' << rec.node_count << '\t' << cycles_str(rec.cycle_structure) << '\n';
        else
            os << p << "\tERROR\t0\t" << rec.error << '\n';
    }
    return os.str();
}

std::string census_json(const CensusResult& r) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["distinct"] = r.distinct;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
        nlohmann::ordered_json e;
        e["params"] = nlohmann::ordered_json::array();
        for (const auto& x : rec.params) e["params"].push_back(to_str(x));
        if (rec.ok) {
            e["key"] = rec.key;
            e["node_count"] = rec.node_count;
            e["cycle_structure"] = std::vector<int>(rec.cycle_structure.begin(), rec.cycle_structure.end());
        } else {
            e["error"] = rec.error;
        }
        j["records"].push_back(e);
    }
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- sigma data

namespace {

struct SigmaCache {
    const QDyn& f;
    std::map<std::pair<int, bool>, std::vector<Q>> got;
    const std::vector<Q>& get(int n, bool formal) {
        auto key = std::make_pair(n, formal);
        auto it = got.find(key);
        if (it == got.end()) it = got.emplace(key, sigma_invariants(f, n, formal).values).first;
        return it->second;
    }
};

// Binds sI/uI for the relation's variables; false when one is out of range.
bool bind_sigmas(const MPoly& p, SigmaCache& cache, std::map<std::string, Q>& vals) {
    for (const auto& v : p.variables()) {
        if (vals.count(v)) continue;
        if ((v[0] != 's' && v[0] != 'u') || v.size() < 2) return false;
        int n = v[0] == 's' ? 1 : 2;
        size_t idx = std::stoul(v.substr(1));
        const auto& s = cache.get(n, false);
        if (idx < 1 || idx > s.size()) return false;
        vals[v] = s[idx - 1];
    }
    return true;
}

int relation_level(const MPoly& p) {
    int lvl = 0;
    for (const auto& v : p.variables()) {
        if (v.size() >= 2 && v[0] == 's' && std::isdigit(static_cast<unsigned char>(v[1]))) lvl |= 1;
        if (v.size() >= 2 && v[0] == 'u' && std::isdigit(static_cast<unsigned char>(v[1]))) lvl |= 2;
    }
    return lvl;
}

} // namespace

bool verify_sigma_closed_forms(const std::string& id, int n, const std::vector<std::vector<Q>>& samples) {
    const auto& fam = family_spec(id);
    bool any = false;
    for (const auto& params : samples) {
        QDyn f = family_make(id, params);
        auto b = family_bindings(fam, params);
        SigmaCache cache{f, {}};
        for (const auto& form : fam.forms) {
            if (form.n != n) continue;
            any = true;
            const auto& s = cache.get(n, form.formal);
            if (form.index < 1 || form.index > static_cast<int>(s.size())) return false;
            if (eval_q(form.expr, b) != s[form.index - 1]) return false;
        }
        for (const auto& rel : fam.relations) {
            MPoly p = parse_mpoly(rel);
            if (relation_level(p) != (n == 1 ? 1 : n == 2 ? 2 : -1)) continue;
            any = true;
            auto vals = b;
            if (!bind_sigmas(p, cache, vals) || !is_zero(p.eval(vals))) return false;
        }
    }
    if (!any) throw IndexOutOfRange(id + " ships no sigma^(" + std::to_string(n) + ") data");
    return true;
}

std::vector<int> failing_relations(const std::string& id, const std::vector<Q>& params) {
    const auto& fam = family_spec(id);
    QDyn f = family_make(id, params);
    auto b = family_bindings(fam, params);
    SigmaCache cache{f, {}};
    std::vector<int> bad;
    for (size_t i = 0; i < fam.relations.size(); ++i) {
        MPoly p = parse_mpoly(fam.relations[i]);
        auto vals = b;
        if (!bind_sigmas(p, cache, vals) || !is_zero(p.eval(vals))) bad.push_back(static_cast<int>(i));
    }
    return bad;
}

} // namespace dynamo
