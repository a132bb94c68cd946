#include "dynamo/automorphism.hpp"
#include "dynamo/dynatomic.hpp"
#include "dynamo/expr.hpp"
#include "dynamo/families.hpp"
#include "dynamo/preperiodic.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace dynamo;

namespace {

std::map<std::string, Q> bindings(const std::vector<std::string>& params) {
    std::map<std::string, Q> b;
    for (const auto& p : params) b.insert(parse_binding(p));
    return b;
}

int env_primes() {
    const char* s = std::getenv("DYNAMO_PRIMES");
    if (!s || !*s) return GraphConfig{}.prime_count;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end || v < 1 || v > 1000) throw CLI::ValidationError("DYNAMO_PRIMES", "expected a positive integer");
    return static_cast<int>(v);
}

template <class K>
std::string coef_str(const K& c, const std::string& param) {
    if constexpr (std::is_same_v<K, RF>)
        return rf_str(c, param);
    else
        return to_str(c);
}

// Homogeneous form in x, y.
template <class K>
std::string form_str(const Homog<K>& h, const std::string& param) {
    std::string s;
    for (int i = 0; i <= h.deg; ++i) {
        K c = h.coeff(i);
        if (is_zero(c)) continue;
        std::string cs = coef_str(c, param);
        bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos;
        bool neg = !compound && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (compound) cs = "(" + cs + ")";
        s += s.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
        std::string mono;
        auto pw = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        pw("x", h.deg - i);
        pw("y", i);
        if (mono.empty())
            s += cs;
        else
            s += (cs == "1" ? "" : cs + "*") + mono;
    }
    return s.empty() ? "0" : s;
}

template <class K>
void print_sigma(const DynSystem<K>& f, int n, bool formal, const std::string& param) {
    auto s = sigma_invariants(f, n, formal);
    std::string tag = "^(" + std::to_string(n) + ")" + (formal ? "*" : "");
    for (size_t i = 0; i < s.values.size(); ++i)
        std::cout << "sigma_" << i + 1 << tag << " = " << coef_str(s.values[i], param) << "\n";
}

template <class K>
void print_dynatomic(const DynSystem<K>& f, int n, int m, const std::string& param) {
    auto d = m > 0 ? generalized_dynatomic(f, m, n) : dynatomic_star(f, n);
    std::cout << "degree: " << d.poly.deg << "\n" << form_str(d.poly, param) << "\n";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dynamics of rational maps on the projective line"};
    app.require_subcommand(1);

    std::string map_text, map2_text, by, family, params_file, out_path, format, locus, t_text;
    std::vector<std::string> params, checks;
    int n = 1, m = 0, height = 2, jobs = 1, cap = 0, primes = 0;
    bool formal = false;

    auto* sigma = app.add_subcommand("sigma", "multiplier invariants sigma_i^(n)");
    sigma->add_option("--map", map_text, "rational map in z")->required();
    sigma->add_option("--param", params, "parameter binding name=value");
    sigma->add_option("--n", n, "period")->check(CLI::Range(1, 12));
    sigma->add_flag("--formal", formal, "use the formal dynatomic points");

    auto* dyn = app.add_subcommand("dynatomic", "dynatomic polynomial Phi*_n or Phi*_{m,n}");
    dyn->add_option("--map", map_text)->required();
    dyn->add_option("--param", params);
    dyn->add_option("--n", n)->required()->check(CLI::Range(1, 12));
    dyn->add_option("--m", m, "preperiod (generalized form)")->check(CLI::Range(0, 12));

    auto* graph = app.add_subcommand("graph", "rational preperiodic graph");
    graph->add_option("--map", map_text)->required();
    graph->add_option("--param", params);
    graph->add_option("--format", format, "json, dot or key")->check(CLI::IsMember({"json", "dot", "key"}));
    graph->add_option("--primes", primes, "good primes used for period bounds")->check(CLI::Range(1, 1000));
    graph->add_option("--cap", cap, "largest period searched")->check(CLI::Range(1, 64));

    auto* aut = app.add_subcommand("aut", "rational automorphisms");
    aut->add_option("--map", map_text)->required();
    aut->add_option("--param", params);
    aut->add_option("--height", height, "entry bound of the search")->check(CLI::Range(1, 20));
    aut->add_option("--check", checks, "Mobius matrix to test");

    auto* conj = app.add_subcommand("conjugate", "conjugate a map by a Mobius transformation");
    conj->add_option("--map", map_text)->required();
    conj->add_option("--param", params);
    conj->add_option("--by", by)->required();

    auto* cchk = app.add_subcommand("conj-check", "test whether --by conjugates --map to --map2");
    cchk->add_option("--map", map_text)->required();
    cchk->add_option("--map2", map2_text)->required();
    cchk->add_option("--param", params);
    cchk->add_option("--by", by)->required();

    auto* cls = app.add_subcommand("classify", "named preperiodic graph of a family member");
    cls->add_option("--family", family)->required();
    cls->add_option("--param", params);
    cls->add_option("--locus", locus, "parametrized locus instead of --param");
    cls->add_option("--t", t_text, "locus parameter");

    auto* census = app.add_subcommand("census", "preperiodic graphs over a parameter list");
    census->add_option("--family", family)->required();
    census->add_option("--params-file", params_file)->required()->check(CLI::ExistingFile);
    census->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    census->add_option("--out", out_path, "write records here");
    census->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    auto* fams = app.add_subcommand("families", "family catalog");
    auto* fams_list = fams->add_subcommand("list", "list the families");
    fams->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        GraphConfig cfg;
        cfg.prime_count = primes ? primes : env_primes();
        cfg.cap = cap;
        auto b = bindings(params);

        if (sigma->parsed()) {
            auto pm = parse_map_any(map_text, b, true);
            if (pm.rational)
                print_sigma(*pm.rational, n, formal, "");
            else
                print_sigma(*pm.generic, n, formal, pm.param);
        } else if (dyn->parsed()) {
            auto pm = parse_map_any(map_text, b, true);
            if (pm.rational)
                print_dynatomic(*pm.rational, n, m, "");
            else
                print_dynatomic(*pm.generic, n, m, pm.param);
        } else if (graph->parsed()) {
            auto g = build_preperiodic_graph(parse_map(map_text, b), cfg);
            if (format == "key")
                std::cout << canonical_key(g) << "\n";
            else
                std::cout << export_graph(g, format.empty() ? "json" : format);
        } else if (aut->parsed()) {
            auto f = parse_map(map_text, b);
            for (const auto& c : checks) {
                auto a = parse_mobius(c);
                std::cout << "check " << to_str(a) << ": " << yes(is_automorphism(f, a)) << "\n";
            }
            if (checks.empty() || aut->count("--height")) {
                auto rep = rational_automorphisms(f, height);
                std::cout << "order: " << rep.order << "\n";
                for (const auto& g : rep.rational_group) std::cout << to_str(g) << "\n";
            }
        } else if (conj->parsed()) {
            auto f = parse_map(map_text, b);
            auto a = parse_mobius(by);
            if (mobius_is_rational(a))
                std::cout << map_str(dyn_conjugate(f, mobius_to_q(a))) << "\n";
            else
                std::cout << map_str(dyn_conjugate(f.cast<NF>(), a)) << "\n";
        } else if (cchk->parsed()) {
            auto f = parse_map(map_text, b);
            auto g = parse_map(map2_text, b);
            std::cout << "conjugate: " << yes(is_conjugate_by(f, g, parse_mobius(by))) << "\n";
        } else if (cls->parsed()) {
            std::vector<Q> p;
            const auto& fam = family_spec(family);
            if (!locus.empty()) {
                if (t_text.empty()) throw CLI::ValidationError("--t", "required with --locus");
                p = locus_parameterize(family, locus, eval_q(t_text, {}));
            } else {
                for (const auto& name : fam.params) {
                    auto it = b.find(name);
                    if (it == b.end()) throw UnboundSymbol("'" + name + "' has no value (use --param " + name + "=...)");
                    p.push_back(it->second);
                }
            }
            auto g = build_preperiodic_graph(family_make(family, p), family_config(fam, cfg));
            std::cout << "params: " << params_str(p) << "\n";
            std::cout << "graph: " << classify_graph(fam, g) << "\n";
            std::cout << "key: " << canonical_key(g) << "\n";
        } else if (census->parsed()) {
            std::ifstream in(params_file);
            if (!in) throw CLI::ValidationError("--params-file", "cannot read " + params_file);
            auto list = read_params_tsv(in);
            auto r = run_census(family, list, cfg, jobs);
            std::string body = format == "json" ? census_json(r) : census_tsv(r);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw CLI::ValidationError("--out", "cannot write " + out_path);
                out << body;
            }
            int ok = 0;
            std::map<std::string, std::vector<std::string>> by_key;
            for (const auto& rec : r.records) {
                if (!rec.ok) {
                    std::cerr << "warning: " << params_str(rec.params) << ": " << rec.error << "\n";
                    continue;
                }
                ++ok;
                by_key[rec.key].push_back(params_str(rec.params));
            }
            std::cout << "tuples: " << list.size() << "\n";
            std::cout << "distinct: " << r.distinct << "\n";
            if (r.distinct != ok) {
                std::cout << "note: " << ok - r.distinct << " tuple(s) repeat an earlier graph\n";
                for (const auto& [key, ps] : by_key)
                    if (ps.size() > 1) {
                        std::cout << "  same graph:";
                        for (const auto& s : ps) std::cout << " " << s;
                        std::cout << "\n";
                    }
            }
        } else if (fams_list->parsed()) {
            for (const auto& f : family_catalog()) {
                std::string ps;
                for (const auto& p : f.params) ps += (ps.empty() ? "" : ",") + p;
                std::cout << f.id << "\t" << f.map << "\t" << (ps.empty() ? "-" : ps) << "\t" << f.group << "\t"
                          << f.group_order << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
