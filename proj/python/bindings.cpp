#include "dynamo/automorphism.hpp"
#include "dynamo/dynatomic.hpp"
#include "dynamo/expr.hpp"
#include "dynamo/families.hpp"
#include "dynamo/preperiodic.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dynamo;

namespace {

// ints, Fractions and "p/q" strings all go through str()
Q to_q(const py::handle& h) { return eval_q(py::str(h).cast<std::string>(), {}); }

std::map<std::string, Q> to_bindings(const py::dict& d) {
    std::map<std::string, Q> b;
    for (auto [k, v] : d) b[k.cast<std::string>()] = to_q(v);
    return b;
}

std::vector<Q> to_params(const py::sequence& s) {
    std::vector<Q> out;
    for (auto x : s) out.push_back(to_q(x));
    return out;
}

std::vector<std::string> strs(const std::vector<Q>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_str(x));
    return out;
}

py::dict graph_dict(const PreperGraph& g) {
    py::dict d;
    std::vector<std::string> nodes;
    for (const auto& p : g.nodes) nodes.push_back(to_str(p));
    d["map"] = g.map;
    d["nodes"] = nodes;
    d["next"] = g.next;
    d["cycles"] = g.cycles;
    d["key"] = canonical_key(g);
    return d;
}

} // namespace

PYBIND11_MODULE(dynamo, m) {
    m.doc() = "Exact dynamics of rational maps on the projective line";

    py::register_exception<Error>(m, "DynamoError", PyExc_ValueError);

    m.def(
        "sigma",
        [](const std::string& map, int n, bool formal, const py::dict& params) {
            return strs(sigma_invariants(parse_map(map, to_bindings(params)), n, formal).values);
        },
        py::arg("map"), py::arg("n") = 1, py::arg("formal") = false, py::arg("params") = py::dict());

    m.def(
        "graph",
        [](const std::string& map, const py::dict& params, int cap) {
            GraphConfig cfg;
            cfg.cap = cap;
            return graph_dict(build_preperiodic_graph(parse_map(map, to_bindings(params)), cfg));
        },
        py::arg("map"), py::arg("params") = py::dict(), py::arg("cap") = 0);

    m.def("canonical_key", [](const std::vector<int>& next) { return canonical_key(next); });

    m.def(
        "is_automorphism",
        [](const std::string& map, const std::string& mobius, const py::dict& params) {
            return is_automorphism(parse_map(map, to_bindings(params)), parse_mobius(mobius));
        },
        py::arg("map"), py::arg("mobius"), py::arg("params") = py::dict());

    m.def(
        "conjugate",
        [](const std::string& map, const std::string& mobius) {
            return map_str(dyn_conjugate(parse_map(map), mobius_to_q(parse_mobius(mobius))));
        },
        py::arg("map"), py::arg("mobius"));

    m.def("families", [] {
        std::vector<std::string> ids;
        for (const auto& f : family_catalog()) ids.push_back(f.id);
        return ids;
    });

    m.def(
        "family_map",
        [](const std::string& id, const py::sequence& params) { return map_str(family_make(id, to_params(params))); },
        py::arg("family"), py::arg("params") = py::list());

    m.def(
        "classify",
        [](const std::string& id, const py::sequence& params) { return classify_graph(id, to_params(params)); },
        py::arg("family"), py::arg("params"));

    m.def(
        "locus",
        [](const std::string& id, const std::string& locus, const py::handle& t) {
            return strs(locus_parameterize(id, locus, to_q(t)));
        },
        py::arg("family"), py::arg("locus"), py::arg("t"));

    m.def(
        "census",
        [](const std::string& id, const std::vector<py::sequence>& list, int jobs) {
            std::vector<std::vector<Q>> ps;
            for (const auto& s : list) ps.push_back(to_params(s));
            CensusResult r;
            {
                py::gil_scoped_release nogil;
                r = run_census(id, ps, {}, jobs);
            }
            py::dict d;
            d["family"] = r.family;
            d["distinct"] = r.distinct;
            std::vector<py::dict> recs;
            for (const auto& rec : r.records) {
                py::dict e;
                e["params"] = strs(rec.params);
                if (rec.ok) {
                    e["key"] = rec.key;
                    e["node_count"] = rec.node_count;
                } else {
                    e["error"] = rec.error;
                }
                recs.push_back(e);
            }
            d["records"] = recs;
            return d;
        },
        py::arg("family"), py::arg("params"), py::arg("jobs") = 1);
}
