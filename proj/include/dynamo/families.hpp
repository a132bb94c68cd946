#pragma once

#include "dynamo/dynsys.hpp"
#include "dynamo/preperiodic.hpp"

#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dynamo {

// sigma_index^(n) as a rational expression in the family parameters
struct SigmaForm {
    int n;
    bool formal;
    int index;
    std::string expr;
};

struct FormulaTable {
    std::string family;
    std::vector<SigmaForm> forms;
    // vanish identically; variables sI = sigma_I^(1), uI = sigma_I^(2), and parameters
    std::vector<std::string> relations;
};

struct DrawnGraph {
    std::string family;
    std::string params; // "(p1,p2,...)"
    std::vector<int> next;
};

struct AutGenerator {
    std::string label;
    std::string matrix; // Mobius syntax
};

struct GraphTemplate {
    std::string name;
    std::vector<int> next;
    std::string note;
};

struct Locus {
    std::string name;
    std::string expr; // in t, one entry per family parameter
    std::vector<Q> excluded;
    std::string tmpl;
};

struct FamilySpec {
    std::string id;
    std::string map; // expression in z and the parameters
    int degree = 0;
    std::vector<std::string> params;
    std::vector<std::string> nonzero; // each must not vanish
    std::string group;                // group generated by the shipped generators
    int group_order = 1;
    std::vector<AutGenerator> generators;
    std::vector<GraphTemplate> templates;
    std::vector<Locus> loci;
    std::vector<SigmaForm> forms;
    std::vector<std::string> relations;
    int census_cap = 0; // period cap when the config leaves it at 0; 0 keeps the degree default
};

const std::vector<FamilySpec>& family_catalog();
const FamilySpec& family_spec(const std::string& id);
const std::vector<DrawnGraph>& census_shapes();

QDyn family_make(const std::string& id, const std::vector<Q>& params);
GraphConfig family_config(const FamilySpec& fam, const GraphConfig& cfg);
std::map<std::string, Q> family_bindings(const FamilySpec& fam, const std::vector<Q>& params);

std::vector<Q> locus_parameterize(const std::string& id, const std::string& locus, const Q& t);

// Template name, census-table label for multi-parameter families, or "unrecognized".
std::string classify_graph(const std::string& id, const std::vector<Q>& params, const GraphConfig& cfg = {});
std::string classify_graph(const FamilySpec& fam, const PreperGraph& g);

struct CensusRecord {
    std::vector<Q> params;
    bool ok = false;
    std::string error;
    std::string key;
    int node_count = 0;
    std::multiset<int> cycle_structure;
};

struct CensusResult {
    std::string family;
    std::vector<CensusRecord> records;
    int distinct = 0;
};

CensusResult run_census(const std::string& id, const std::vector<std::vector<Q>>& params_list,
                        const GraphConfig& cfg = {}, int jobs = 1);
std::vector<std::vector<Q>> read_params_tsv(std::istream& in);
std::string census_tsv(const CensusResult& r);
std::string census_json(const CensusResult& r);
std::string params_str(const std::vector<Q>& params);

// Exact comparison of sigma_invariants(n) with the shipped closed forms and
// parameter relations at every sample.
bool verify_sigma_closed_forms(const std::string& id, int n, const std::vector<std::vector<Q>>& samples);
// Indices of the shipped relations that do not vanish at these parameters.
std::vector<int> failing_relations(const std::string& id, const std::vector<Q>& params);

} // namespace dynamo
