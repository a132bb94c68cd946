#pragma once

#include "dynamo/dynsys.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dynamo {

struct GraphConfig {
    int prime_count = 8;
    int cap = 0; // 0: default for the degree
    int depth_cap = 16;
};

// 6 for degree 3 (and other degrees), 4 for degree 4.
int default_cap(int degree);
GraphConfig resolved(const GraphConfig& cfg, int degree);

// Dynamics of the reduction on P^1(F_p). Index p stands for infinity.
struct FpFunctionalGraph {
    uint64_t p = 0;
    std::vector<uint32_t> images;
    std::vector<std::vector<uint32_t>> cycles;
    std::vector<int> cycle_lengths;
    std::vector<uint64_t> cycle_multipliers;
};

FpFunctionalGraph functional_graph_mod_p(const QDyn& f, uint64_t p);

// The first `count` odd primes of good reduction.
std::vector<uint64_t> good_odd_primes(const QDyn& f, int count);

std::set<int> possible_periods(const QDyn& f, int prime_count, int cap);

// Minimal period -> points, each list sorted (finite ascending, then infinity).
std::map<int, std::vector<QPoint>> rational_periodic_points(const QDyn& f, const std::set<int>& periods);

std::vector<QPoint> rational_preimages(const QDyn& f, const QPoint& P);

// Smallest n >= 1 with f^n(P) = P, or 0 if none up to `bound`.
int minimal_period(const QDyn& f, const QPoint& P, int bound);

struct PreperGraph {
    std::string map;
    std::vector<QPoint> nodes;          // sorted by point_less
    std::vector<int> next;              // edge i -> next[i]
    std::vector<int> period;            // minimal period, 0 for tail nodes
    std::vector<int> depth;             // 0 for periodic nodes, distance to the cycle otherwise
    std::vector<std::vector<int>> cycles;
    int prime_count = 0;
    int cap = 0;

    int index_of(const QPoint& P) const; // -1 if absent
    std::multiset<int> cycle_structure() const;
};

PreperGraph build_preperiodic_graph(const QDyn& f, const GraphConfig& cfg = {});

// Assemble a graph from an explicit node set closed under f.
PreperGraph graph_from_points(const QDyn& f, std::vector<QPoint> points);

// Abstract functional graph given by the successor array.
std::string canonical_key(const std::vector<int>& next);
inline std::string canonical_key(const PreperGraph& g) { return canonical_key(g.next); }
bool graph_isomorphic(const PreperGraph& a, const PreperGraph& b);

std::string export_graph(const PreperGraph& g, const std::string& format);

} // namespace dynamo
