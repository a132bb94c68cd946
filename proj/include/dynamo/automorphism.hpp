#pragma once

#include "dynamo/dynsys.hpp"
#include "dynamo/numfield.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dynamo {

struct AutReport {
    std::string map;
    std::vector<std::pair<Mobius<NF>, bool>> checked;
    std::vector<Mobius<Q>> rational_group; // normalized, sorted by height then entries
    int order = 0;
};

bool is_automorphism(const QDyn& f, const Mobius<Q>& a);
bool is_automorphism(const QDyn& f, const Mobius<NF>& a);

// Exhaustive search over integer matrices with entries bounded by H.
AutReport rational_automorphisms(const QDyn& f, int height = 2);

// Closure of gens mod scalars, capped at expected_order elements.
std::vector<Mobius<NF>> group_closure(const std::vector<Mobius<NF>>& gens, int limit);
bool verify_group_table(const QDyn& f, const std::vector<Mobius<NF>>& gens, int expected_order);

bool is_conjugate_by(const QDyn& f, const QDyn& g, const Mobius<Q>& a);
bool is_conjugate_by(const QDyn& f, const QDyn& g, const Mobius<NF>& a);

// True when some sigma^(n), n in ns, differs: f and g are then not conjugate.
bool sigma_separates(const QDyn& f, const QDyn& g, const std::vector<int>& ns);

} // namespace dynamo
