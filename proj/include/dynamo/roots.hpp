#pragma once

#include "dynamo/poly.hpp"

#include <vector>

namespace dynamo {

struct RationalRoot {
    Q value;
    int multiplicity;
};

// All rational roots of a nonzero polynomial, ascending, with multiplicity.
std::vector<RationalRoot> rational_roots_mult(const ZPoly& p);
std::vector<RationalRoot> rational_roots_mult(const QPoly& p);

// Distinct rational roots, ascending.
std::vector<Q> rational_roots(const QPoly& p);
std::vector<Q> rational_roots(const ZPoly& p);

} // namespace dynamo
