#pragma once

#include <gmpxx.h>

#include <string>

namespace dynamo {

using Z = mpz_class;
using Q = mpq_class;

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
inline bool is_zero(const Z& x) { return sgn(x) == 0; }

Q make_q(const Z& num, const Z& den);

// "p/q", or "p" when the denominator is 1.
std::string to_str(const Q& x);
inline std::string to_str(const Z& x) { return x.get_str(); }

// Accepts "p", "-p", "p/q"; throws SyntaxError.
Q parse_q(const std::string& s);

// max(|num|, den)
Z height(const Q& x);

} // namespace dynamo
