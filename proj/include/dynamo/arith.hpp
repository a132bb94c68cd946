#pragma once

#include "dynamo/rational.hpp"

#include <cstdint>
#include <vector>

namespace dynamo {

int moebius(long n);

// Miller-Rabin with the first 13 prime bases: deterministic below 3.3e24;
// above that the same bases give a strong probable-prime test.
bool is_prime(const Z& n);

// Prime factorization of |n| with multiplicity, ascending.
std::vector<Z> factor_int(const Z& n);

// Distinct prime divisors of |n|, ascending.
std::vector<Z> prime_divisors(const Z& n);

// Primes below limit.
std::vector<uint32_t> primes_below(uint32_t limit);

// Positive divisors of n >= 1 (ascending).
std::vector<long> divisors(long n);

// Modular helpers for primes below 2^31.
uint64_t powmod(uint64_t b, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t p); // p prime, a != 0
uint64_t mult_order(uint64_t a, uint64_t p);
uint64_t mod_p(const Z& x, uint64_t p);
// x mod p for a rational with denominator prime to p
uint64_t mod_p(const Q& x, uint64_t p);

} // namespace dynamo
