#include "dynamo/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynamo {

int moebius(long n) {
    if (n < 1) throw std::domain_error("moebius of non-positive integer");
    int m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

static const unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool is_prime(const Z& n0) {
    Z n = abs(n0);
    if (n < 2) return false;
    for (unsigned b : kBases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    Z d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Z nm1 = n - 1;
    for (unsigned b : kBases) {
        Z x;
        Z base = b;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
static Z rho(const Z& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Z y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](const Z& v) { return Z((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Z t = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

static void factor_rec(const Z& n, std::vector<Z>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Z d = rho(n);
    factor_rec(d, out);
    factor_rec(Z(n / d), out);
}

std::vector<Z> factor_int(const Z& n0) {
    if (n0 == 0) throw std::domain_error("factor_int(0)");
    Z n = abs(n0);
    std::vector<Z> out;
    for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(Z(p));
            n /= p;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Z> prime_divisors(const Z& n) {
    auto f = factor_int(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

std::vector<uint32_t> primes_below(uint32_t limit) {
    std::vector<bool> comp(limit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = uint64_t(i) * i; j < limit; j += i) comp[j] = true;
    }
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    std::sort(d.begin(), d.end());
    return d;
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

uint64_t mult_order(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("order of zero");
    uint64_t n = p - 1, ord = n;
    for (uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        while (ord % q == 0 && powmod(a, ord / q, p) == 1) ord /= q;
    }
    if (n > 1 && powmod(a, ord / n, p) == 1) ord /= n;
    return ord;
}

uint64_t mod_p(const Z& x, uint64_t p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

uint64_t mod_p(const Q& x, uint64_t p) {
    uint64_t d = mpz_fdiv_ui(x.get_den_mpz_t(), p);
    if (d == 0) throw std::domain_error("denominator divisible by p");
    return mpz_fdiv_ui(x.get_num_mpz_t(), p) * invmod(d, p) % p;
}

} // namespace dynamo
