#pragma once

#include "dynamo/rational.hpp"

#include <string>

namespace dynamo {

// Closed catalog of quadratic moduli m(x) = x^2 - p*x - q.
enum class Modulus { None = 0, I = 1, Zeta3 = 2, Sqrt3 = 3 };

struct ModulusInfo {
    const char* id;       // catalog id: "i", "zeta3", "sqrt3"
    const char* poly;     // printable modulus
    int p, q;             // theta^2 = p*theta + q
};

const ModulusInfo& modulus_info(Modulus m);
Modulus modulus_from_id(const std::string& id); // throws UnsupportedRing

// Element c0 + c1*theta of Q[x]/(m). Modulus::None marks a plain rational
// (c1 == 0) that adopts the modulus of whatever it is combined with.
class NF {
public:
    NF() = default;
    NF(int v) : c0_(v) {}
    NF(const Q& v) : c0_(v) {}
    NF(const Q& c0, const Q& c1, Modulus m);

    static NF gen(Modulus m) { return NF(Q(0), Q(1), m); }

    const Q& c0() const { return c0_; }
    const Q& c1() const { return c1_; }
    Modulus modulus() const { return mod_; }
    bool is_rational() const { return sgn(c1_) == 0; }

    NF operator-() const { return NF(-c0_, -c1_, mod_); }
    NF& operator+=(const NF& o);
    NF& operator-=(const NF& o);
    NF& operator*=(const NF& o);
    NF& operator/=(const NF& o);
    friend NF operator+(NF a, const NF& b) { return a += b; }
    friend NF operator-(NF a, const NF& b) { return a -= b; }
    friend NF operator*(NF a, const NF& b) { return a *= b; }
    friend NF operator/(NF a, const NF& b) { return a /= b; }
    friend bool operator==(const NF& a, const NF& b) { return a.c0_ == b.c0_ && a.c1_ == b.c1_; }
    friend bool operator!=(const NF& a, const NF& b) { return !(a == b); }

    NF inverse() const;

private:
    static Modulus join(Modulus a, Modulus b);
    Q c0_{0}, c1_{0};
    Modulus mod_ = Modulus::None;
};

inline bool is_zero(const NF& x) { return is_zero(x.c0()) && is_zero(x.c1()); }
std::string to_str(const NF& x);

} // namespace dynamo
