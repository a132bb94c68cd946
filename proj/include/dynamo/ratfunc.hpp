#pragma once

#include "dynamo/poly.hpp"

#include <string>

namespace dynamo {

// A ParamPoly is a QPoly in the family parameter.
using ParamPoly = QPoly;

// Element of Q(a): num/den in lowest terms with monic denominator.
class RF {
public:
    RF() : den_(QPoly::constant(Q(1))) {}
    RF(int v) : num_(QPoly::constant(Q(v))), den_(QPoly::constant(Q(1))) {}
    RF(const Q& v) : num_(QPoly::constant(v)), den_(QPoly::constant(Q(1))) {}
    RF(const ParamPoly& p) : num_(p), den_(QPoly::constant(Q(1))) {}
    RF(const ParamPoly& n, const ParamPoly& d);

    static RF param() { return RF(ParamPoly::var()); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Q constant_value() const; // requires is_constant()

    RF operator-() const;
    RF& operator+=(const RF& o);
    RF& operator-=(const RF& o);
    RF& operator*=(const RF& o);
    RF& operator/=(const RF& o);
    friend RF operator+(RF a, const RF& b) { return a += b; }
    friend RF operator-(RF a, const RF& b) { return a -= b; }
    friend RF operator*(RF a, const RF& b) { return a *= b; }
    friend RF operator/(RF a, const RF& b) { return a /= b; }
    friend bool operator==(const RF& a, const RF& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RF& a, const RF& b) { return !(a == b); }

    // Value at a rational parameter; throws std::domain_error at a pole.
    Q at(const Q& a) const;

private:
    void normalize();
    ParamPoly num_, den_;
};

inline bool is_zero(const RF& x) { return x.num().zero(); }
std::string rf_str(const RF& x, const std::string& var);
inline std::string to_str(const RF& x) { return rf_str(x, "a"); }

} // namespace dynamo
