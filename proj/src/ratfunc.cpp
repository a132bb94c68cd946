#include "dynamo/ratfunc.hpp"

namespace dynamo {

RF::RF(const ParamPoly& n, const ParamPoly& d) : num_(n), den_(d) {
    if (d.zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RF::normalize() {
    if (num_.zero()) {
        den_ = QPoly::constant(Q(1));
        return;
    }
    if (den_.degree() > 0) {
        QPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Q l = den_.lc();
    if (l != 1) {
        Q inv = Q(1) / l;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Q RF::constant_value() const { return num_.zero() ? Q(0) : num_.c[0] / den_.c[0]; }

RF RF::operator-() const {
    RF r = *this;
    r.num_ = -r.num_;
    return r;
}

RF& RF::operator+=(const RF& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RF& RF::operator-=(const RF& o) { return *this += -o; }

RF& RF::operator*=(const RF& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RF& RF::operator/=(const RF& o) {
    if (o.num_.zero()) throw std::domain_error("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

Q RF::at(const Q& a) const {
    Q d = eval(den_, a);
    if (is_zero(d)) throw std::domain_error("pole of rational function");
    return eval(num_, a) / d;
}

std::string rf_str(const RF& x, const std::string& var) {
    std::string n = poly_str(x.num(), var);
    if (x.den().degree() == 0 && x.den().c[0] == 1) return n;
    if (x.den().degree() == 0) {
        // constant denominator: fold into the numerator coefficients
        return poly_str(x.num().scaled(Q(1) / x.den().c[0]), var);
    }
    return "(" + n + ")/(" + poly_str(x.den(), var) + ")";
}

} // namespace dynamo
