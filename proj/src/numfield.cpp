#include "dynamo/numfield.hpp"

#include "dynamo/errors.hpp"

namespace dynamo {

namespace {
const ModulusInfo kCatalog[] = {
    {"", "", 0, 0},
    {"i", "x^2+1", 0, -1},
    {"zeta3", "x^2+x+1", -1, -1},
    {"sqrt3", "x^2-3", 0, 3},
};
} // namespace

const ModulusInfo& modulus_info(Modulus m) { return kCatalog[static_cast<int>(m)]; }

Modulus modulus_from_id(const std::string& id) {
    for (int k = 1; k <= 3; ++k)
        if (id == kCatalog[k].id) return static_cast<Modulus>(k);
    throw UnsupportedRing("modulus '" + id + "' is not in the catalog {i, zeta3, sqrt3}");
}

NF::NF(const Q& c0, const Q& c1, Modulus m) : c0_(c0), c1_(c1), mod_(m) {
    if (m == Modulus::None && sgn(c1) != 0) throw UnsupportedRing("irrational part without modulus");
}

Modulus NF::join(Modulus a, Modulus b) {
    if (a == Modulus::None) return b;
    if (b == Modulus::None || a == b) return a;
    throw RingMismatch(std::string("cannot combine ") + modulus_info(a).id + " and " + modulus_info(b).id);
}

NF& NF::operator+=(const NF& o) {
    mod_ = join(mod_, o.mod_);
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
}

NF& NF::operator-=(const NF& o) {
    mod_ = join(mod_, o.mod_);
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
}

NF& NF::operator*=(const NF& o) {
    mod_ = join(mod_, o.mod_);
    const auto& mi = modulus_info(mod_);
    Q hi = c1_ * o.c1_;
    Q n0 = c0_ * o.c0_ + mi.q * hi;
    Q n1 = c0_ * o.c1_ + c1_ * o.c0_ + mi.p * hi;
    c0_ = n0;
    c1_ = n1;
    return *this;
}

NF NF::inverse() const {
    if (is_zero(*this)) throw std::domain_error("division by zero in number ring");
    if (sgn(c1_) == 0) return NF(Q(1) / c0_, Q(0), mod_);
    const auto& mi = modulus_info(mod_);
    // (c0 + c1 t)(b0 + b1 t) = 1 with t^2 = p t + q
    Q det = c0_ * (c0_ + mi.p * c1_) - mi.q * c1_ * c1_;
    Q b0 = (c0_ + mi.p * c1_) / det;
    Q b1 = -c1_ / det;
    return NF(b0, b1, mod_);
}

NF& NF::operator/=(const NF& o) {
    NF inv = o.inverse();
    return *this *= inv;
}

std::string to_str(const NF& x) {
    if (x.is_rational()) return to_str(x.c0());
    std::string g = modulus_info(x.modulus()).id;
    std::string s;
    if (sgn(x.c0()) != 0) s = to_str(x.c0());
    Q c1 = x.c1();
    if (!s.empty()) s += sgn(c1) < 0 ? "-" : "+";
    else if (sgn(c1) < 0) s += "-";
    Q a = abs(c1);
    if (a != 1) s += to_str(a) + "*";
    s += g;
    return s;
}

} // namespace dynamo
