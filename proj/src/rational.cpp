#include "dynamo/rational.hpp"

#include "dynamo/errors.hpp"

#include <cctype>

namespace dynamo {

Q make_q(const Z& num, const Z& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Q r(num, den);
    r.canonicalize();
    return r;
}

std::string to_str(const Q& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

static Z parse_int(const std::string& s, size_t& i, bool allow_sign) {
    size_t start = i;
    std::string digits;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
        if (s[i] == '-') digits.push_back('-');
        ++i;
    }
    size_t d0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (i == d0) throw SyntaxError("expected digits in rational '" + s + "'", start);
    return Z(digits);
}

Q parse_q(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    size_t i = 0;
    Z num = parse_int(s, i, true);
    Z den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = parse_int(s, i, false);
        if (den == 0) throw SyntaxError("zero denominator in '" + raw + "'", i);
    }
    if (i != s.size()) throw SyntaxError("trailing characters in rational '" + raw + "'", i);
    return make_q(num, den);
}

Z height(const Q& x) {
    Z n = abs(x.get_num());
    return n > x.get_den() ? n : Z(x.get_den());
}

} // namespace dynamo
