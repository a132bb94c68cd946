#include "dynamo/expr.hpp"

#include <cctype>

namespace dynamo {

namespace {

struct Token {
    enum class T { Int, Ident, Op, End } type;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::T::Int, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::T::Ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::T::Op, std::string(1, c), i});
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Token::T::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(lex(s)) {}

    Expr parse() {
        Expr e = expr();
        if (peek().type != Token::T::End) {
            const Token& t = peek();
            if (t.type == Token::T::Op && t.text == ")") throw SyntaxError("unbalanced ')'", t.pos);
            throw SyntaxError("unexpected '" + t.text + "' (implicit multiplication is not allowed)", t.pos);
        }
        return e;
    }

private:
    const Token& peek(size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    bool is_op(const char* op, size_t k = 0) const {
        return peek(k).type == Token::T::Op && peek(k).text == op;
    }
    static Expr node(ExprNode::Kind k, Expr a, Expr b, size_t pos) {
        auto n = std::make_shared<ExprNode>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        n->pos = pos;
        return n;
    }

    Expr expr() {
        Expr e = term();
        while (is_op("+") || is_op("-")) {
            size_t pos = peek().pos;
            bool add = peek().text == "+";
            ++i_;
            e = node(add ? ExprNode::Kind::Add : ExprNode::Kind::Sub, e, term(), pos);
        }
        return e;
    }

    Expr term() {
        Expr e = unary(false);
        while (is_op("*") || is_op("/")) {
            size_t pos = peek().pos;
            bool mul = peek().text == "*";
            ++i_;
            e = node(mul ? ExprNode::Kind::Mul : ExprNode::Kind::Div, e, unary(!mul), pos);
        }
        return e;
    }

    Expr unary(bool after_div) {
        if (is_op("-")) {
            size_t pos = peek().pos;
            ++i_;
            return node(ExprNode::Kind::Neg, unary(after_div), nullptr, pos);
        }
        return factor(after_div);
    }

    Expr factor(bool after_div) {
        Expr b = base(after_div);
        if (is_op("^")) {
            size_t pos = peek().pos;
            ++i_;
            if (peek().type != Token::T::Int) throw SyntaxError("exponent must be an unsigned integer", peek().pos);
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Pow;
            n->a = b;
            n->pos = pos;
            const std::string& t = peek().text;
            if (t.size() > 6) throw SyntaxError("exponent too large", peek().pos);
            n->exp = static_cast<unsigned>(std::stoul(t));
            ++i_;
            if (is_op("^")) throw SyntaxError("chained exponent", peek().pos);
            return n;
        }
        return b;
    }

    Expr base(bool after_div) {
        const Token& t = peek();
        if (t.type == Token::T::Int) {
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Num;
            n->pos = t.pos;
            Z num(t.text);
            ++i_;
            if (!after_div && is_op("/") && peek(1).type == Token::T::Int) {
                Z den(peek(1).text);
                if (den == 0) throw SyntaxError("zero denominator", peek(1).pos);
                i_ += 2;
                n->value = make_q(num, den);
            } else {
                n->value = Q(num);
            }
            return n;
        }
        if (t.type == Token::T::Ident) {
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Sym;
            n->name = t.text;
            n->pos = t.pos;
            ++i_;
            return n;
        }
        if (is_op("(")) {
            ++i_;
            Expr e = expr();
            if (!is_op(")")) throw SyntaxError("expected ')'", peek().pos);
            ++i_;
            return e;
        }
        if (t.type == Token::T::End) throw SyntaxError("unexpected end of input", t.pos);
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->kind == ExprNode::Kind::Sym) out.insert(e->name);
    collect(e->a, out);
    collect(e->b, out);
}

} // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::set<std::string> expr_symbols(const Expr& e) {
    std::set<std::string> s;
    collect(e, s);
    return s;
}

std::string expr_str(const Expr& e) {
    using K = ExprNode::Kind;
    switch (e->kind) {
    case K::Num:
        // parenthesised so that "p/q" is read back as a single literal
        if (sgn(e->value) < 0) return "(-" + expr_str(std::make_shared<ExprNode>(ExprNode{K::Num, -e->value})) + ")";
        if (e->value.get_den() != 1) return "(" + e->value.get_num().get_str() + "/" + e->value.get_den().get_str() + ")";
        return e->value.get_num().get_str();
    case K::Sym: return e->name;
    case K::Add: return "(" + expr_str(e->a) + "+" + expr_str(e->b) + ")";
    case K::Sub: return "(" + expr_str(e->a) + "-" + expr_str(e->b) + ")";
    case K::Mul: return "(" + expr_str(e->a) + "*" + expr_str(e->b) + ")";
    case K::Div: {
        // keep "8/(6)" from reading back as the literal 4/3
        auto bare_int = [](const Expr& x) { return x->kind == K::Num && sgn(x->value) >= 0 && x->value.get_den() == 1; };
        std::string den = expr_str(e->b);
        if (bare_int(e->a) && bare_int(e->b)) den = "(" + den + ")";
        return "(" + expr_str(e->a) + "/" + den + ")";
    }
    case K::Neg: return "(-" + expr_str(e->a) + ")";
    case K::Pow: return "(" + expr_str(e->a) + ")^" + std::to_string(e->exp);
    }
    return "";
}

namespace {

struct QVal {
    Q v;
    QVal(const Q& x) : v(x) {}
    friend QVal operator+(const QVal& a, const QVal& b) { return QVal(a.v + b.v); }
    friend QVal operator-(const QVal& a, const QVal& b) { return QVal(a.v - b.v); }
    friend QVal operator*(const QVal& a, const QVal& b) { return QVal(a.v * b.v); }
    friend QVal operator/(const QVal& a, const QVal& b) {
        if (is_zero(b.v)) throw DegenerateParameter("division by zero");
        return QVal(a.v / b.v);
    }
    QVal operator-() const { return QVal(-v); }
};

} // namespace

Q eval_q(const Expr& e, const std::map<std::string, Q>& bindings) {
    std::function<QVal(const std::string&, size_t)> sym = [&](const std::string& n, size_t pos) {
        auto it = bindings.find(n);
        if (it == bindings.end()) throw UnboundSymbol("'" + n + "' at position " + std::to_string(pos));
        return QVal(it->second);
    };
    return expr_eval<QVal>(e, sym).v;
}

Q eval_q(const std::string& text, const std::map<std::string, Q>& bindings) {
    return eval_q(parse_expr(text), bindings);
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const Q& c) {
    if (!is_zero(c)) t_[Mono{}] = c;
}

MPoly MPoly::var(const std::string& name) {
    MPoly p;
    p.t_[Mono{{name, 1}}] = Q(1);
    return p;
}

std::set<std::string> MPoly::variables() const {
    std::set<std::string> s;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m) s.insert(v);
    return s;
}

void MPoly::add_term(const Mono& m, const Q& c) {
    auto it = t_.find(m);
    if (it == t_.end()) {
        if (!is_zero(c)) t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) t_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            MPoly::Mono m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly operator/(const MPoly& a, const MPoly& b) {
    if (b.t_.size() != 1 || !b.t_.begin()->first.empty())
        throw InexactDivision("polynomial division by a non-constant");
    Q inv = 1 / b.t_.begin()->second;
    MPoly r = a;
    for (auto& [m, c] : r.t_) c *= inv;
    return r;
}

Q MPoly::eval(const std::map<std::string, Q>& values) const {
    Q acc = 0;
    for (const auto& [m, c] : t_) {
        Q term = c;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) throw IndexOutOfRange("no value for '" + v + "'");
            Q p;
            mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
            mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
            term *= p;
        }
        acc += term;
    }
    return acc;
}

MPoly parse_mpoly(const std::string& text) {
    std::function<MPoly(const std::string&, size_t)> sym = [](const std::string& n, size_t) {
        return MPoly::var(n);
    };
    return expr_eval<MPoly>(parse_expr(text), sym);
}

// ---------------------------------------------------------------- maps

namespace {

template <class K>
struct RatFn {
    UniPoly<K> n, d;
    RatFn(const Q& c) : n(UniPoly<K>::constant(K(c))), d(UniPoly<K>::constant(K(1))) {}
    RatFn(UniPoly<K> a, UniPoly<K> b) : n(std::move(a)), d(std::move(b)) {}

    friend RatFn add(const RatFn& x, const RatFn& y, bool sub) {
        UniPoly<K> g = poly_gcd(x.d, y.d);
        UniPoly<K> ax = exact_div(y.d, g), ay = exact_div(x.d, g);
        UniPoly<K> num = sub ? x.n * ax - y.n * ay : x.n * ax + y.n * ay;
        return RatFn(std::move(num), x.d * ax);
    }
    friend RatFn operator+(const RatFn& x, const RatFn& y) { return add(x, y, false); }
    friend RatFn operator-(const RatFn& x, const RatFn& y) { return add(x, y, true); }
    friend RatFn operator*(const RatFn& x, const RatFn& y) { return RatFn(x.n * y.n, x.d * y.d); }
    friend RatFn operator/(const RatFn& x, const RatFn& y) {
        if (y.n.zero()) throw DegenerateMap("division by zero");
        return RatFn(x.n * y.d, x.d * y.n);
    }
    RatFn operator-() const { return RatFn(-n, d); }
};

template <class K>
DynSystem<K> to_dyn(const RatFn<K>& r) {
    if (r.n.zero()) throw DegenerateMap("map is identically zero");
    int d = std::max(r.n.degree(), r.d.degree());
    if (d < 1) throw DegreeMismatch("constant map");
    return DynSystem<K>::from_forms(Homog<K>::homogenize(r.n, d), Homog<K>::homogenize(r.d, d));
}

} // namespace

ParsedMap parse_map_any(const std::string& text, const std::map<std::string, Q>& bindings, bool allow_generic) {
    Expr e = parse_expr(text);
    std::string free;
    for (const auto& s : expr_symbols(e)) {
        if (s == "z" || bindings.count(s)) continue;
        if (!allow_generic || !free.empty()) throw UnboundSymbol("'" + s + "' has no value (use --param " + s + "=...)");
        free = s;
    }
    ParsedMap out;
    if (free.empty()) {
        std::function<RatFn<Q>(const std::string&, size_t)> sym = [&](const std::string& n, size_t) {
            if (n == "z") return RatFn<Q>(QPoly::var(), QPoly::constant(Q(1)));
            return RatFn<Q>(bindings.at(n));
        };
        out.rational = to_dyn(expr_eval<RatFn<Q>>(e, sym));
    } else {
        std::function<RatFn<RF>(const std::string&, size_t)> sym = [&](const std::string& n, size_t) {
            if (n == "z") return RatFn<RF>(UniPoly<RF>::var(), UniPoly<RF>::constant(RF(1)));
            if (n == free) return RatFn<RF>(UniPoly<RF>::constant(RF::param()), UniPoly<RF>::constant(RF(1)));
            return RatFn<RF>(bindings.at(n));
        };
        out.generic = to_dyn(expr_eval<RatFn<RF>>(e, sym));
        out.param = free;
    }
    return out;
}

QDyn parse_map(const std::string& text, const std::map<std::string, Q>& bindings) {
    return *parse_map_any(text, bindings, false).rational;
}

// ---------------------------------------------------------------- Mobius

namespace {

class MobiusParser {
public:
    explicit MobiusParser(const std::string& s) : s_(s) {}

    Mobius<NF> parse() {
        expect('[');
        expect('[');
        NF p = entry();
        expect(',');
        NF q = entry();
        expect(']');
        expect(',');
        expect('[');
        NF r = entry();
        expect(',');
        NF s = entry();
        expect(']');
        expect(']');
        skip();
        if (i_ != s_.size()) throw SyntaxError("trailing characters after matrix", i_);
        Mobius<NF> m(p, q, r, s);
        if (!m.invertible()) throw NonInvertible("matrix has zero determinant");
        return m;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    void expect(char c) {
        skip();
        if (i_ >= s_.size() || s_[i_] != c) throw SyntaxError(std::string("expected '") + c + "'", i_);
        ++i_;
    }
    Q number() {
        skip();
        size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) throw SyntaxError("expected a number", st);
        Z num(s_.substr(st, i_ - st));
        if (i_ < s_.size() && s_[i_] == '/') {
            size_t ds = ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (ds == i_) throw SyntaxError("expected a denominator", ds);
            Z den(s_.substr(ds, i_ - ds));
            if (den == 0) throw SyntaxError("zero denominator", ds);
            return make_q(num, den);
        }
        return Q(num);
    }
    NF entry() {
        NF acc(0);
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
                sign = s_[i_] == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                break;
            }
            Q v = number();
            if (sign < 0) v = -v;
            NF term(v);
            if (i_ < s_.size() && s_[i_] == '@') {
                size_t st = ++i_;
                while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
                Modulus m = modulus_from_id(s_.substr(st, i_ - st));
                term = NF(Q(0), v, m);
            }
            acc += term;
            first = false;
        }
        return acc;
    }

    const std::string& s_;
    size_t i_ = 0;
};

} // namespace

Mobius<NF> parse_mobius(const std::string& text) { return MobiusParser(text).parse(); }

bool mobius_is_rational(const Mobius<NF>& m) {
    return m.p.is_rational() && m.q.is_rational() && m.r.is_rational() && m.s.is_rational();
}

Mobius<Q> mobius_to_q(const Mobius<NF>& m) {
    if (!mobius_is_rational(m)) throw RingMismatch("matrix has entries outside Q");
    return Mobius<Q>(m.p.c0(), m.q.c0(), m.r.c0(), m.s.c0());
}

std::pair<std::string, Q> parse_binding(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw SyntaxError("expected name=value", 0);
    std::string name = text.substr(0, eq);
    Q v = eval_q(text.substr(eq + 1), {});
    return {name, v};
}

} // namespace dynamo
