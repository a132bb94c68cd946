#pragma once

// Arithmetic expressions over Q with named symbols.
//
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"/") unary)*
//   unary  := "-" unary | factor
//   factor := base ("^" uint)?
//   base   := rational | ident | "(" expr ")"
//   rational := int ("/" uint)?
//
// A literal "p/q" binds as one rational unless it is itself the right operand
// of a division, so "2/3^2" is 4/9 while "z/2/3" is z/6.

#include "dynamo/dynsys.hpp"
#include "dynamo/numfield.hpp"

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace dynamo {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Num, Sym, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Q value;          // Num
    std::string name; // Sym
    unsigned exp = 0; // Pow
    Expr a, b;
    size_t pos = 0;
};

Expr parse_expr(const std::string& text);
std::set<std::string> expr_symbols(const Expr& e);
// Fully parenthesised text that parses back to the same tree shape.
std::string expr_str(const Expr& e);

template <class V>
V expr_eval(const Expr& e, const std::function<V(const std::string&, size_t)>& sym) {
    using K = ExprNode::Kind;
    switch (e->kind) {
    case K::Num: return V(e->value);
    case K::Sym: return sym(e->name, e->pos);
    case K::Add: return expr_eval<V>(e->a, sym) + expr_eval<V>(e->b, sym);
    case K::Sub: return expr_eval<V>(e->a, sym) - expr_eval<V>(e->b, sym);
    case K::Mul: return expr_eval<V>(e->a, sym) * expr_eval<V>(e->b, sym);
    case K::Div: return expr_eval<V>(e->a, sym) / expr_eval<V>(e->b, sym);
    case K::Neg: return -expr_eval<V>(e->a, sym);
    case K::Pow: {
        V base = expr_eval<V>(e->a, sym);
        V r(Q(1));
        for (unsigned i = 0; i < e->exp; ++i) r = r * base;
        return r;
    }
    }
    throw InvariantViolation("unknown expression node");
}

// Exact value with every symbol bound; UnboundSymbol otherwise, and
// DegenerateParameter on division by zero.
Q eval_q(const Expr& e, const std::map<std::string, Q>& bindings);
Q eval_q(const std::string& text, const std::map<std::string, Q>& bindings);

// ---------------------------------------------------------------- MPoly

// Sparse multivariate polynomial over Q in named variables.
class MPoly {
public:
    using Mono = std::map<std::string, unsigned>;

    MPoly() = default;
    MPoly(const Q& c);
    static MPoly var(const std::string& name);

    const std::map<Mono, Q>& terms() const { return t_; }
    bool zero() const { return t_.empty(); }
    std::set<std::string> variables() const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    // division by a nonzero constant only
    friend MPoly operator/(const MPoly& a, const MPoly& b);

    Q eval(const std::map<std::string, Q>& values) const;

private:
    void add_term(const Mono& m, const Q& c);
    std::map<Mono, Q> t_;
};

MPoly parse_mpoly(const std::string& text);

// ---------------------------------------------------------------- maps

// f(z) as num/den; exactly one of the two is set.
struct ParsedMap {
    std::optional<QDyn> rational;
    std::optional<DynSystem<RF>> generic;
    std::string param; // the free symbol in generic mode
};

// All symbols other than z must be bound, except that with allow_generic one
// free symbol is kept as the parameter of Q(a).
ParsedMap parse_map_any(const std::string& text, const std::map<std::string, Q>& bindings,
                        bool allow_generic = false);
QDyn parse_map(const std::string& text, const std::map<std::string, Q>& bindings = {});

// "[[p,q],[r,s]]"; entries are sums of rationals, each optionally suffixed by
// @i, @zeta3 or @sqrt3 to multiply by that generator.
Mobius<NF> parse_mobius(const std::string& text);
bool mobius_is_rational(const Mobius<NF>& m);
Mobius<Q> mobius_to_q(const Mobius<NF>& m);

// "name=value" pairs
std::pair<std::string, Q> parse_binding(const std::string& text);

} // namespace dynamo
