#pragma once

#include "sombor/radical.hpp"

#include <memory>
#include <string>

namespace sombor {

// Expression tree for an edge-weight function w(du, dv).
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' exponent)*          exponents fold right-associatively
//   atom   := number | 'du' | 'dv' | '(' expr ')' | 'sqrt' '(' expr ')'
//   number := digits ['.' digits]           decimals become exact rationals
//   exponent := ['-'] digits                literal integers only
//
// '^' binds tighter than unary minus, so -du^2 is -(du^2). A negative exponent
// is the reciprocal of the positive power.
struct WeightExpr {
    enum class Kind { number, var_du, var_dv, add, sub, mul, div, neg, sqrt_fn, pow };

    Kind kind;
    Rational value;                          // number
    std::shared_ptr<const WeightExpr> lhs;   // binary ops; sole child of neg/sqrt/pow
    std::shared_ptr<const WeightExpr> rhs;   // binary ops
    long long exponent = 0;                  // pow
};

using WeightExprPtr = std::shared_ptr<const WeightExpr>;

// Throws ParseError (with character position) on malformed input.
WeightExprPtr parse_weight(const std::string& text);

// Exact where the computation stays inside the radical ring; degrades to a
// double otherwise (see NumericValue). DivisionByZero / NegativeSqrt as in the
// value algebra.
NumericValue eval_weight(const WeightExpr& e, long long du, long long dv);

// Parseable text form; render(parse(render(e))) == render(e).
std::string render_weight(const WeightExpr& e);

} // namespace sombor
