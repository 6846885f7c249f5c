#include "sombor/dsl.hpp"

#include "sombor/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>
#include <vector>

namespace sombor {

namespace {

constexpr long long kMaxExponent = 1LL << 20;

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    Rational num;
    std::string text;
    std::size_t pos = 0;
};

[[noreturn]] void fail(const std::string& msg, std::size_t pos) {
    throw ParseError("position " + std::to_string(pos) + ": " + msg, pos);
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt whole = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                whole = whole * 10 + (s[i] - '0');
                ++i;
            }
            Rational value(whole);
            if (i < s.size() && s[i] == '.') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    fail("expected digits after decimal point", i);
                BigInt frac = 0, scale = 1;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    frac = frac * 10 + (s[i] - '0');
                    scale *= 10;
                    ++i;
                }
                value += Rational(frac, scale); // decimals are exact rationals
            }
            out.push_back({Tok::number, value, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::ident, 0, s.substr(start, i - start), start});
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        default: fail(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, 0, s.substr(i, 1), i});
        ++i;
    }
    out.push_back({Tok::end, 0, "", s.size()});
    return out;
}

WeightExprPtr make(WeightExpr::Kind k, WeightExprPtr l = nullptr, WeightExprPtr r = nullptr) {
    auto e = std::make_shared<WeightExpr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    WeightExprPtr run() {
        WeightExprPtr e = expr();
        if (peek().kind != Tok::end) fail("unexpected trailing input '" + peek().text + "'", peek().pos);
        return e;
    }

  private:
    const Token& peek() const { return toks_[idx_]; }
    Token next() { return toks_[idx_++]; }

    bool accept(Tok k) {
        if (peek().kind == k) {
            ++idx_;
            return true;
        }
        return false;
    }

    void expect(Tok k, const char* what) {
        if (!accept(k)) fail(std::string("expected ") + what + ", got '" +
                                 (peek().kind == Tok::end ? "end of input" : peek().text) + "'",
                             peek().pos);
    }

    WeightExprPtr expr() {
        WeightExprPtr e = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool add = next().kind == Tok::plus;
            e = make(add ? WeightExpr::Kind::add : WeightExpr::Kind::sub, e, term());
        }
        return e;
    }

    WeightExprPtr term() {
        WeightExprPtr e = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const bool mul = next().kind == Tok::star;
            e = make(mul ? WeightExpr::Kind::mul : WeightExpr::Kind::div, e, factor());
        }
        return e;
    }

    WeightExprPtr factor() {
        if (accept(Tok::minus)) return make(WeightExpr::Kind::neg, factor());
        return power();
    }

    WeightExprPtr power() {
        WeightExprPtr base = atom();
        std::vector<long long> exps;
        while (accept(Tok::caret)) exps.push_back(exponent_literal());
        if (exps.empty()) return base;
        // A chain a^b^c folds right-associatively over the literals.
        long long folded = exps.back();
        for (std::size_t k = exps.size() - 1; k-- > 0;) folded = ipow(exps[k], folded);
        auto e = std::make_shared<WeightExpr>();
        e->kind = WeightExpr::Kind::pow;
        e->lhs = std::move(base);
        e->exponent = folded;
        return e;
    }

    long long exponent_literal() {
        const bool negative = accept(Tok::minus);
        const Token t = peek();
        if (t.kind != Tok::number || !is_integer(t.num))
            fail("exponent must be an integer literal", t.pos);
        ++idx_;
        const BigInt mag = numerator(t.num);
        if (mag > kMaxExponent) fail("exponent magnitude exceeds 2^20", t.pos);
        const long long v = mag.convert_to<long long>();
        return negative ? -v : v;
    }

    long long ipow(long long b, long long e) const {
        if (e < 0) fail("negative exponent inside a power chain", peek().pos);
        long long r = 1;
        for (long long k = 0; k < e; ++k) {
            r *= b;
            if (r > kMaxExponent || r < -kMaxExponent)
                fail("exponent magnitude exceeds 2^20", peek().pos);
        }
        return r;
    }

    WeightExprPtr atom() {
        const Token t = peek();
        switch (t.kind) {
        case Tok::number: {
            ++idx_;
            auto e = std::make_shared<WeightExpr>();
            e->kind = WeightExpr::Kind::number;
            e->value = t.num;
            return e;
        }
        case Tok::ident: {
            ++idx_;
            if (t.text == "du") return make(WeightExpr::Kind::var_du);
            if (t.text == "dv") return make(WeightExpr::Kind::var_dv);
            if (t.text == "sqrt") {
                expect(Tok::lparen, "'(' after sqrt");
                WeightExprPtr inner = expr();
                expect(Tok::rparen, "')'");
                return make(WeightExpr::Kind::sqrt_fn, inner);
            }
            fail("unknown identifier '" + t.text + "' (expected du, dv, or sqrt)", t.pos);
        }
        case Tok::lparen: {
            ++idx_;
            WeightExprPtr inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        case Tok::end:
            fail("unexpected end of input", t.pos);
        default:
            fail("unexpected token '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

} // namespace

WeightExprPtr parse_weight(const std::string& text) { return Parser(lex(text)).run(); }

NumericValue eval_weight(const WeightExpr& e, long long du, long long dv) {
    using K = WeightExpr::Kind;
    switch (e.kind) {
    case K::number: return nv_exact(RadicalNumber::from_rational(e.value));
    case K::var_du: return nv_exact(RadicalNumber::from_int(du));
    case K::var_dv: return nv_exact(RadicalNumber::from_int(dv));
    case K::add: return nv_add(eval_weight(*e.lhs, du, dv), eval_weight(*e.rhs, du, dv));
    case K::sub: return nv_sub(eval_weight(*e.lhs, du, dv), eval_weight(*e.rhs, du, dv));
    case K::mul: return nv_mul(eval_weight(*e.lhs, du, dv), eval_weight(*e.rhs, du, dv));
    case K::div: return nv_div(eval_weight(*e.lhs, du, dv), eval_weight(*e.rhs, du, dv));
    case K::neg: return nv_neg(eval_weight(*e.lhs, du, dv));
    case K::sqrt_fn: return nv_sqrt(eval_weight(*e.lhs, du, dv));
    case K::pow: return nv_pow(eval_weight(*e.lhs, du, dv), e.exponent);
    }
    throw Error("unreachable weight expression kind");
}

namespace {

// Precedence levels for the renderer: 1 add/sub, 2 mul/div, 3 unary minus,
// 4 pow, 5 self-delimiting atoms. A child is parenthesized when its level is
// below what its position requires.
int level_of(const WeightExpr& e) {
    using K = WeightExpr::Kind;
    switch (e.kind) {
    case K::add:
    case K::sub: return 1;
    case K::mul:
    case K::div: return 2;
    case K::neg: return 3;
    case K::pow: return 4;
    case K::number:
        if (e.value < 0) return 3;            // "-3" binds like unary minus
        if (!is_integer(e.value)) return 2;   // "3/4" reparses as a division
        return 5;
    default: return 5;
    }
}

std::string rend(const WeightExpr& e, int min_level) {
    using K = WeightExpr::Kind;
    std::string body;
    switch (e.kind) {
    case K::number: body = render_rational(e.value); break;
    case K::var_du: body = "du"; break;
    case K::var_dv: body = "dv"; break;
    case K::add: body = rend(*e.lhs, 1) + " + " + rend(*e.rhs, 1); break;
    case K::sub: body = rend(*e.lhs, 1) + " - " + rend(*e.rhs, 2); break;
    case K::mul: body = rend(*e.lhs, 2) + "*" + rend(*e.rhs, 2); break;
    case K::div: body = rend(*e.lhs, 2) + "/" + rend(*e.rhs, 3); break;
    case K::neg: body = "-" + rend(*e.lhs, 3); break;
    case K::sqrt_fn: body = "sqrt(" + rend(*e.lhs, 0) + ")"; break;
    case K::pow: body = rend(*e.lhs, 5) + "^" + std::to_string(e.exponent); break;
    }
    if (level_of(e) < min_level) return "(" + body + ")";
    return body;
}

} // namespace

std::string render_weight(const WeightExpr& e) { return rend(e, 0); }

} // namespace sombor
