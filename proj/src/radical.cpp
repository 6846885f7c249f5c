#include "sombor/radical.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

namespace sombor {

namespace {

std::int64_t isqrt64(std::int64_t m) {
    auto sq = [](std::int64_t x) {
        return static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(x);
    };
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    while (s > 0 && sq(s) > static_cast<unsigned __int128>(m)) --s;
    while (sq(s + 1) <= static_cast<unsigned __int128>(m)) ++s;
    return s;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    if (p > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
        throw Error("radicand product exceeds the supported 64-bit range");
    return static_cast<std::int64_t>(p);
}

} // namespace

SquareFreeParts square_free_decompose(std::int64_t n) {
    if (n < 1) throw Error("square-free decomposition needs a positive integer");
    std::int64_t root = 1, rad = 1, m = n;
    // After stripping every divisor d with d^3 <= m, the remainder has at most
    // two prime factors, so it is square-free unless it is a perfect square.
    for (std::int64_t d = 2; d * d * d <= m; ++d) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) root = checked_mul(root, d);
        if (e % 2) rad = checked_mul(rad, d);
    }
    std::int64_t s = isqrt64(m);
    if (s * s == m)
        root = checked_mul(root, s);
    else
        rad = checked_mul(rad, m);
    return {root, rad};
}

void RadicalNumber::insert_term(std::int64_t radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RadicalNumber RadicalNumber::from_rational(Rational r) {
    RadicalNumber out;
    out.insert_term(1, r);
    return out;
}

RadicalNumber RadicalNumber::term(const Rational& coeff, std::int64_t radicand) {
    if (radicand < 1) throw Error("radicand must be a positive integer");
    auto parts = square_free_decompose(radicand);
    RadicalNumber out;
    out.insert_term(parts.radicand, coeff * Rational(parts.root));
    return out;
}

RadicalNumber RadicalNumber::sqrt_of(const Rational& r) {
    if (r < 0) throw NegativeSqrt("square root of negative rational " + render_rational(r));
    if (r == 0) return RadicalNumber{};
    BigInt nd = numerator(r) * denominator(r);
    if (nd > std::numeric_limits<std::int64_t>::max())
        throw Error("sqrt radicand too large for exact decomposition "
                    "(numerator*denominator must fit in 64 bits)");
    auto parts = square_free_decompose(nd.convert_to<std::int64_t>());
    RadicalNumber out;
    out.insert_term(parts.radicand, Rational(BigInt(parts.root), denominator(r)));
    return out;
}

RadicalNumber RadicalNumber::operator-() const {
    RadicalNumber out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& rhs) {
    for (const auto& [k, c] : rhs.terms_) insert_term(k, c);
    return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& rhs) {
    for (const auto& [k, c] : rhs.terms_) insert_term(k, -c);
    return *this;
}

RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b) {
    RadicalNumber out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // sqrt(ka)*sqrt(kb) = g*sqrt((ka/g)*(kb/g)) with g = gcd: the two
            // cofactors are coprime and square-free, so the product key is
            // square-free with no factoring needed.
            std::int64_t g = std::gcd(ka, kb);
            std::int64_t key = checked_mul(ka / g, kb / g);
            out.insert_term(key, ca * cb * Rational(g));
        }
    }
    return out;
}

RadicalNumber RadicalNumber::divided_by(const Rational& r) const {
    if (r == 0) throw DivisionByZero();
    RadicalNumber out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c / r);
    return out;
}

RadicalNumber RadicalNumber::pow(unsigned exponent) const {
    RadicalNumber result = from_int(1);
    RadicalNumber base = *this;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

bool RadicalNumber::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalNumber::rational_value() const {
    if (!is_rational()) throw Error("value is irrational: " + render());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational RadicalNumber::coefficient(std::int64_t radicand) const {
    auto it = terms_.find(radicand);
    return it == terms_.end() ? Rational(0) : it->second;
}

double RadicalNumber::to_double() const {
    double sum = 0.0; // ascending radicand: map order fixes the evaluation order
    for (const auto& [k, c] : terms_)
        sum += sombor::to_double(c) * (k == 1 ? 1.0 : std::sqrt(static_cast<double>(k)));
    return sum;
}

NumericValue nv_exact(RadicalNumber v) {
    NumericValue r;
    r.approx = v.to_double();
    r.exact = std::move(v);
    return r;
}

NumericValue nv_real(double v) {
    NumericValue r;
    r.approx = v;
    return r;
}

NumericValue nv_add(const NumericValue& a, const NumericValue& b) {
    if (a.exact && b.exact) return nv_exact(*a.exact + *b.exact);
    return nv_real(a.approx + b.approx);
}

NumericValue nv_sub(const NumericValue& a, const NumericValue& b) {
    if (a.exact && b.exact) return nv_exact(*a.exact - *b.exact);
    return nv_real(a.approx - b.approx);
}

NumericValue nv_neg(const NumericValue& a) {
    if (a.exact) return nv_exact(-*a.exact);
    return nv_real(-a.approx);
}

NumericValue nv_mul(const NumericValue& a, const NumericValue& b) {
    if (a.exact && b.exact) return nv_exact(*a.exact * *b.exact);
    return nv_real(a.approx * b.approx);
}

NumericValue nv_div(const NumericValue& a, const NumericValue& b) {
    if (b.exact) {
        if (b.exact->is_zero()) throw DivisionByZero();
        if (b.exact->is_rational()) {
            const Rational d = b.exact->rational_value();
            if (a.exact) return nv_exact(a.exact->divided_by(d));
            return nv_real(a.approx / to_double(d));
        }
        return nv_real(a.approx / b.approx); // irrational divisor: leave the ring
    }
    if (b.approx == 0.0) throw DivisionByZero();
    return nv_real(a.approx / b.approx);
}

NumericValue nv_sqrt(const NumericValue& a) {
    if (a.exact) {
        if (a.exact->is_rational()) return nv_exact(RadicalNumber::sqrt_of(a.exact->rational_value()));
        // fall through: sqrt of a radical sum is not representable here
    }
    if (a.approx < 0.0) throw NegativeSqrt("square root of negative value");
    return nv_real(std::sqrt(a.approx));
}

NumericValue nv_pow(const NumericValue& a, long long e) {
    if (e >= 0) {
        if (a.exact) return nv_exact(a.exact->pow(static_cast<unsigned>(e)));
        return nv_real(std::pow(a.approx, static_cast<double>(e)));
    }
    if (a.exact && a.exact->is_rational()) {
        const Rational base = a.exact->rational_value();
        if (base == 0) throw DivisionByZero();
        Rational inv = Rational(1) / base;
        RadicalNumber r = RadicalNumber::from_rational(inv);
        return nv_exact(r.pow(static_cast<unsigned>(-e)));
    }
    if (a.approx == 0.0) throw DivisionByZero();
    return nv_real(std::pow(a.approx, static_cast<double>(e)));
}

NumericValue nv_scale(const NumericValue& a, const Rational& c) {
    if (a.exact) return nv_exact(*a.exact * RadicalNumber::from_rational(c));
    return nv_real(a.approx * to_double(c));
}

std::string RadicalNumber::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 1) {
            os << render_rational(mag);
        } else if (mag == 1) {
            os << "sqrt(" << k << ")";
        } else {
            os << render_rational(mag) << "*sqrt(" << k << ")";
        }
    }
    return os.str();
}

} // namespace sombor
