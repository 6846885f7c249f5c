#pragma once

#include "sombor/errors.hpp"
#include "sombor/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace sombor {

// Exact element of the Q-vector space spanned by sqrt(k) over square-free k >= 1.
// Stored as radicand -> coefficient; radicand 1 is the rational part. The map is
// kept canonical (square-free keys, no zero coefficients), so equality is just
// map equality and a zero value is an empty map.
class RadicalNumber {
  public:
    using TermMap = std::map<std::int64_t, Rational>;

    RadicalNumber() = default;

    static RadicalNumber from_rational(Rational r);
    static RadicalNumber from_int(long long v) { return from_rational(Rational(v)); }

    // coeff * sqrt(radicand) with the square part of radicand folded into coeff
    static RadicalNumber term(const Rational& coeff, std::int64_t radicand);

    // Exact square root of a nonnegative rational: sqrt(a/b) = sqrt(a*b)/b.
    static RadicalNumber sqrt_of(const Rational& r);

    RadicalNumber operator-() const;
    RadicalNumber& operator+=(const RadicalNumber& rhs);
    RadicalNumber& operator-=(const RadicalNumber& rhs);
    friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
    friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
    friend RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b);

    RadicalNumber& operator*=(const RadicalNumber& rhs) { return *this = *this * rhs; }

    // Exact division by a nonzero rational. Irrational divisors are not part of
    // this layer (expression evaluation degrades to floating point instead).
    RadicalNumber divided_by(const Rational& r) const;

    RadicalNumber pow(unsigned exponent) const;

    bool operator==(const RadicalNumber& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const RadicalNumber& rhs) const { return terms_ != rhs.terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;

    // Rational part / per-radicand coefficient; zero when absent.
    Rational rational_value() const; // requires is_rational()
    Rational coefficient(std::int64_t radicand) const;

    const TermMap& terms() const { return terms_; }

    double to_double() const;

    // "c1*sqrt(k1) + c2*sqrt(k2) + ...", ascending radicand, rationals as "n/d".
    std::string render() const;

  private:
    void insert_term(std::int64_t radicand, const Rational& coeff);

    TermMap terms_;
};

// n = root^2 * radicand with radicand square-free; exact for any n >= 1 that
// fits in 64 bits (trial division to the cube root plus a perfect-square check).
struct SquareFreeParts {
    std::int64_t root;
    std::int64_t radicand;
};
SquareFreeParts square_free_decompose(std::int64_t n);

// A numeric result that stays exact while the computation remains inside the
// radical ring, and degrades to a plain double (exact absent) once it leaves.
// The double mirror is maintained either way, so callers that only need a
// float never have to branch.
struct NumericValue {
    std::optional<RadicalNumber> exact;
    double approx = 0.0;

    bool is_exact() const { return exact.has_value(); }
};

NumericValue nv_exact(RadicalNumber v);
NumericValue nv_real(double v);

NumericValue nv_add(const NumericValue& a, const NumericValue& b);
NumericValue nv_sub(const NumericValue& a, const NumericValue& b);
NumericValue nv_neg(const NumericValue& a);
NumericValue nv_mul(const NumericValue& a, const NumericValue& b);
// Exact division needs a rational divisor; an irrational divisor degrades the
// result. Dividing by zero (exact zero, or a degraded 0.0) throws.
NumericValue nv_div(const NumericValue& a, const NumericValue& b);
// Negative radicands throw NegativeSqrt on both the exact and degraded paths.
// sqrt of an exact irrational degrades.
NumericValue nv_sqrt(const NumericValue& a);
// Negative exponents stay exact only for rational bases (general radical
// inverses would need field conjugation, which this ring does not model).
NumericValue nv_pow(const NumericValue& a, long long e);
NumericValue nv_scale(const NumericValue& a, const Rational& c);

} // namespace sombor
