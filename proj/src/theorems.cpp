#include "sombor/theorems.hpp"

#include "sombor/errors.hpp"

#include <utility>

namespace sombor {

Rational RationalQuotient::eval(long long p, long long q) const {
    const RadicalNumber n = num.eval(p, q);
    const RadicalNumber d = den.eval(p, q);
    if (!n.is_rational() || !d.is_rational())
        throw ValidationError("quotient " + render() + " is not rational at (" +
                              std::to_string(p) + "," + std::to_string(q) + ")");
    const Rational dv = d.rational_value();
    if (dv == 0) throw DivisionByZero();
    return n.rational_value() / dv;
}

std::string RationalQuotient::render() const {
    return "(" + num.render() + ") / (" + den.render() + ")";
}

namespace {

RadicalNumber R(long long c, long long k = 1) { return RadicalNumber::term(Rational(c), k); }

BilinearForm F(RadicalNumber pq, RadicalNumber p, RadicalNumber q, RadicalNumber c) {
    return {std::move(pq), std::move(p), std::move(q), std::move(c)};
}

BilinearForm bl(long long cpq, long long cp, long long cq, long long cc) {
    return BilinearForm::rational(cpq, cp, cq, cc);
}

PiecewiseForm one(BilinearForm f) { return PiecewiseForm::single(std::move(f)); }

PiecewiseForm split_p(BilinearForm at1, BilinearForm above1) {
    PiecewiseForm f;
    f.pieces.emplace_back(region_p_eq1(), std::move(at1));
    f.pieces.emplace_back(region_p_gt1(), std::move(above1));
    return f;
}

PiecewiseForm split_q(BilinearForm at1, BilinearForm above1) {
    PiecewiseForm f;
    f.pieces.emplace_back(region_q_eq1(), std::move(at1));
    f.pieces.emplace_back(region_q_gt1(), std::move(above1));
    return f;
}

const char* kSwappedNameNote7 =
    "the hypothesis names Si2C3-II but the formula line names Si2C3-I; filed under Si2C3-I";
const char* kSwappedNameNote12 =
    "the hypothesis names Si2C3-II but the formula line names Si2C3-III; filed under Si2C3-III";
const char* kSwappedNameNote13 =
    "the hypothesis names SiC4-II and the formula line names Si2C3-I, but the proof's vertex and "
    "edge totals (10pq, 15pq - 4p - 2q + 1) are SiC4-I's; filed under SiC4-I";
const char* kSwappedNameNote14 =
    "the hypothesis names SiC4-I while the formula line names SiC4-II; the proof's edge total "
    "(15pq - 4p - 2q + 1) is SiC4-I's; filed under SiC4-I";
const char* kParenNote15 =
    "the p = 1 branch is printed with an unbalanced grouping '(6*sqrt(13) - 35*sqrt(2)p)'; "
    "transcribed as p-coefficient (6*sqrt(13) - 35*sqrt(2)) with constant "
    "(4*sqrt(2) + 2*sqrt(5) - 6*sqrt(13)), matching the companion reduced-index claim's "
    "structure. Both readings coincide everywhere on p = 1";

std::vector<TheoremClaim> make_theorem_claims() {
    std::vector<TheoremClaim> c;

    c.push_back({1, "SiC3-I", ClaimIndex::sombor,
                 split_p(F(R(36, 2), R(-6, 2), R(6, 13) + R(-30, 2),
                           R(4, 2) + R(2, 5) + R(1, 10) + R(-4, 13)),
                         F(R(36, 2), R(4, 13) + R(-35, 2), R(8, 13) + R(-20, 2),
                           R(18, 2) + R(2, 5) + R(1, 10) + R(-8, 13))),
                 ""});
    c.push_back({2, "SiC3-I", ClaimIndex::reduced_sombor,
                 split_p(F(R(24, 2), R(-4, 2), R(6, 5) + R(-21, 2), R(4) + R(3, 2) + R(-4, 5)),
                         F(R(24, 2), R(4, 5) + R(-24, 2), R(8, 5) + R(-14, 2),
                           R(4) + R(-8, 5) + R(13, 2))),
                 ""});
    c.push_back({3, "SiC3-II", ClaimIndex::sombor,
                 one(F(R(36, 2), R(4, 13) + R(-20, 2), R(8, 13) + R(-30, 2),
                       R(2, 10) + R(-10, 13) + R(23, 2))),
                 ""});
    c.push_back({4, "SiC3-II", ClaimIndex::reduced_sombor,
                 one(F(R(36, 2), R(4, 5) + R(-14, 2), R(8, 5) + R(-20, 2),
                       R(4) + R(-10, 5) + R(15, 2))),
                 ""});
    c.push_back({5, "SiC3-III", ClaimIndex::sombor,
                 one(F(R(36, 2), R(6, 13) + R(-30, 2), R(4, 13) + R(-22, 2),
                       R(2, 10) + R(-8, 13) + R(18, 2) + R(1, 5))),
                 ""});
    c.push_back({6, "SiC3-III", ClaimIndex::reduced_sombor,
                 one(F(R(24, 2), R(6, 5) + R(-21, 2), R(4, 5) + R(-14, 2),
                       R(5) + R(-8, 5) + R(13, 2))),
                 ""});
    c.push_back({7, "Si2C3-I", ClaimIndex::sombor,
                 one(F(R(45, 2), R(6, 13) + R(-25, 2), R(8, 13) + R(-35, 2),
                       R(21, 2) + R(1, 5) + R(1, 10) + R(-9, 13))),
                 kSwappedNameNote7});
    c.push_back({8, "Si2C3-I", ClaimIndex::reduced_sombor,
                 one(F(R(30, 2), R(6, 5) + R(-17, 2), R(8, 5) + R(-16, 2),
                       R(3) + R(14, 2) + R(-9, 5))),
                 kSwappedNameNote7});
    c.push_back({9, "Si2C3-II", ClaimIndex::sombor,
                 one(F(R(45, 2), R(8, 13) + R(-35, 2), R(8, 13) + R(-35, 2),
                       R(35, 2) + R(2, 5) + R(1, 10) + R(-14, 13))),
                 ""});
    c.push_back({10, "Si2C3-II", ClaimIndex::reduced_sombor,
                 one(F(R(30, 2), R(8, 5) + R(-24, 2), R(8, 5) + R(-24, 2),
                       R(3) + R(22, 2) + R(-14, 5))),
                 ""});
    c.push_back({11, "Si2C3-III", ClaimIndex::sombor,
                 one(F(R(45, 2), R(8, 13) + R(-30, 2), R(8, 13) + R(-35, 2),
                       R(28, 2) + R(2, 10) + R(-12, 13))),
                 ""});
    c.push_back({12, "Si2C3-III", ClaimIndex::reduced_sombor,
                 one(F(R(30, 2), R(8, 5) + R(-20, 2), R(8, 5) + R(-24, 2),
                       R(4) + R(18, 2) + R(-12, 5))),
                 kSwappedNameNote12});
    c.push_back({13, "SiC4-I", ClaimIndex::sombor,
                 one(F(R(42, 2), R(2, 13) + R(3, 10) + R(-1, 2), R(4, 13) + R(-20, 2),
                       R(11, 2) + R(2, 5) + R(-2, 10) + R(-2, 13))),
                 kSwappedNameNote13});
    c.push_back({14, "SiC4-I", ClaimIndex::reduced_sombor,
                 one(F(R(28, 2), R(6) + R(2, 5) + R(-14, 2), R(4, 5) + R(-14, 2),
                       R(8, 2) + R(-2, 5) + R(-2))),
                 kSwappedNameNote14});
    c.push_back({15, "SiC4-II", ClaimIndex::sombor,
                 split_p(F(R(45, 2), R(6, 13) + R(-35, 2), R(-6, 2),
                           R(4, 2) + R(2, 5) + R(-6, 13)),
                         F(R(45, 2), R(12, 13) + R(-50, 2), R(8, 13) + R(-30, 2),
                           R(4, 2) + R(2, 5) + R(-14, 13))),
                 kParenNote15});
    c.push_back({16, "SiC4-II", ClaimIndex::reduced_sombor,
                 split_p(F(R(30, 2), R(6, 5) + R(-25, 2), R(-4, 2), R(2) + R(2, 2) + R(-6, 5)),
                         F(R(30, 2), R(12, 5) + R(-34, 2), R(8, 5) + R(-20, 2),
                           R(2) + R(-14, 5) + R(2, 2))),
                 ""});
    return c;
}

std::vector<Thm17Entry> make_thm17_entries() {
    std::vector<Thm17Entry> t;

    t.push_back({"SiC3-I",
                 {one(bl(0, 0, 0, 2)), one(bl(0, 0, 0, 1)),
                  split_p(bl(0, 0, 2, -1), bl(0, 2, 2, -3)),
                  split_p(bl(0, 0, 6, -4), bl(0, 4, 8, -8)),
                  split_p(bl(12, -2, -12, 2), bl(12, -13, -8, 8))},
                 {bl(0, 2, 3, 0), bl(4, 0, 0, 0)},
                 "the {2,2} count is printed as 2q - 1 on p = 1 while the partition (and the "
                 "derivation's own text) give 3q - 1; transcribed as printed"});
    t.push_back({"SiC3-II",
                 {one(bl(0, 0, 0, 0)), one(bl(0, 0, 0, 2)), one(bl(0, 2, 0, 1)),
                  one(bl(0, 4, 8, -10)), one(bl(12, -8, -10, 7))},
                 {bl(0, 1, 1, 0), bl(2, 0, 0, 0)},
                 ""});
    t.push_back({"SiC3-III",
                 {one(bl(0, 0, 0, 1)), one(bl(0, 0, 0, 2)), one(bl(0, 3, 2, -3)),
                  one(bl(0, 6, 4, -8)), one(bl(12, -12, -8, 8))},
                 {bl(0, 3, 2, 0), bl(4, 0, 0, 0)},
                 ""});
    t.push_back({"Si2C3-I",
                 {one(bl(0, 0, 0, 1)), one(bl(0, 0, 0, 1)), one(bl(0, 1, 2, 0)),
                  one(bl(0, 6, 8, -9)), one(bl(15, -9, -13, 7))},
                 {bl(0, 2, 3, 0), bl(5, 0, 0, 0)},
                 ""});
    t.push_back({"Si2C3-II",
                 {one(bl(0, 0, 0, 2)), one(bl(0, 0, 0, 1)), one(bl(0, 2, 2, 0)),
                  one(bl(0, 8, 8, -14)), one(bl(15, -13, -13, 11))},
                 {bl(0, 3, 3, 0), bl(5, 0, 0, 0)},
                 ""});
    t.push_back({"Si2C3-III",
                 {one(bl(0, 0, 0, 0)), one(bl(0, 0, 0, 2)), one(bl(0, 0, 2, 2)),
                  one(bl(0, 8, 8, -12)), one(bl(15, -10, -13, 8))},
                 {bl(0, 2, 3, 0), bl(5, 0, 0, 0)},
                 ""});
    t.push_back({"SiC4-I",
                 {one(bl(0, 0, 0, 2)), one(bl(0, 3, 0, -2)), one(bl(0, 1, 2, -2)),
                  one(bl(0, 2, 4, -2)), one(bl(14, -10, -8, 5))},
                 {bl(0, 4, 1, -1), bl(5, 0, 0, 0)},
                 "the {1,3} count is printed split across lines as '3p' / '-2'; read as 3p - 2, "
                 "the partition's value"});
    t.push_back({"SiC4-II",
                 {one(bl(0, 0, 0, 2)), one(bl(0, 0, 0, 0)),
                  split_q(bl(0, 0, 5, 2), bl(0, 2, 0, 2)),
                  split_q(bl(0, 6, 0, -6), bl(0, 12, 8, -14)),
                  split_q(bl(15, -15, -2, 0), bl(12, -10, -18, 0))},
                 {bl(0, 4, 2, 0), bl(5, 0, 0, 0)},
                 ""});
    return t;
}

std::vector<ClosedFormClaim18> make_thm18_claims() {
    std::vector<ClosedFormClaim18> c;
    c.push_back({Claim18Target::m1, "Si2C3-I", bl(90, -20, -30, 4), false});
    c.push_back({Claim18Target::m2, "Si2C3-I", bl(135, -41, -61, 14), false});
    c.push_back({Claim18Target::isi, "Si2C3-I",
                 BilinearForm::rational(Rational(45, 2), Rational(-53, 10), Rational(-79, 10),
                                        Rational(111, 100)),
                 true});
    c.push_back({Claim18Target::sombor_approx, "Si2C3-I",
                 BilinearForm::rational(Rational(4245, 100), Rational(-1063, 100),
                                        Rational(-161, 10), Rational(3845, 100)),
                 true});
    return c;
}

} // namespace

const char* claim18_target_name(Claim18Target t) {
    switch (t) {
    case Claim18Target::m1: return "m1";
    case Claim18Target::m2: return "m2";
    case Claim18Target::isi: return "isi";
    case Claim18Target::sombor_approx: return "sombor-approx";
    }
    return "?";
}

const std::vector<TheoremClaim>& theorem_claims() {
    static const std::vector<TheoremClaim> claims = make_theorem_claims();
    return claims;
}

const std::vector<Thm17Entry>& thm17_entries() {
    static const std::vector<Thm17Entry> entries = make_thm17_entries();
    return entries;
}

const std::vector<ClosedFormClaim18>& thm18_claims() {
    static const std::vector<ClosedFormClaim18> claims = make_thm18_claims();
    return claims;
}

const TheoremClaim& get_theorem_claim(int id) {
    for (const auto& c : theorem_claims())
        if (c.id == id) return c;
    throw UnknownTheorem("unknown theorem id: " + std::to_string(id) +
                         " (closed-form claims are numbered 1..16)");
}

const Thm17Entry& get_thm17_entry(const std::string& family) {
    for (const auto& e : thm17_entries())
        if (e.family == family) return e;
    throw UnknownTheorem("no average-index table row for family: " + family);
}

const ClosedFormClaim18& get_thm18_claim(const std::string& target) {
    for (const auto& c : thm18_claims())
        if (claim18_target_name(c.target) == target) return c;
    throw UnknownTheorem("no classical-index claim named '" + target +
                         "' (expected m1, m2, isi, or sombor-approx)");
}

Claim get_claim(int theorem_id, const std::string& selector) {
    if (theorem_id >= 1 && theorem_id <= 16) return get_theorem_claim(theorem_id);
    if (theorem_id == 17) {
        if (selector.empty())
            throw UnknownTheorem("theorem 17 holds one row per family; pass a family name");
        return get_thm17_entry(selector);
    }
    if (theorem_id == 18) {
        if (selector.empty())
            throw UnknownTheorem("theorem 18 holds four claims; pass m1, m2, isi, or sombor-approx");
        return get_thm18_claim(selector);
    }
    throw UnknownTheorem("unknown theorem id: " + std::to_string(theorem_id) +
                         " (valid ids are 1..18)");
}

} // namespace sombor
