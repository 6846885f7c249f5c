#pragma once

#include "sombor/radical.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

// a*pq + b*p + c*q + d over radical coefficients: the shape of every counting
// formula and every stated closed form. Degree never exceeds 1 in p or q.
struct BilinearForm {
    RadicalNumber pq, p, q, c;

    static BilinearForm rational(const Rational& pq_, const Rational& p_, const Rational& q_,
                                 const Rational& c_) {
        return {RadicalNumber::from_rational(pq_), RadicalNumber::from_rational(p_),
                RadicalNumber::from_rational(q_), RadicalNumber::from_rational(c_)};
    }
    static BilinearForm constant(const Rational& c_) { return rational(0, 0, 0, c_); }

    RadicalNumber eval(long long pv, long long qv) const;

    BilinearForm operator+(const BilinearForm& o) const {
        return {pq + o.pq, p + o.p, q + o.q, c + o.c};
    }
    BilinearForm operator-(const BilinearForm& o) const {
        return {pq - o.pq, p - o.p, q - o.q, c - o.c};
    }
    bool operator==(const BilinearForm& o) const {
        return pq == o.pq && p == o.p && q == o.q && c == o.c;
    }
    bool is_zero() const { return pq.is_zero() && p.is_zero() && q.is_zero() && c.is_zero(); }

    // scale every coefficient by an exact radical factor
    BilinearForm scaled(const RadicalNumber& w) const { return {w * pq, w * p, w * q, w * c}; }

    std::string render() const; // "A*pq + B*p + C*q + D"
};

// coefficientwise difference; zero result witnesses identity of the two forms
inline BilinearForm form_sub(const BilinearForm& f, const BilinearForm& g) { return f - g; }

enum class Cond { eq1, gt1, ge1 };

struct Region {
    Cond p_cond = Cond::ge1;
    Cond q_cond = Cond::ge1;

    bool contains(long long pv, long long qv) const;
    bool operator==(const Region& o) const = default;
    std::string render() const; // "p=1, q>=1"
};

inline Region region_all() { return {Cond::ge1, Cond::ge1}; }
inline Region region_p_eq1() { return {Cond::eq1, Cond::ge1}; }
inline Region region_p_gt1() { return {Cond::gt1, Cond::ge1}; }
inline Region region_q_eq1() { return {Cond::ge1, Cond::eq1}; }
inline Region region_q_gt1() { return {Cond::ge1, Cond::gt1}; }

struct PiecewiseForm {
    std::vector<std::pair<Region, BilinearForm>> pieces;

    static PiecewiseForm single(BilinearForm f) {
        PiecewiseForm out;
        out.pieces.emplace_back(region_all(), std::move(f));
        return out;
    }

    bool operator==(const PiecewiseForm& o) const { return pieces == o.pieces; }
    bool is_zero() const;

    std::string render() const; // pieces joined with "; ", each "FORM [region]"
};

// Evaluates the unique covering piece; NoCoveringPiece when the regions miss (p,q).
RadicalNumber form_eval(const PiecewiseForm& f, long long p, long long q);

// Branching shape of a piecewise form: either one piece over p,q >= 1, or two
// pieces splitting a single axis into =1 / >1. This is the whole vocabulary the
// family tables and stated forms use.
enum class SplitAxis { none, p, q };

struct AlignedPieces {
    SplitAxis axis = SplitAxis::none;
    BilinearForm on_eq1; // the only form when axis == none
    BilinearForm on_gt1; // ignored when axis == none
};

AlignedPieces normalize_pieces(const PiecewiseForm& f); // throws RegionMismatch on exotic shapes

PiecewiseForm to_piecewise(const AlignedPieces& a);

// Piecewise combination with single<->split refinement along one axis.
// Returns nullopt when one operand splits on p and the other on q — there is
// no symbolic identity to check across incompatible branch structures.
std::optional<PiecewiseForm> try_piecewise_sub(const PiecewiseForm& a, const PiecewiseForm& b);
std::optional<PiecewiseForm> try_piecewise_add(const PiecewiseForm& a, const PiecewiseForm& b);

// Throwing variants for callers whose contract promises aligned inputs.
PiecewiseForm piecewise_add(const PiecewiseForm& a, const PiecewiseForm& b);
PiecewiseForm piecewise_sub(const PiecewiseForm& a, const PiecewiseForm& b);

} // namespace sombor
