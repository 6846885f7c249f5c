#pragma once

// Self-contained cross-check machinery for the test suite.
//
// Everything here is deliberately independent of the engine's number tower:
// values live in a fixed 5-element basis [1, sqrt(2), sqrt(5), sqrt(10),
// sqrt(13)] with plain int64 coefficients, scaled by a global factor of 60 so
// that the ISI weights (2/3, 3/4, 1, 6/5, 3/2) become integers.  Edge-count
// polynomials are int64 bilinear polynomials.  The family tables and claim
// tables below were typed in separately from the engine catalog; the tests
// compare the two transcriptions and the two summation routes against each
// other, so a typo on either side shows up as a hard failure.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "sombor/forms.hpp"
#include "sombor/radical.hpp"
#include "sombor/rational.hpp"

namespace oracle {

// a*pq + b*p + c*q + d with integer coefficients
struct Poly {
  long long pq = 0, p = 0, q = 0, c = 0;

  long long at(long long pv, long long qv) const {
    return pq * pv * qv + p * pv + q * qv + c;
  }
  Poly operator+(const Poly& o) const {
    return {pq + o.pq, p + o.p, q + o.q, c + o.c};
  }
  Poly operator-(const Poly& o) const {
    return {pq - o.pq, p - o.p, q - o.q, c - o.c};
  }
  Poly times(long long k) const { return {pq * k, p * k, q * k, c * k}; }
  bool operator==(const Poly& o) const = default;
};

// coefficients of [1, sqrt2, sqrt5, sqrt10, sqrt13], pre-scaled by 60
struct Vec5 {
  std::array<long long, 5> v{0, 0, 0, 0, 0};
  bool operator==(const Vec5& o) const = default;
};

// one bilinear polynomial per basis element: a full symbolic index value
struct FormVec {
  std::array<Poly, 5> comp{};
  bool operator==(const FormVec& o) const = default;

  FormVec operator-(const FormVec& o) const {
    FormVec r;
    for (int b = 0; b < 5; ++b) r.comp[b] = comp[b] - o.comp[b];
    return r;
  }
  bool is_zero() const {
    for (const auto& c : comp)
      if (!(c == Poly{})) return false;
    return true;
  }
};

inline constexpr double kBasisReal[5] = {
    1.0, 1.4142135623730951, 2.23606797749979, 3.1622776601683795,
    3.605551275463989};

inline double real_of(const Vec5& x) {
  double s = 0;
  for (int b = 0; b < 5; ++b) s += static_cast<double>(x.v[b]) * kBasisReal[b];
  return s / 60.0;
}

inline double real_of(const FormVec& f, long long p, long long q) {
  double s = 0;
  for (int b = 0; b < 5; ++b)
    s += static_cast<double>(f.comp[b].at(p, q)) * kBasisReal[b];
  return s / 60.0;
}

// ---------------------------------------------------------------------------
// family tables: edge counts per degree class, in the fixed class order
// (1,2), (1,3), (2,2), (2,3), (3,3)
// ---------------------------------------------------------------------------

struct FamilyTable {
  std::string name;
  char axis = 'n';  // 'n' = no branch, 'p'/'q' = boundary sheet on that axis
  std::array<Poly, 5> eq1{};  // counts when the branching axis equals 1
  std::array<Poly, 5> gt1{};  // counts when it exceeds 1 ('n': same as eq1)
  Poly vertices;
  Poly claimed_edges;

  const std::array<Poly, 5>& branch(bool at_eq1) const {
    return (axis == 'n' || at_eq1) ? eq1 : gt1;
  }
};

inline const std::array<FamilyTable, 8>& family_tables() {
  static const std::array<FamilyTable, 8> t = {{
      {"SiC3-I",
       'p',
       {Poly{0, 0, 0, 2}, Poly{0, 0, 0, 1}, Poly{0, 0, 3, -1},
        Poly{0, 0, 6, -4}, Poly{12, -2, -12, 2}},
       {Poly{0, 0, 0, 2}, Poly{0, 0, 0, 1}, Poly{0, 2, 2, -3},
        Poly{0, 4, 8, -8}, Poly{12, -13, -8, 8}},
       Poly{8, 0, 0, 0},
       Poly{12, -2, -3, 0}},
      {"SiC3-II",
       'n',
       {Poly{}, Poly{0, 0, 0, 2}, Poly{0, 2, 0, 1}, Poly{0, 4, 8, -10},
        Poly{12, -8, -10, 7}},
       {},
       Poly{8, 0, 0, 0},
       Poly{12, -2, -2, 0}},
      {"SiC3-III",
       'n',
       {Poly{0, 0, 0, 1}, Poly{0, 0, 0, 2}, Poly{0, 3, 2, -3},
        Poly{0, 6, 4, -8}, Poly{12, -12, -8, 8}},
       {},
       Poly{8, 0, 0, 0},
       Poly{12, -2, -3, 0}},
      {"Si2C3-I",
       'n',
       {Poly{0, 0, 0, 1}, Poly{0, 0, 0, 1}, Poly{0, 1, 2, 0},
        Poly{0, 6, 8, -9}, Poly{15, -9, -13, 7}},
       {},
       Poly{10, 0, 0, 0},
       Poly{15, -2, -3, 0}},
      {"Si2C3-II",
       'n',
       {Poly{0, 0, 0, 2}, Poly{0, 0, 0, 1}, Poly{0, 2, 2, 0},
        Poly{0, 8, 8, -14}, Poly{15, -13, -13, 11}},
       {},
       Poly{10, 0, 0, 0},
       Poly{15, -2, -3, 0}},
      {"Si2C3-III",
       'n',
       {Poly{}, Poly{0, 0, 0, 2}, Poly{0, 0, 2, 2}, Poly{0, 8, 8, -12},
        Poly{15, -10, -13, 8}},
       {},
       Poly{10, 0, 0, 0},
       Poly{15, -2, -3, 0}},
      {"SiC4-I",
       'n',
       {Poly{0, 0, 0, 2}, Poly{0, 3, 0, -2}, Poly{0, 1, 2, -2},
        Poly{0, 2, 4, -2}, Poly{14, -10, -8, 5}},
       {},
       Poly{10, 0, 0, 0},
       Poly{15, -4, -2, 1}},
      {"SiC4-II",
       'q',
       {Poly{0, 0, 0, 2}, Poly{}, Poly{0, 0, 5, 2}, Poly{0, 6, 0, -6},
        Poly{15, -15, -2, 0}},
       {Poly{0, 0, 0, 2}, Poly{}, Poly{0, 2, 0, 2}, Poly{0, 12, 8, -14},
        Poly{12, -10, -18, 0}},
       Poly{10, 0, 0, 0},
       Poly{15, -4, -2, 0}},
  }};
  return t;
}

inline const FamilyTable& family_table(const std::string& name) {
  for (const auto& f : family_tables())
    if (f.name == name) return f;
  throw std::runtime_error("oracle: no family table for " + name);
}

// ---------------------------------------------------------------------------
// index weights per degree class, scaled by 60
// ---------------------------------------------------------------------------

using Weights = std::array<Vec5, 5>;

inline const Weights& weights(const std::string& index) {
  static const std::map<std::string, Weights> w = {
      // sqrt(1+4)=sqrt5, sqrt(1+9)=sqrt10, sqrt(8)=2sqrt2, sqrt(13), sqrt(18)=3sqrt2
      {"sombor",
       {Vec5{{0, 0, 60, 0, 0}}, Vec5{{0, 0, 0, 60, 0}}, Vec5{{0, 120, 0, 0, 0}},
        Vec5{{0, 0, 0, 0, 60}}, Vec5{{0, 180, 0, 0, 0}}}},
      // degrees shifted down one: sqrt(0+1), sqrt(0+4), sqrt(2), sqrt(1+4), sqrt(8)
      {"reduced_sombor",
       {Vec5{{60, 0, 0, 0, 0}}, Vec5{{120, 0, 0, 0, 0}}, Vec5{{0, 60, 0, 0, 0}},
        Vec5{{0, 0, 60, 0, 0}}, Vec5{{0, 120, 0, 0, 0}}}},
      {"m1",
       {Vec5{{180, 0, 0, 0, 0}}, Vec5{{240, 0, 0, 0, 0}},
        Vec5{{240, 0, 0, 0, 0}}, Vec5{{300, 0, 0, 0, 0}},
        Vec5{{360, 0, 0, 0, 0}}}},
      {"m2",
       {Vec5{{120, 0, 0, 0, 0}}, Vec5{{180, 0, 0, 0, 0}},
        Vec5{{240, 0, 0, 0, 0}}, Vec5{{360, 0, 0, 0, 0}},
        Vec5{{540, 0, 0, 0, 0}}}},
      // du*dv/(du+dv): 2/3, 3/4, 1, 6/5, 3/2  (times 60: all integral)
      {"isi",
       {Vec5{{40, 0, 0, 0, 0}}, Vec5{{45, 0, 0, 0, 0}}, Vec5{{60, 0, 0, 0, 0}},
        Vec5{{72, 0, 0, 0, 0}}, Vec5{{90, 0, 0, 0, 0}}}},
  };
  auto it = w.find(index);
  if (it == w.end()) throw std::runtime_error("oracle: no weights for " + index);
  return it->second;
}

// weighted sum over one branch of a family table
inline FormVec derive(const std::array<Poly, 5>& counts, const Weights& w) {
  FormVec out;
  for (int k = 0; k < 5; ++k)
    for (int b = 0; b < 5; ++b)
      out.comp[b] = out.comp[b] + counts[k].times(w[k].v[b]);
  return out;
}

// ---------------------------------------------------------------------------
// bridges from engine types into the oracle representation (throwing on
// anything outside the basis, so a silent representation drift cannot pass)
// ---------------------------------------------------------------------------

inline Vec5 vec_from_radical(const sombor::RadicalNumber& r) {
  Vec5 out;
  for (const auto& [rad, coef] : r.terms()) {
    int idx = -1;
    if (rad == 1) idx = 0;
    else if (rad == 2) idx = 1;
    else if (rad == 5) idx = 2;
    else if (rad == 10) idx = 3;
    else if (rad == 13) idx = 4;
    else
      throw std::runtime_error("oracle: radicand outside basis: " +
                               std::to_string(rad));
    sombor::Rational scaled = coef * 60;
    if (boost::multiprecision::denominator(scaled) != 1)
      throw std::runtime_error("oracle: coefficient not integral after x60: " +
                               sombor::render_rational(coef));
    out.v[idx] = static_cast<long long>(
        boost::multiprecision::numerator(scaled).convert_to<std::int64_t>());
  }
  return out;
}

inline FormVec formvec_from_bilinear(const sombor::BilinearForm& f) {
  Vec5 a = vec_from_radical(f.pq);
  Vec5 b = vec_from_radical(f.p);
  Vec5 c = vec_from_radical(f.q);
  Vec5 d = vec_from_radical(f.c);
  FormVec out;
  for (int i = 0; i < 5; ++i)
    out.comp[i] = Poly{a.v[i], b.v[i], c.v[i], d.v[i]};
  return out;
}

// a constant-coefficient claim line (each bilinear slot is one radical value)
struct StatedForm {
  Vec5 pq, p, q, c;
  bool operator==(const StatedForm& o) const = default;
};

inline FormVec formvec_from_stated(const StatedForm& s) {
  FormVec out;
  for (int b = 0; b < 5; ++b)
    out.comp[b] = Poly{s.pq.v[b], s.p.v[b], s.q.v[b], s.c.v[b]};
  return out;
}

// ---------------------------------------------------------------------------
// claim tables (everything scaled by 60; sqrt coefficients land on the basis)
// ---------------------------------------------------------------------------

struct StatedClaim {
  int id;
  std::string family;
  std::string index;  // "sombor" or "reduced_sombor"
  char axis = 'n';
  StatedForm eq1;
  StatedForm gt1;  // meaningful only when axis != 'n'
};

inline Vec5 mix(long long ones, long long r2, long long r5, long long r10,
                long long r13) {
  return Vec5{{ones * 60, r2 * 60, r5 * 60, r10 * 60, r13 * 60}};
}

inline const std::array<StatedClaim, 16>& stated_claims() {
  static const std::array<StatedClaim, 16> t = {{
      {1, "SiC3-I", "sombor", 'p',
       {mix(0, 36, 0, 0, 0), mix(0, -6, 0, 0, 0), mix(0, -30, 0, 0, 6),
        mix(0, 4, 2, 1, -4)},
       {mix(0, 36, 0, 0, 0), mix(0, -35, 0, 0, 4), mix(0, -20, 0, 0, 8),
        mix(0, 18, 2, 1, -8)}},
      {2, "SiC3-I", "reduced_sombor", 'p',
       {mix(0, 24, 0, 0, 0), mix(0, -4, 0, 0, 0), mix(0, -21, 6, 0, 0),
        mix(4, 3, -4, 0, 0)},
       {mix(0, 24, 0, 0, 0), mix(0, -24, 4, 0, 0), mix(0, -14, 8, 0, 0),
        mix(4, 13, -8, 0, 0)}},
      {3, "SiC3-II", "sombor", 'n',
       {mix(0, 36, 0, 0, 0), mix(0, -20, 0, 0, 4), mix(0, -30, 0, 0, 8),
        mix(0, 23, 0, 2, -10)},
       {}},
      {4, "SiC3-II", "reduced_sombor", 'n',
       {mix(0, 36, 0, 0, 0), mix(0, -14, 4, 0, 0), mix(0, -20, 8, 0, 0),
        mix(4, 15, -10, 0, 0)},
       {}},
      {5, "SiC3-III", "sombor", 'n',
       {mix(0, 36, 0, 0, 0), mix(0, -30, 0, 0, 6), mix(0, -22, 0, 0, 4),
        mix(0, 18, 1, 2, -8)},
       {}},
      {6, "SiC3-III", "reduced_sombor", 'n',
       {mix(0, 24, 0, 0, 0), mix(0, -21, 6, 0, 0), mix(0, -14, 4, 0, 0),
        mix(5, 13, -8, 0, 0)},
       {}},
      {7, "Si2C3-I", "sombor", 'n',
       {mix(0, 45, 0, 0, 0), mix(0, -25, 0, 0, 6), mix(0, -35, 0, 0, 8),
        mix(0, 21, 1, 1, -9)},
       {}},
      {8, "Si2C3-I", "reduced_sombor", 'n',
       {mix(0, 30, 0, 0, 0), mix(0, -17, 6, 0, 0), mix(0, -16, 8, 0, 0),
        mix(3, 14, -9, 0, 0)},
       {}},
      {9, "Si2C3-II", "sombor", 'n',
       {mix(0, 45, 0, 0, 0), mix(0, -35, 0, 0, 8), mix(0, -35, 0, 0, 8),
        mix(0, 35, 2, 1, -14)},
       {}},
      {10, "Si2C3-II", "reduced_sombor", 'n',
       {mix(0, 30, 0, 0, 0), mix(0, -24, 8, 0, 0), mix(0, -24, 8, 0, 0),
        mix(3, 22, -14, 0, 0)},
       {}},
      {11, "Si2C3-III", "sombor", 'n',
       {mix(0, 45, 0, 0, 0), mix(0, -30, 0, 0, 8), mix(0, -35, 0, 0, 8),
        mix(0, 28, 0, 2, -12)},
       {}},
      {12, "Si2C3-III", "reduced_sombor", 'n',
       {mix(0, 30, 0, 0, 0), mix(0, -20, 8, 0, 0), mix(0, -24, 8, 0, 0),
        mix(4, 18, -12, 0, 0)},
       {}},
      {13, "SiC4-I", "sombor", 'n',
       {mix(0, 42, 0, 0, 0), mix(0, -1, 0, 3, 2), mix(0, -20, 0, 0, 4),
        mix(0, 11, 2, -2, -2)},
       {}},
      {14, "SiC4-I", "reduced_sombor", 'n',
       {mix(0, 28, 0, 0, 0), mix(6, -14, 2, 0, 0), mix(0, -14, 4, 0, 0),
        mix(-2, 8, -2, 0, 0)},
       {}},
      {15, "SiC4-II", "sombor", 'p',
       {mix(0, 45, 0, 0, 0), mix(0, -35, 0, 0, 6), mix(0, -6, 0, 0, 0),
        mix(0, 4, 2, 0, -6)},
       {mix(0, 45, 0, 0, 0), mix(0, -50, 0, 0, 12), mix(0, -30, 0, 0, 8),
        mix(0, 4, 2, 0, -14)}},
      {16, "SiC4-II", "reduced_sombor", 'p',
       {mix(0, 30, 0, 0, 0), mix(0, -25, 6, 0, 0), mix(0, -4, 0, 0, 0),
        mix(2, 2, -6, 0, 0)},
       {mix(0, 30, 0, 0, 0), mix(0, -34, 12, 0, 0), mix(0, -20, 8, 0, 0),
        mix(2, 2, -14, 0, 0)}},
  }};
  return t;
}

inline const StatedClaim& stated_claim(int id) {
  for (const auto& c : stated_claims())
    if (c.id == id) return c;
  throw std::runtime_error("oracle: no stated claim " + std::to_string(id));
}

// recovery-table rows: per-class counts (same branch model as families) plus
// the average-degree quotient A = num/den
struct RecoveryRow {
  std::string family;
  char axis = 'n';
  std::array<Poly, 5> eq1{};
  std::array<Poly, 5> gt1{};
  Poly a_num;
  Poly a_den;
};

inline const std::array<RecoveryRow, 8>& recovery_rows() {
  static const std::array<RecoveryRow, 8> t = [] {
    std::array<RecoveryRow, 8> rows;
    const auto& fams = family_tables();
    for (std::size_t i = 0; i < 8; ++i) {
      rows[i].family = fams[i].name;
      rows[i].axis = fams[i].axis;
      rows[i].eq1 = fams[i].eq1;
      rows[i].gt1 = fams[i].gt1;
    }
    // the one table cell that disagrees with the matching family count:
    // row SiC3-I lists 2q-1 for the (2,2) class on the p=1 sheet
    rows[0].eq1[2] = Poly{0, 0, 2, -1};
    rows[0].a_num = Poly{0, 2, 3, 0};
    rows[0].a_den = Poly{4, 0, 0, 0};
    rows[1].a_num = Poly{0, 1, 1, 0};
    rows[1].a_den = Poly{2, 0, 0, 0};
    rows[2].a_num = Poly{0, 3, 2, 0};
    rows[2].a_den = Poly{4, 0, 0, 0};
    rows[3].a_num = Poly{0, 2, 3, 0};
    rows[3].a_den = Poly{5, 0, 0, 0};
    rows[4].a_num = Poly{0, 3, 3, 0};
    rows[4].a_den = Poly{5, 0, 0, 0};
    rows[5].a_num = Poly{0, 2, 3, 0};
    rows[5].a_den = Poly{5, 0, 0, 0};
    rows[6].a_num = Poly{0, 4, 1, -1};
    rows[6].a_den = Poly{5, 0, 0, 0};
    rows[7].a_num = Poly{0, 4, 2, 0};
    rows[7].a_den = Poly{5, 0, 0, 0};
    return rows;
  }();
  return t;
}

inline const RecoveryRow& recovery_row(const std::string& family) {
  for (const auto& r : recovery_rows())
    if (r.family == family) return r;
  throw std::runtime_error("oracle: no recovery row for " + family);
}

}  // namespace oracle
