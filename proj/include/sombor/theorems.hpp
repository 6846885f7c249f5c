#pragma once

#include "sombor/forms.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace sombor {

// The published closed forms under audit, transcribed verbatim. Where the
// source text is internally inconsistent (a hypothesis naming one family while
// the formula line names another, or a parenthesis that cannot be meant as
// printed) the transcription choice is recorded in `note` and surfaces in
// audit reports.

enum class ClaimIndex { sombor, reduced_sombor };

struct TheoremClaim {
    int id = 0; // 1..16
    std::string family;
    ClaimIndex index = ClaimIndex::sombor;
    PiecewiseForm stated_form;
    std::string note; // empty when the transcription was unambiguous
};

// Ratio of two rational bilinear forms; denominators are positive on the
// entire quadrant p, q >= 1.
struct RationalQuotient {
    BilinearForm num, den;

    Rational eval(long long p, long long q) const;
    std::string render() const; // "(NUM) / (DEN)"
};

// One row of the average-index recovery table: claimed class counts E1..E5
// for the degree pairs {1,2},{1,3},{2,2},{2,3},{3,3}, and the claimed average
// degree offset A (the quantity 3 - 2m/n).
struct Thm17Entry {
    std::string family;
    std::array<PiecewiseForm, 5> e;
    RationalQuotient a_form;
    std::string note;
};

enum class Claim18Target { m1, m2, isi, sombor_approx };

// Closed forms stated for the Si2C3-I sheet's classical indices. The last two
// are printed with decimal coefficients and are audited numerically against
// exact recomputation rather than symbolically.
struct ClosedFormClaim18 {
    Claim18Target target;
    std::string family;
    BilinearForm stated_form;
    bool approximate = false;
};

const char* claim18_target_name(Claim18Target t); // "m1", "m2", "isi", "sombor-approx"

const std::vector<TheoremClaim>& theorem_claims();      // ids 1..16
const std::vector<Thm17Entry>& thm17_entries();         // one per builtin family
const std::vector<ClosedFormClaim18>& thm18_claims();   // four targets

const TheoremClaim& get_theorem_claim(int id);                    // UnknownTheorem
const Thm17Entry& get_thm17_entry(const std::string& family);     // UnknownTheorem
const ClosedFormClaim18& get_thm18_claim(const std::string& target); // UnknownTheorem

// Uniform lookup: ids 1..16 ignore the selector; 17 selects by family name;
// 18 selects by target name.
using Claim = std::variant<TheoremClaim, Thm17Entry, ClosedFormClaim18>;
Claim get_claim(int theorem_id, const std::string& selector = "");

} // namespace sombor
