#pragma once

#include "sombor/forms.hpp"
#include "sombor/graph.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace sombor {

// A two-parameter graph family described by its edge partition: for each
// endpoint-degree pair {i,j} with i,j in {1,2,3}, a (possibly piecewise)
// bilinear form in (p,q) counting the edges of that type. The vertex count and
// the separately claimed edge total are plain bilinear forms.
struct FamilySpec {
    std::string name;
    BilinearForm vertex_form;
    BilinearForm claimed_edge_form;
    std::map<DegreePair, PiecewiseForm> partition;
};

// The eight builtin silicon-carbide sheet families, in catalog order:
// SiC3-I, SiC3-II, SiC3-III, Si2C3-I, Si2C3-II, Si2C3-III, SiC4-I, SiC4-II.
const std::vector<FamilySpec>& builtin_families();

// Lookup by name in the builtin catalog; throws UnknownFamily.
const FamilySpec& get_family(const std::string& name);

// Name-keyed collection: builtins first, file-loaded specs replace same-named
// entries in place or append after them.
class FamilyRegistry {
  public:
    static FamilyRegistry builtin();

    void add_or_replace(FamilySpec spec);
    const FamilySpec& get(const std::string& name) const; // UnknownFamily
    bool contains(const std::string& name) const;
    const std::vector<FamilySpec>& all() const { return families_; }

  private:
    std::vector<FamilySpec> families_;
};

// Whether negative evaluated counts abort (throw NegativeCount) or are
// returned as-is for diagnostics.
enum class CountValidation { strict, lenient };

// Evaluate every partition form at integer (p, q), both >= 1. Counts must come
// out rational; zero counts are kept so the caller sees the full key set.
// total_edges is the evaluated sum; claimed_edges the claimed-form value.
DegreePairPartition partition_counts_at(const FamilySpec& fam, long long p, long long q,
                                        CountValidation validation = CountValidation::strict);

// Sum of all partition forms as a piecewise bilinear form. Throws
// RegionMismatch if the pieces split on both axes at once.
PiecewiseForm symbolic_edge_total(const FamilySpec& fam);

// Family description files:
//
//   # comment
//   family NAME
//   vertices: 8pq
//   edges: 12pq - 2p - 3q
//   partition 1 2: 1
//   partition 2 2: 3q - 1 [p=1]
//   partition 2 2: 2p + 2q - 3 [p>1]
//   end
//
// Forms are rational bilinear expressions in p and q ("n/d" coefficients
// allowed, '*' optional). Repeated partition lines for one pair accumulate as
// pieces; their regions must decompose the quadrant. Parsed specs are applied
// to `base` by name (replace or append).
FamilyRegistry load_family_file(std::istream& in, FamilyRegistry base);
FamilyRegistry load_family_file_path(const std::string& path, FamilyRegistry base);

} // namespace sombor
