#pragma once

#include "sombor/dsl.hpp"
#include "sombor/families.hpp"
#include "sombor/graph.hpp"
#include "sombor/theorems.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sombor {

// A degree-based index: an edge weight summed over all edges. The weight is
// called with du <= dv (indices here are symmetric by definition), and returns
// an exact radical value whenever it has one.
struct IndexDefinition {
    std::string name;
    bool radical_closed = true; // declared; exactness is still checked per use
    std::function<NumericValue(long long du, long long dv)> weight;
};

// sombor, reduced_sombor, m1, m2, isi. (The average index is a separate
// operation below: it depends on global graph data, not just edge degrees.)
const std::vector<IndexDefinition>& builtin_catalog();
const IndexDefinition& get_index(const std::string& name); // Error if unknown

// Wrap a parsed weight expression as an index.
IndexDefinition make_dsl_index(std::string name, WeightExprPtr expr);

// Exact when every edge weight is; otherwise the double mirror carries on.
NumericValue index_on_graph(const IndexDefinition& idx, const Graph& g);
NumericValue index_on_partition(const IndexDefinition& idx, const DegreePairPartition& part);

// Closed form of the index over a family's parameter space: sum of
// count-form * weight over the partition. Throws NotRadicalClosed if any
// needed weight has no exact radical value.
PiecewiseForm symbolic_index(const IndexDefinition& idx, const FamilySpec& fam);

// Which edge total feeds the average degree 2m/n: the partition's own sum, or
// the separately claimed total carried by the partition.
enum class MChoice { partition_sum, claimed };

// sum of sqrt((du - 2m/n)^2 + (dv - 2m/n)^2); real-valued (not radical-closed
// in general). The inner squares are exact rationals, so a regular graph gives
// exactly 0.0. Throws ZeroVertices when n = 0.
double average_sombor_on_partition(const DegreePairPartition& part,
                                   MChoice choice = MChoice::partition_sum);

// The claimed recovery formula for the average index, evaluated as stated:
// sqrt(2) * (E1*sqrt((A-3/2)^2+1/4) + E2*sqrt((A-1)^2+1) + E3*|A-1|
//            + E4*sqrt((A-1/2)^2+1/4) + E5*A)
// with counts and A from the table row. The E3 factor is printed without the
// absolute value; |A-1| is used since a plain (A-1) is negative for every
// valid (p,q) and cannot be meant.
double thm17_formula_eval(const Thm17Entry& entry, long long p, long long q);

} // namespace sombor
