#pragma once

#include "sombor/errors.hpp"
#include "sombor/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

// Unordered degree pair, stored sorted so {2,3} and {3,2} are the same key.
struct DegreePair {
    long long lo = 0;
    long long hi = 0;

    DegreePair() = default;
    DegreePair(long long a, long long b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

    auto operator<=>(const DegreePair&) const = default;
};

// Edge tally by endpoint-degree pair. Counts are exact rationals: explicit
// graphs always produce integers, while parametric families evaluate their
// counting forms here and those stay exact too.
struct DegreePairPartition {
    std::map<DegreePair, Rational> counts;
    Rational total_edges = 0;  // always the sum of counts
    Rational vertex_count = 0;
    // Family models carry their separately stated edge total for auditing;
    // for explicit graphs it equals total_edges.
    std::optional<Rational> claimed_edges;
};

struct Graph {
    std::int64_t vertex_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges; // normalized u < v

    std::vector<std::int64_t> degrees() const;
    bool is_connected() const; // diagnostic only; loading never requires it
};

// Edge-list text: optional first line "# n m"; other "#" lines are comments;
// each edge line is two whitespace-separated nonnegative vertex ids.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_text(const std::string& text);

DegreePairPartition degree_pair_partition(const Graph& g);

} // namespace sombor
