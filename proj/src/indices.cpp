#include "sombor/indices.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace sombor {

namespace {

Rational square_sum(long long du, long long dv) {
    return Rational(du) * du + Rational(dv) * dv;
}

NumericValue sombor_weight(long long du, long long dv) {
    return nv_exact(RadicalNumber::sqrt_of(square_sum(du, dv)));
}

NumericValue reduced_sombor_weight(long long du, long long dv) {
    return nv_exact(RadicalNumber::sqrt_of(square_sum(du - 1, dv - 1)));
}

NumericValue m1_weight(long long du, long long dv) {
    return nv_exact(RadicalNumber::from_rational(Rational(du) + dv));
}

NumericValue m2_weight(long long du, long long dv) {
    return nv_exact(RadicalNumber::from_rational(Rational(du) * dv));
}

NumericValue isi_weight(long long du, long long dv) {
    return nv_exact(RadicalNumber::from_rational(Rational(Rational(du) * dv) /
                                                 (Rational(du) + dv)));
}

} // namespace

const std::vector<IndexDefinition>& builtin_catalog() {
    static const std::vector<IndexDefinition> catalog = {
        {"sombor", true, sombor_weight},
        {"reduced_sombor", true, reduced_sombor_weight},
        {"m1", true, m1_weight},
        {"m2", true, m2_weight},
        {"isi", true, isi_weight},
    };
    return catalog;
}

const IndexDefinition& get_index(const std::string& name) {
    for (const auto& idx : builtin_catalog())
        if (idx.name == name) return idx;
    // accept the hyphenated spelling too
    if (name == "reduced-sombor") return get_index("reduced_sombor");
    throw Error("unknown index: " + name +
                " (expected sombor, reduced_sombor, m1, m2, isi, or average_sombor)");
}

IndexDefinition make_dsl_index(std::string name, WeightExprPtr expr) {
    IndexDefinition def;
    def.name = std::move(name);
    def.radical_closed = false; // unknown until evaluated
    def.weight = [expr = std::move(expr)](long long du, long long dv) {
        return eval_weight(*expr, du, dv);
    };
    return def;
}

NumericValue index_on_graph(const IndexDefinition& idx, const Graph& g) {
    const auto deg = g.degrees();
    NumericValue sum = nv_exact(RadicalNumber());
    for (const auto& [u, v] : g.edges) {
        const DegreePair d(deg[static_cast<std::size_t>(u)], deg[static_cast<std::size_t>(v)]);
        sum = nv_add(sum, idx.weight(d.lo, d.hi));
    }
    return sum;
}

NumericValue index_on_partition(const IndexDefinition& idx, const DegreePairPartition& part) {
    NumericValue sum = nv_exact(RadicalNumber());
    for (const auto& [pair, count] : part.counts)
        sum = nv_add(sum, nv_scale(idx.weight(pair.lo, pair.hi), count));
    return sum;
}

PiecewiseForm symbolic_index(const IndexDefinition& idx, const FamilySpec& fam) {
    PiecewiseForm total = PiecewiseForm::single(BilinearForm{});
    for (const auto& [pair, pw] : fam.partition) {
        const NumericValue w = idx.weight(pair.lo, pair.hi);
        if (!w.is_exact())
            throw NotRadicalClosed("index " + idx.name + " has no exact radical weight at {" +
                                   std::to_string(pair.lo) + "," + std::to_string(pair.hi) + "}");
        PiecewiseForm scaled = pw;
        for (auto& [region, form] : scaled.pieces) form = form.scaled(*w.exact);
        total = piecewise_add(total, scaled);
    }
    return total;
}

double average_sombor_on_partition(const DegreePairPartition& part, MChoice choice) {
    if (part.vertex_count == 0) throw ZeroVertices();
    if (part.vertex_count < 0)
        throw ValidationError("negative vertex count: " + render_rational(part.vertex_count));
    const Rational m = (choice == MChoice::claimed && part.claimed_edges)
                           ? *part.claimed_edges
                           : part.total_edges;
    const Rational t = Rational(2) * m / part.vertex_count;
    double sum = 0.0;
    for (const auto& [pair, count] : part.counts) {
        const Rational a = Rational(pair.lo) - t;
        const Rational b = Rational(pair.hi) - t;
        const Rational inner = a * a + b * b; // exact, so regular graphs sum to exactly 0
        sum += to_double(count) * std::sqrt(to_double(inner));
    }
    return sum;
}

double thm17_formula_eval(const Thm17Entry& entry, long long p, long long q) {
    double e[5];
    for (int k = 0; k < 5; ++k) {
        const RadicalNumber v = form_eval(entry.e[static_cast<std::size_t>(k)], p, q);
        if (!v.is_rational())
            throw ValidationError("class count E" + std::to_string(k + 1) + " of " + entry.family +
                                  " is not rational");
        e[k] = to_double(v.rational_value());
    }
    const Rational A = entry.a_form.eval(p, q);
    const Rational a1 = A - Rational(3, 2), a2 = A - 1, a4 = A - Rational(1, 2);
    const double t1 = std::sqrt(to_double(a1 * a1 + Rational(1, 4)));
    const double t2 = std::sqrt(to_double(a2 * a2 + 1));
    const double t3 = std::abs(to_double(a2));
    const double t4 = std::sqrt(to_double(a4 * a4 + Rational(1, 4)));
    const double t5 = to_double(A);
    return std::sqrt(2.0) * (e[0] * t1 + e[1] * t2 + e[2] * t3 + e[3] * t4 + e[4] * t5);
}

} // namespace sombor
