#include "sombor/forms.hpp"

#include <sstream>

namespace sombor {

RadicalNumber BilinearForm::eval(long long pv, long long qv) const {
    RadicalNumber out = pq * RadicalNumber::from_rational(Rational(pv) * Rational(qv));
    out += p * RadicalNumber::from_int(pv);
    out += q * RadicalNumber::from_int(qv);
    out += c;
    return out;
}

namespace {

// One rendered summand: coefficient times "pq"/"p"/"q" (or the bare constant).
// Single-term coefficients print inline with the sign hoisted to the joiner;
// multi-term coefficients keep their signs inside parentheses.
struct RenderedTerm {
    bool negative;
    std::string body;
};

RenderedTerm render_coeff(const RadicalNumber& coeff, const char* suffix) {
    const bool has_suffix = suffix[0] != '\0';
    if (coeff.terms().size() > 1) {
        std::string body = "(" + coeff.render() + ")";
        if (has_suffix) body += std::string("*") + suffix;
        return {false, body};
    }
    auto [k, c] = *coeff.terms().begin();
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    std::ostringstream os;
    if (k == 1) {
        if (mag == 1 && has_suffix)
            os << suffix;
        else {
            os << render_rational(mag);
            if (has_suffix) os << "*" << suffix;
        }
    } else {
        if (mag != 1) os << render_rational(mag) << "*";
        os << "sqrt(" << k << ")";
        if (has_suffix) os << "*" << suffix;
    }
    return {neg, os.str()};
}

} // namespace

std::string BilinearForm::render() const {
    const std::pair<const RadicalNumber*, const char*> parts[] = {
        {&pq, "pq"}, {&p, "p"}, {&q, "q"}, {&c, ""}};
    std::string out;
    for (const auto& [coeff, suffix] : parts) {
        if (coeff->is_zero()) continue;
        RenderedTerm t = render_coeff(*coeff, suffix);
        if (out.empty())
            out = (t.negative ? "-" : "") + t.body;
        else
            out += (t.negative ? " - " : " + ") + t.body;
    }
    return out.empty() ? "0" : out;
}

bool Region::contains(long long pv, long long qv) const {
    auto ok = [](Cond c, long long v) {
        switch (c) {
            case Cond::eq1: return v == 1;
            case Cond::gt1: return v > 1;
            case Cond::ge1: return v >= 1;
        }
        return false;
    };
    return ok(p_cond, pv) && ok(q_cond, qv);
}

std::string Region::render() const {
    auto one = [](Cond c, const char* var) {
        switch (c) {
            case Cond::eq1: return std::string(var) + "=1";
            case Cond::gt1: return std::string(var) + ">1";
            case Cond::ge1: return std::string(var) + ">=1";
        }
        return std::string(var) + "?";
    };
    return one(p_cond, "p") + ", " + one(q_cond, "q");
}

bool PiecewiseForm::is_zero() const {
    for (const auto& [r, f] : pieces)
        if (!f.is_zero()) return false;
    return true;
}

std::string PiecewiseForm::render() const {
    std::string out;
    for (const auto& [r, f] : pieces) {
        if (!out.empty()) out += "; ";
        out += f.render() + " [" + r.render() + "]";
    }
    return out;
}

RadicalNumber form_eval(const PiecewiseForm& f, long long p, long long q) {
    for (const auto& [region, form] : f.pieces)
        if (region.contains(p, q)) return form.eval(p, q);
    throw NoCoveringPiece("no region covers (p,q)=(" + std::to_string(p) + "," +
                          std::to_string(q) + ") in form " + f.render());
}

AlignedPieces normalize_pieces(const PiecewiseForm& f) {
    if (f.pieces.size() == 1 && f.pieces[0].first == region_all())
        return {SplitAxis::none, f.pieces[0].second, f.pieces[0].second};
    if (f.pieces.size() == 2) {
        const auto& a = f.pieces[0];
        const auto& b = f.pieces[1];
        auto match = [&](Region eq, Region gt) -> std::optional<std::pair<BilinearForm, BilinearForm>> {
            if (a.first == eq && b.first == gt) return std::make_pair(a.second, b.second);
            if (a.first == gt && b.first == eq) return std::make_pair(b.second, a.second);
            return std::nullopt;
        };
        if (auto m = match(region_p_eq1(), region_p_gt1()))
            return {SplitAxis::p, m->first, m->second};
        if (auto m = match(region_q_eq1(), region_q_gt1()))
            return {SplitAxis::q, m->first, m->second};
    }
    throw RegionMismatch("unsupported region decomposition: " + f.render());
}

PiecewiseForm to_piecewise(const AlignedPieces& a) {
    PiecewiseForm out;
    switch (a.axis) {
        case SplitAxis::none:
            out.pieces.emplace_back(region_all(), a.on_eq1);
            break;
        case SplitAxis::p:
            out.pieces.emplace_back(region_p_eq1(), a.on_eq1);
            out.pieces.emplace_back(region_p_gt1(), a.on_gt1);
            break;
        case SplitAxis::q:
            out.pieces.emplace_back(region_q_eq1(), a.on_eq1);
            out.pieces.emplace_back(region_q_gt1(), a.on_gt1);
            break;
    }
    return out;
}

namespace {

std::optional<PiecewiseForm> combine(const PiecewiseForm& a, const PiecewiseForm& b, int sign) {
    AlignedPieces na = normalize_pieces(a);
    AlignedPieces nb = normalize_pieces(b);
    // an unsplit form refines onto the other operand's axis; p-vs-q cannot align
    SplitAxis axis = na.axis;
    if (axis == SplitAxis::none) axis = nb.axis;
    if (nb.axis != SplitAxis::none && nb.axis != axis) return std::nullopt;

    auto apply = [&](const BilinearForm& x, const BilinearForm& y) {
        return sign > 0 ? x + y : x - y;
    };
    AlignedPieces out;
    out.axis = axis;
    out.on_eq1 = apply(na.on_eq1, nb.on_eq1);
    out.on_gt1 = apply(na.on_gt1, nb.on_gt1);
    return to_piecewise(out);
}

} // namespace

std::optional<PiecewiseForm> try_piecewise_add(const PiecewiseForm& a, const PiecewiseForm& b) {
    return combine(a, b, +1);
}

std::optional<PiecewiseForm> try_piecewise_sub(const PiecewiseForm& a, const PiecewiseForm& b) {
    return combine(a, b, -1);
}

PiecewiseForm piecewise_add(const PiecewiseForm& a, const PiecewiseForm& b) {
    if (auto r = try_piecewise_add(a, b)) return *r;
    throw RegionMismatch("incompatible region decompositions: [" + a.render() + "] vs [" +
                         b.render() + "]");
}

PiecewiseForm piecewise_sub(const PiecewiseForm& a, const PiecewiseForm& b) {
    if (auto r = try_piecewise_sub(a, b)) return *r;
    throw RegionMismatch("incompatible region decompositions: [" + a.render() + "] vs [" +
                         b.render() + "]");
}

} // namespace sombor
