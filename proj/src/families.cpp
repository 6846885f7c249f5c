#include "sombor/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

namespace sombor {

namespace {

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

std::vector<FamilySpec> make_builtin() {
    std::vector<FamilySpec> fams;

    // Each entry: vertex count, claimed edge total, then the per-degree-pair
    // edge counts. Two families branch near the boundary of the sheet: SiC3-I
    // distinguishes p = 1, SiC4-II distinguishes q = 1.
    fams.push_back({"SiC3-I", bl(8, 0, 0, 0), bl(12, -2, -3, 0),
                    {
                        {{1, 2}, one(bl(0, 0, 0, 2))},
                        {{1, 3}, one(bl(0, 0, 0, 1))},
                        {{2, 2}, split_p(bl(0, 0, 3, -1), bl(0, 2, 2, -3))},
                        {{2, 3}, split_p(bl(0, 0, 6, -4), bl(0, 4, 8, -8))},
                        {{3, 3}, split_p(bl(12, -2, -12, 2), bl(12, -13, -8, 8))},
                    }});

    fams.push_back({"SiC3-II", bl(8, 0, 0, 0), bl(12, -2, -2, 0),
                    {
                        {{1, 3}, one(bl(0, 0, 0, 2))},
                        {{2, 2}, one(bl(0, 2, 0, 1))},
                        {{2, 3}, one(bl(0, 4, 8, -10))},
                        {{3, 3}, one(bl(12, -8, -10, 7))},
                    }});

    fams.push_back({"SiC3-III", bl(8, 0, 0, 0), bl(12, -2, -3, 0),
                    {
                        {{1, 2}, one(bl(0, 0, 0, 1))},
                        {{1, 3}, one(bl(0, 0, 0, 2))},
                        {{2, 2}, one(bl(0, 3, 2, -3))},
                        {{2, 3}, one(bl(0, 6, 4, -8))},
                        {{3, 3}, one(bl(12, -12, -8, 8))},
                    }});

    fams.push_back({"Si2C3-I", bl(10, 0, 0, 0), bl(15, -2, -3, 0),
                    {
                        {{1, 2}, one(bl(0, 0, 0, 1))},
                        {{1, 3}, one(bl(0, 0, 0, 1))},
                        {{2, 2}, one(bl(0, 1, 2, 0))},
                        {{2, 3}, one(bl(0, 6, 8, -9))},
                        {{3, 3}, one(bl(15, -9, -13, 7))},
                    }});

    fams.push_back({"Si2C3-II", bl(10, 0, 0, 0), bl(15, -2, -3, 0),
                    {
                        {{1, 2}, one(bl(0, 0, 0, 2))},
                        {{1, 3}, one(bl(0, 0, 0, 1))},
                        {{2, 2}, one(bl(0, 2, 2, 0))},
                        {{2, 3}, one(bl(0, 8, 8, -14))},
                        {{3, 3}, one(bl(15, -13, -13, 11))},
                    }});

    fams.push_back({"Si2C3-III", bl(10, 0, 0, 0), bl(15, -2, -3, 0),
                    {
                        {{1, 3}, one(bl(0, 0, 0, 2))},
                        {{2, 2}, one(bl(0, 0, 2, 2))},
                        {{2, 3}, one(bl(0, 8, 8, -12))},
                        {{3, 3}, one(bl(15, -10, -13, 8))},
                    }});

    fams.push_back({"SiC4-I", bl(10, 0, 0, 0), bl(15, -4, -2, 1),
                    {
                        {{1, 2}, one(bl(0, 0, 0, 2))},
                        {{1, 3}, one(bl(0, 3, 0, -2))},
                        {{2, 2}, one(bl(0, 1, 2, -2))},
                        {{2, 3}, one(bl(0, 2, 4, -2))},
                        {{3, 3}, one(bl(14, -10, -8, 5))},
                    }});

    fams.push_back({"SiC4-II", bl(10, 0, 0, 0), bl(15, -4, -2, 0),
                    {
                        {{1, 2}, one(bl(0, 0, 0, 2))},
                        {{2, 2}, split_q(bl(0, 0, 5, 2), bl(0, 2, 0, 2))},
                        {{2, 3}, split_q(bl(0, 6, 0, -6), bl(0, 12, 8, -14))},
                        {{3, 3}, split_q(bl(15, -15, -2, 0), bl(12, -10, -18, 0))},
                    }});

    return fams;
}

} // namespace

const std::vector<FamilySpec>& builtin_families() {
    static const std::vector<FamilySpec> fams = make_builtin();
    return fams;
}

const FamilySpec& get_family(const std::string& name) {
    for (const auto& f : builtin_families())
        if (f.name == name) return f;
    throw UnknownFamily(name);
}

FamilyRegistry FamilyRegistry::builtin() {
    FamilyRegistry r;
    r.families_ = builtin_families();
    return r;
}

void FamilyRegistry::add_or_replace(FamilySpec spec) {
    for (auto& f : families_) {
        if (f.name == spec.name) {
            f = std::move(spec);
            return;
        }
    }
    families_.push_back(std::move(spec));
}

const FamilySpec& FamilyRegistry::get(const std::string& name) const {
    for (const auto& f : families_)
        if (f.name == name) return f;
    throw UnknownFamily(name);
}

bool FamilyRegistry::contains(const std::string& name) const {
    return std::any_of(families_.begin(), families_.end(),
                       [&](const FamilySpec& f) { return f.name == name; });
}

DegreePairPartition partition_counts_at(const FamilySpec& fam, long long p, long long q,
                                        CountValidation validation) {
    if (p < 1 || q < 1)
        throw ValidationError("family parameters must satisfy p, q >= 1 (got p=" +
                              std::to_string(p) + ", q=" + std::to_string(q) + ")");
    DegreePairPartition out;
    for (const auto& [pair, pw] : fam.partition) {
        const RadicalNumber v = form_eval(pw, p, q);
        if (!v.is_rational())
            throw ValidationError("edge count for {" + std::to_string(pair.lo) + "," +
                                  std::to_string(pair.hi) + "} in " + fam.name +
                                  " is not rational: " + v.render());
        const Rational c = v.rational_value();
        if (c < 0 && validation == CountValidation::strict)
            throw NegativeCount(fam.name, static_cast<int>(pair.lo), static_cast<int>(pair.hi),
                                p, q, render_rational(c));
        out.counts[pair] = c;
        out.total_edges += c;
    }
    const RadicalNumber n = fam.vertex_form.eval(p, q);
    const RadicalNumber m = fam.claimed_edge_form.eval(p, q);
    if (!n.is_rational() || !m.is_rational())
        throw ValidationError("vertex or edge form of " + fam.name + " is not rational");
    out.vertex_count = n.rational_value();
    out.claimed_edges = m.rational_value();
    return out;
}

PiecewiseForm symbolic_edge_total(const FamilySpec& fam) {
    PiecewiseForm total = PiecewiseForm::single(BilinearForm{});
    for (const auto& [pair, pw] : fam.partition) total = piecewise_add(total, pw);
    return total;
}

// ---------------------------------------------------------------------------
// family description files

namespace {

[[noreturn]] void file_fail(std::size_t line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// "12pq - 2p - 3q + 7", "1/2 p", "2*q" -> BilinearForm with rational coefficients
BilinearForm parse_bilinear_text(const std::string& text, std::size_t line_no) {
    BilinearForm out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == n) file_fail(line_no, "empty form");
    bool any_term = false;
    while (true) {
        skip_ws();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any_term) {
            file_fail(line_no, std::string("expected '+' or '-' before '") + text[i] + "'");
        }
        Rational coeff = 1;
        bool saw_number = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            saw_number = true;
            BigInt num = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                num = num * 10 + (text[i++] - '0');
            BigInt den = 1;
            if (i < n && text[i] == '/') {
                ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    file_fail(line_no, "expected denominator digits after '/'");
                den = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                    den = den * 10 + (text[i++] - '0');
                if (den == 0) file_fail(line_no, "zero denominator");
            }
            coeff = Rational(num, den);
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        std::string var;
        while (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) var += text[i++];
        coeff *= sign;
        if (var == "pq")
            out.pq += RadicalNumber::from_rational(coeff);
        else if (var == "p")
            out.p += RadicalNumber::from_rational(coeff);
        else if (var == "q")
            out.q += RadicalNumber::from_rational(coeff);
        else if (var.empty() && saw_number)
            out.c += RadicalNumber::from_rational(coeff);
        else if (var.empty())
            file_fail(line_no, "expected a coefficient or p/q/pq");
        else
            file_fail(line_no, "unknown variable '" + var + "' (expected p, q, or pq)");
        any_term = true;
    }
    return out;
}

Region parse_region_text(const std::string& text, std::size_t line_no) {
    Region r; // both axes default to >= 1
    std::istringstream parts(text);
    std::string cond;
    while (std::getline(parts, cond, ',')) {
        cond = trim(cond);
        if (cond.empty()) file_fail(line_no, "empty region condition");
        const char axis = cond[0];
        if (axis != 'p' && axis != 'q')
            file_fail(line_no, "region condition must start with p or q: '" + cond + "'");
        std::string rest = trim(cond.substr(1));
        Cond c;
        if (rest == "=1")
            c = Cond::eq1;
        else if (rest == ">1")
            c = Cond::gt1;
        else if (rest == ">=1")
            c = Cond::ge1;
        else
            file_fail(line_no, "region condition must be =1, >1, or >=1: '" + cond + "'");
        (axis == 'p' ? r.p_cond : r.q_cond) = c;
    }
    return r;
}

struct PendingFamily {
    std::string name;
    std::optional<BilinearForm> vertices;
    std::optional<BilinearForm> edges;
    std::map<DegreePair, PiecewiseForm> partition;
    std::size_t start_line = 0;
};

void finish_family(PendingFamily& pf, FamilyRegistry& reg, std::size_t line_no) {
    if (!pf.vertices) file_fail(line_no, "family " + pf.name + " is missing 'vertices:'");
    if (!pf.edges) file_fail(line_no, "family " + pf.name + " is missing 'edges:'");
    if (pf.partition.empty()) file_fail(line_no, "family " + pf.name + " has no partition lines");
    for (auto& [pair, pw] : pf.partition) {
        try {
            normalize_pieces(pw); // rejects overlapping or cross-axis regions
        } catch (const RegionMismatch& e) {
            throw ValidationError("family " + pf.name + ", pair {" + std::to_string(pair.lo) +
                                  "," + std::to_string(pair.hi) + "}: " + e.what());
        }
    }
    reg.add_or_replace(FamilySpec{pf.name, *pf.vertices, *pf.edges, std::move(pf.partition)});
}

} // namespace

FamilyRegistry load_family_file(std::istream& in, FamilyRegistry base) {
    std::optional<PendingFamily> current;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line.rfind("family", 0) == 0 &&
            (line.size() == 6 || std::isspace(static_cast<unsigned char>(line[6])))) {
            if (current) file_fail(line_no, "missing 'end' before new family");
            const std::string name = trim(line.substr(6));
            if (name.empty()) file_fail(line_no, "family needs a name");
            current = PendingFamily{};
            current->name = name;
            current->start_line = line_no;
            continue;
        }
        if (!current) file_fail(line_no, "expected 'family NAME', got '" + line + "'");

        if (line == "end") {
            finish_family(*current, base, line_no);
            current.reset();
            continue;
        }
        if (line.rfind("vertices:", 0) == 0) {
            current->vertices = parse_bilinear_text(line.substr(9), line_no);
            continue;
        }
        if (line.rfind("edges:", 0) == 0) {
            current->edges = parse_bilinear_text(line.substr(6), line_no);
            continue;
        }
        if (line.rfind("partition", 0) == 0) {
            std::istringstream head(line.substr(9));
            long long i = 0, j = 0;
            char colon = 0;
            if (!(head >> i >> j >> colon) || colon != ':')
                file_fail(line_no, "expected 'partition I J: FORM [region]'");
            if (i < 1 || i > 3 || j < 1 || j > 3)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": degrees must be in {1,2,3}");
            std::string rest;
            std::getline(head, rest);
            rest = trim(rest);
            Region region = region_all();
            if (!rest.empty() && rest.back() == ']') {
                const std::size_t open = rest.rfind('[');
                if (open == std::string::npos) file_fail(line_no, "unmatched ']' in region");
                region = parse_region_text(rest.substr(open + 1, rest.size() - open - 2), line_no);
                rest = trim(rest.substr(0, open));
            }
            const BilinearForm form = parse_bilinear_text(rest, line_no);
            current->partition[DegreePair(i, j)].pieces.emplace_back(region, form);
            continue;
        }
        file_fail(line_no, "unrecognized directive: '" + line + "'");
    }
    if (current)
        file_fail(line_no, "unexpected end of file: family " + current->name + " not closed with 'end'");
    return base;
}

FamilyRegistry load_family_file_path(const std::string& path, FamilyRegistry base) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open family file: " + path);
    return load_family_file(in, std::move(base));
}

} // namespace sombor
