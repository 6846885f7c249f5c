#include <doctest.h>

#include "sombor/audit.hpp"
#include "oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace sombor;

namespace {

const FamilyRegistry& reg() {
    static const FamilyRegistry r = FamilyRegistry::builtin();
    return r;
}

const oracle::FamilyTable& fam_table(const std::string& name) {
    for (const auto& t : oracle::family_tables())
        if (t.name == name) return t;
    throw std::runtime_error("no oracle table " + name);
}

oracle::Poly branch_total(const std::array<oracle::Poly, 5>& counts) {
    oracle::Poly t;
    for (const auto& c : counts) t = t + c;
    return t;
}

// engine piecewise form == the oracle's per-branch vectors (both scaled by 60)
void expect_branches(const PiecewiseForm& engine, char axis,
                     const oracle::FormVec& eq1, const oracle::FormVec& gt1) {
    const AlignedPieces a = normalize_pieces(engine);
    if (a.axis == SplitAxis::none) {
        CHECK(oracle::formvec_from_bilinear(a.on_eq1) == eq1);
        if (axis != 'n') CHECK(oracle::formvec_from_bilinear(a.on_eq1) == gt1);
    } else {
        CHECK(a.axis == (axis == 'p' ? SplitAxis::p : SplitAxis::q));
        CHECK(oracle::formvec_from_bilinear(a.on_eq1) == eq1);
        CHECK(oracle::formvec_from_bilinear(a.on_gt1) == gt1);
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// one shared full-audit run; several cases inspect it
const AuditReport& full_report() {
    static const AuditReport r = run_full_audit(reg(), {1, "2025-06-01T00:00:00Z"});
    return r;
}

const Finding& find_in(const AuditReport& r, const std::string& id, const std::string& family) {
    for (const auto& f : r.findings)
        if (f.check_id == id && f.family == family) return f;
    throw std::runtime_error("no finding " + id + "/" + family);
}

} // namespace

TEST_SUITE("edge-total check") {
    TEST_CASE("difference is the partition sum minus the claimed count") {
        for (const auto& ref : oracle::family_tables()) {
            CAPTURE(ref.name);
            const Finding f = check_edge_total(reg().get(ref.name));
            CHECK(f.check_id == "edge-total");
            CHECK(f.family == ref.name);
            REQUIRE(f.symbolic_difference.has_value());

            oracle::FormVec deq1, dgt1;
            deq1.comp[0] = (branch_total(ref.eq1) - ref.claimed_edges).times(60);
            dgt1.comp[0] = (branch_total(ref.branch(false)) - ref.claimed_edges).times(60);
            expect_branches(*f.symbolic_difference, ref.axis, deq1, dgt1);

            const bool agrees = deq1.is_zero() && dgt1.is_zero();
            CHECK(f.verdict == (agrees ? Verdict::match : Verdict::mismatch));
            if (agrees)
                CHECK(f.note == "partition sum reproduces the claimed edge count");
            else
                CHECK(contains(f.note, "but the claimed edge count is"));
            CHECK(f.numeric_samples.size() == 25); // the 5x5 sample grid
        }
    }

    TEST_CASE("the five families whose printed totals disagree") {
        for (const char* name : {"SiC3-I", "SiC3-III", "Si2C3-II", "SiC4-I", "SiC4-II"})
            CHECK(check_edge_total(reg().get(name)).verdict == Verdict::mismatch);
        for (const char* name : {"SiC3-II", "Si2C3-I", "Si2C3-III"})
            CHECK(check_edge_total(reg().get(name)).verdict == Verdict::match);
    }

    TEST_CASE("specific rendered differences") {
        const Finding a = check_edge_total(reg().get("SiC3-III"));
        REQUIRE(a.symbolic_difference.has_value());
        CHECK(a.symbolic_difference->render() == "-p + q [p>=1, q>=1]");

        const Finding b = check_edge_total(reg().get("SiC3-I"));
        REQUIRE(b.symbolic_difference.has_value());
        CHECK(b.symbolic_difference->render() == "0 [p=1, q>=1]; -5*p + 5*q [p>1, q>=1]");
    }
}

TEST_SUITE("stated-form checks") {
    TEST_CASE("difference equals independent derivation minus the stated form") {
        for (const auto& ref : oracle::stated_claims()) {
            CAPTURE(ref.id);
            const Finding f = check_theorem(get_theorem_claim(ref.id), reg());
            CHECK(f.family == ref.family);

            const auto& fam = fam_table(ref.family);
            if (ref.id == 15 || ref.id == 16) {
                // counting formulas split on q, the stated forms on p
                CHECK(f.verdict == Verdict::region_mismatch);
                CHECK_FALSE(f.symbolic_difference.has_value());
                CHECK(contains(f.note, "the derived form branches on q"));
                CHECK(contains(f.note, "while the stated form branches on p"));
                continue;
            }

            const auto& w = oracle::weights(ref.index);
            const oracle::FormVec deq1 =
                oracle::derive(fam.branch(true), w) - oracle::formvec_from_stated(ref.eq1);
            const oracle::FormVec dgt1 =
                oracle::derive(fam.branch(false), w) -
                oracle::formvec_from_stated(ref.axis == 'n' ? ref.eq1 : ref.gt1);

            REQUIRE(f.symbolic_difference.has_value());
            expect_branches(*f.symbolic_difference, fam.axis, deq1, dgt1);

            const bool agrees = deq1.is_zero() && dgt1.is_zero();
            CHECK(f.verdict == (agrees ? Verdict::match : Verdict::mismatch));
            CHECK(contains(f.note, agrees ? "derived and stated forms agree coefficientwise"
                                          : "derived minus stated is"));
        }
    }

    TEST_CASE("frozen verdicts per claim") {
        const std::map<int, Verdict> expected = {
            {1, Verdict::match},           {2, Verdict::match},
            {3, Verdict::match},           {4, Verdict::mismatch},
            {5, Verdict::mismatch},        {6, Verdict::match},
            {7, Verdict::match},           {8, Verdict::mismatch},
            {9, Verdict::mismatch},        {10, Verdict::mismatch},
            {11, Verdict::match},          {12, Verdict::match},
            {13, Verdict::mismatch},       {14, Verdict::mismatch},
            {15, Verdict::region_mismatch}, {16, Verdict::region_mismatch},
        };
        for (const auto& [id, verdict] : expected) {
            CAPTURE(id);
            CHECK(check_theorem(get_theorem_claim(id), reg()).verdict == verdict);
        }
    }

    TEST_CASE("specific rendered differences") {
        const Finding f5 = check_theorem(get_theorem_claim(5), reg());
        REQUIRE(f5.symbolic_difference.has_value());
        CHECK(f5.symbolic_difference->render() == "2*sqrt(2)*q [p>=1, q>=1]");

        const Finding f10 = check_theorem(get_theorem_claim(10), reg());
        REQUIRE(f10.symbolic_difference.has_value());
        CHECK(f10.symbolic_difference->render() == "1 [p>=1, q>=1]");
    }
}

TEST_SUITE("recovery-row check") {
    TEST_CASE("first-family row conflicts with its own partition") {
        const Finding f = check_thm17_row(get_thm17_entry("SiC3-I"), reg());
        CHECK(f.verdict == Verdict::mismatch);
        REQUIRE(f.symbolic_difference.has_value());
        // partition minus table for the {2,2} class
        CHECK(f.symbolic_difference->render() == "q [p=1, q>=1]; 0 [p>1, q>=1]");
        CHECK(contains(f.note, "E3 {2,2}: table gives"));
        CHECK(contains(f.note, "2q - 1"));
        CHECK(contains(f.note,
                       "A equals 3 - 2m/n for the claimed edge total (not the partition sum)"));
        CHECK(contains(f.note,
                       "closest reading is m = the claimed edge total "
                       "(max relative deviation 0.0561598)"));
        CHECK(contains(f.note, "9 grid points skipped (negative counts)"));
        CHECK(contains(f.note, "|A - 1|"));
    }

    TEST_CASE("seventh-family row states an A matching neither edge total") {
        const Finding f = check_thm17_row(get_thm17_entry("SiC4-I"), reg());
        CHECK(f.verdict == Verdict::mismatch);
        CHECK_FALSE(f.symbolic_difference.has_value()); // class counts all agree
        CHECK(contains(f.note, "equals 3 - 2m/n for neither edge total"));
    }

    TEST_CASE("consistent rows reproduce the definition, with the right m") {
        const std::map<std::string, std::string> m_note = {
            {"SiC3-II", "for both readings of m"},
            {"SiC3-III", "with m = the partition sum"},
            {"Si2C3-I", "for both readings of m"},
            {"Si2C3-II", "with m = the partition sum"},
            {"Si2C3-III", "for both readings of m"},
            {"SiC4-II", "with m = the claimed edge total"},
        };
        for (const auto& [family, note] : m_note) {
            CAPTURE(family);
            const Finding f = check_thm17_row(get_thm17_entry(family), reg());
            CHECK(f.verdict == Verdict::match);
            CHECK(contains(f.note, "the formula reproduces the definition"));
            CHECK(contains(f.note, note));
        }
        CHECK(contains(check_thm17_row(get_thm17_entry("SiC4-II"), reg()).note,
                       "21 grid points skipped (negative counts)"));
    }
}

TEST_SUITE("negative-count check") {
    TEST_CASE("two families leave their validity range") {
        const Finding a = check_negative_counts(reg().get("SiC3-I"));
        CHECK(a.verdict == Verdict::mismatch);
        CHECK(contains(a.note, "E{3,3} = -2 first at (p,q)=(2,1)"));
        CHECK(contains(a.note, "29 negative entries on [1,30]^2"));
        REQUIRE_FALSE(a.numeric_samples.empty());
        CHECK(a.numeric_samples.size() == 10); // capped
        CHECK(a.numeric_samples[0].p == 2);
        CHECK(a.numeric_samples[0].q == 1);
        CHECK(a.numeric_samples[0].lhs == -2.0);

        const Finding b = check_negative_counts(reg().get("SiC4-II"));
        CHECK(b.verdict == Verdict::mismatch);
        CHECK(contains(b.note, "E{3,3} = -2 first at (p,q)=(1,1)"));
        CHECK(contains(b.note, "61 negative entries on [1,30]^2"));
    }

    TEST_CASE("the other six stay nonnegative") {
        for (const char* name :
             {"SiC3-II", "SiC3-III", "Si2C3-I", "Si2C3-II", "Si2C3-III", "SiC4-I"}) {
            CAPTURE(name);
            const Finding f = check_negative_counts(reg().get(name));
            CHECK(f.verdict == Verdict::match);
            CHECK(f.note == "all counting formulas stay nonnegative on [1,30]^2");
            CHECK(f.numeric_samples.empty());
        }
    }
}

TEST_SUITE("inequality check") {
    TEST_CASE("the index bounds hold on every sampled sheet") {
        for (const auto& ref : oracle::family_tables()) {
            CAPTURE(ref.name);
            const Finding f = check_inequalities(reg().get(ref.name));
            CHECK(f.verdict == Verdict::match);
            CHECK(contains(f.note, "So >= M1/2, So >= M2/3, So >= 2*ISI checked at"));
            CHECK(contains(f.note, "smallest margin"));
            CHECK_FALSE(contains(f.note, "violated"));
        }
    }

    TEST_CASE("points with negative counts are excluded, and the note says so") {
        CHECK(contains(check_inequalities(reg().get("SiC3-II")).note,
                       "checked at 100 points of [1,10]^2"));
        const Finding f = check_inequalities(reg().get("SiC3-I"));
        CHECK(contains(f.note, "checked at 91 points of [1,10]^2"));
        CHECK(contains(f.note, "9 points skipped (negative counts)"));
        CHECK(contains(f.note, "smallest margin 6.50237 at (1,1)"));
        CHECK(contains(check_inequalities(reg().get("SiC4-II")).note,
                       "checked at 79 points of [1,10]^2"));
    }
}

TEST_SUITE("classical closed-form check") {
    TEST_CASE("exact targets are reproduced coefficientwise") {
        for (const char* t : {"m1", "m2"}) {
            CAPTURE(t);
            const Finding f = check_closed_form(get_thm18_claim(t), reg());
            CHECK(f.verdict == Verdict::match);
            REQUIRE(f.symbolic_difference.has_value());
            CHECK(f.symbolic_difference->is_zero());
            CHECK(f.note == "exact recomputation reproduces the stated coefficients");
        }
    }

    TEST_CASE("the rounded ISI form sits inside the decimal tolerance") {
        const Finding f = check_closed_form(get_thm18_claim("isi"), reg());
        CHECK(f.verdict == Verdict::match);
        CHECK(contains(f.note, "stated decimal form checked coefficientwise against the exact"));
        CHECK(contains(f.note, "largest coefficient deviation 0.00666667 (tolerance 0.05)"));
    }

    TEST_CASE("the stated decimal form misses every coefficient") {
        const Finding f = check_closed_form(get_thm18_claim("sombor-approx"), reg());
        CHECK(f.verdict == Verdict::mismatch);
        CHECK(contains(f.note, "pq coefficient off by 21.1896"));
        CHECK(contains(f.note, "p coefficient off by 3.09203"));
        CHECK(contains(f.note, "q coefficient off by 4.55306"));
        CHECK(contains(f.note, "constant term off by 35.8031"));
        CHECK(contains(f.note, "largest coefficient deviation 35.8031"));
        CHECK(f.numeric_samples.size() == 25);
    }
}

TEST_SUITE("full audit") {
    TEST_CASE("fifty-two findings, sorted, with the frozen verdict split") {
        const AuditReport& r = full_report();
        REQUIRE(r.findings.size() == 52);
        CHECK(r.summary.match == 33);
        CHECK(r.summary.mismatch == 17);
        CHECK(r.summary.region_mismatch == 2);
        CHECK(r.summary.not_applicable == 0);
        CHECK(r.summary.total() == 52);
        CHECK(r.tool_version == "0.1.0");
        CHECK(r.timestamp == "2025-06-01T00:00:00Z");
        CHECK(std::is_sorted(r.findings.begin(), r.findings.end(),
                             [](const Finding& a, const Finding& b) {
                                 if (a.check_id != b.check_id) return a.check_id < b.check_id;
                                 return a.family < b.family;
                             }));
    }

    TEST_CASE("every finding carries its expected verdict") {
        const AuditReport& r = full_report();
        auto expect = [&](const std::string& id, const std::string& family, Verdict v) {
            CAPTURE(id);
            CAPTURE(family);
            CHECK(find_in(r, id, family).verdict == v);
        };

        const std::map<std::string, Verdict> edge = {
            {"SiC3-I", Verdict::mismatch},   {"SiC3-II", Verdict::match},
            {"SiC3-III", Verdict::mismatch}, {"Si2C3-I", Verdict::match},
            {"Si2C3-II", Verdict::mismatch}, {"Si2C3-III", Verdict::match},
            {"SiC4-I", Verdict::mismatch},   {"SiC4-II", Verdict::mismatch},
        };
        for (const auto& [family, v] : edge) expect("edge-total", family, v);

        for (const auto& ref : oracle::family_tables()) {
            expect("inequalities", ref.name, Verdict::match);
            expect("negative-count", ref.name,
                   (ref.name == "SiC3-I" || ref.name == "SiC4-II") ? Verdict::mismatch
                                                                   : Verdict::match);
            expect("thm17-row", ref.name,
                   (ref.name == "SiC3-I" || ref.name == "SiC4-I") ? Verdict::mismatch
                                                                  : Verdict::match);
        }

        const std::map<int, Verdict> thm = {
            {1, Verdict::match},           {2, Verdict::match},
            {3, Verdict::match},           {4, Verdict::mismatch},
            {5, Verdict::mismatch},        {6, Verdict::match},
            {7, Verdict::match},           {8, Verdict::mismatch},
            {9, Verdict::mismatch},        {10, Verdict::mismatch},
            {11, Verdict::match},          {12, Verdict::match},
            {13, Verdict::mismatch},       {14, Verdict::mismatch},
            {15, Verdict::region_mismatch}, {16, Verdict::region_mismatch},
        };
        for (const auto& [id, v] : thm) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "theorem-%02d", id);
            expect(buf, get_theorem_claim(id).family, v);
        }

        expect("closed-form-m1", "Si2C3-I", Verdict::match);
        expect("closed-form-m2", "Si2C3-I", Verdict::match);
        expect("closed-form-isi", "Si2C3-I", Verdict::match);
        expect("closed-form-sombor-approx", "Si2C3-I", Verdict::mismatch);
    }

    TEST_CASE("a family the checks cannot process degrades to not-applicable") {
        FamilyRegistry broken = FamilyRegistry::builtin();
        FamilySpec degenerate = broken.get("SiC3-II");
        degenerate.vertex_form = BilinearForm{}; // zero vertices everywhere
        broken.add_or_replace(degenerate);

        const AuditReport r = run_full_audit(broken, {1, "x"});
        REQUIRE(r.findings.size() == 52);
        const Finding& f = find_in(r, "thm17-row", "SiC3-II");
        CHECK(f.verdict == Verdict::not_applicable);
        CHECK(contains(f.note, "check not run:"));
        CHECK(r.summary.not_applicable == 1);
    }
}

TEST_SUITE("audit determinism") {
    TEST_CASE("reports are byte-identical across repeats and worker counts") {
        const std::string base = render_json(run_full_audit(reg(), {1, "t0"}));
        CHECK(render_json(run_full_audit(reg(), {1, "t0"})) == base);
        CHECK(render_json(run_full_audit(reg(), {4, "t0"})) == base);
        CHECK(render_json(run_full_audit(reg(), {0, "t0"})) == base);
    }
}

TEST_SUITE("report rendering") {
    TEST_CASE("the JSON document round-trips with the expected shape") {
        const auto root = nlohmann::json::parse(render_json(full_report()));
        REQUIRE(root.contains("findings"));
        CHECK(root["findings"].size() == 52);
        CHECK(root["summary"]["match"] == 33);
        CHECK(root["summary"]["mismatch"] == 17);
        CHECK(root["summary"]["region-mismatch"] == 2);
        CHECK(root["summary"]["not-applicable"] == 0);
        CHECK(root["summary"]["total"] == 52);
        CHECK(root["tool_version"] == "0.1.0");
        CHECK(root["timestamp"] == "2025-06-01T00:00:00Z");

        bool saw_edge_mismatch = false, saw_region = false, saw_match_zero = false;
        for (const auto& f : root["findings"]) {
            REQUIRE(f.contains("check_id"));
            REQUIRE(f.contains("verdict"));
            REQUIRE(f.contains("numeric_samples"));
            REQUIRE(f.contains("note"));
            if (f["check_id"] == "edge-total" && f["family"] == "SiC3-III") {
                saw_edge_mismatch = true;
                CHECK(f["verdict"] == "mismatch");
                CHECK(f["symbolic_difference"] == "-p + q [p>=1, q>=1]");
                REQUIRE(f["numeric_samples"].size() == 25);
                const auto& s = f["numeric_samples"][0];
                CHECK(s.contains("p"));
                CHECK(s.contains("q"));
                CHECK(s.contains("lhs"));
                CHECK(s.contains("rhs"));
                CHECK(s.contains("abs_diff"));
            }
            if (f["check_id"] == "theorem-15") {
                saw_region = true;
                CHECK(f["verdict"] == "region-mismatch");
                CHECK_FALSE(f.contains("symbolic_difference"));
            }
            if (f["check_id"] == "edge-total" && f["family"] == "SiC3-II") {
                saw_match_zero = true;
                CHECK(f["verdict"] == "match");
                CHECK(f["symbolic_difference"] == "0 [p>=1, q>=1]");
            }
        }
        CHECK(saw_edge_mismatch);
        CHECK(saw_region);
        CHECK(saw_match_zero);
    }

    TEST_CASE("the CSV table keeps one row per sample and a fixed header") {
        const std::string csv = render_csv(full_report());
        std::istringstream is(csv);
        std::string line;
        REQUIRE(std::getline(is, line));
        CHECK(line == "check_id,family,verdict,symbolic_difference,p,q,lhs,rhs,abs_diff,note");

        std::size_t rows = 0;
        while (std::getline(is, line)) ++rows;
        std::size_t expected = 0;
        for (const auto& f : full_report().findings)
            expected += std::max<std::size_t>(1, f.numeric_samples.size());
        CHECK(rows == expected);

        // a sample-less finding still fills all ten columns
        CHECK(contains(csv, "negative-count,SiC3-II,match,,,,,,,"
                            "\"all counting formulas stay nonnegative on [1,30]^2\""));
    }

    TEST_CASE("the Markdown report carries the verdict table") {
        const std::string md = render_markdown(full_report());
        CHECK(contains(md, "# Claim audit"));
        CHECK(contains(md, "- verdicts: 33 match, 17 mismatch, 2 region-mismatch, "
                           "0 not-applicable (52 findings)"));
        CHECK(contains(md, "| check | family | verdict | difference (derived - stated) "
                           "| max sample dev | note |"));
        CHECK(contains(md, "| edge-total | SiC3-III | mismatch | -p + q [p>=1, q>=1] | 9 |"));
    }
}
