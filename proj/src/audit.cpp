#include "sombor/audit.hpp"

#include "sombor/indices.hpp"
#include "sombor/version.hpp"

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <utility>

namespace sombor {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::region_mismatch: return "region-mismatch";
    case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

namespace {

constexpr double kRelTol = 1e-9;     // exact identities checked through doubles
constexpr double kApproxTol = 0.05;  // stated two-decimal coefficients

const std::vector<long long>& grid_axis() {
    static const std::vector<long long> axis = {1, 2, 3, 5, 10};
    return axis;
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

PiecewiseForm zero_form() { return PiecewiseForm::single(BilinearForm{}); }

double eval_pw(const PiecewiseForm& f, long long p, long long q) {
    return form_eval(f, p, q).to_double();
}

void attach_form_samples(Finding& f, const PiecewiseForm& derived, const PiecewiseForm& stated) {
    for (long long p : grid_axis()) {
        for (long long q : grid_axis()) {
            NumericSample s;
            s.p = p;
            s.q = q;
            s.lhs = eval_pw(derived, p, q);
            s.rhs = eval_pw(stated, p, q);
            s.abs_diff = std::abs(s.lhs - s.rhs);
            f.numeric_samples.push_back(s);
        }
    }
}

std::string join_notes(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& part : parts) {
        if (part.empty()) continue;
        if (!out.empty()) out += "; ";
        out += part;
    }
    return out;
}

const char* axis_name(SplitAxis a) {
    return a == SplitAxis::p ? "p" : a == SplitAxis::q ? "q" : "none";
}

} // namespace

Finding check_edge_total(const FamilySpec& fam) {
    Finding f;
    f.check_id = "edge-total";
    f.family = fam.name;

    PiecewiseForm derived;
    try {
        derived = symbolic_edge_total(fam);
    } catch (const RegionMismatch& e) {
        f.verdict = Verdict::region_mismatch;
        f.note = std::string("partition pieces cannot be summed symbolically: ") + e.what();
        return f;
    }
    const PiecewiseForm stated = PiecewiseForm::single(fam.claimed_edge_form);
    const auto diff = try_piecewise_sub(derived, stated);
    // stated is unsplit, so alignment always succeeds
    f.symbolic_difference = *diff;
    if (diff->is_zero()) {
        f.verdict = Verdict::match;
        f.note = "partition sum reproduces the claimed edge count";
    } else {
        f.verdict = Verdict::mismatch;
        f.note = "partition sums to " + derived.render() + " but the claimed edge count is " +
                 fam.claimed_edge_form.render();
    }
    attach_form_samples(f, derived, stated);
    return f;
}

Finding check_theorem(const TheoremClaim& claim, const FamilyRegistry& reg) {
    Finding f;
    char id[16];
    std::snprintf(id, sizeof id, "theorem-%02d", claim.id);
    f.check_id = id;
    f.family = claim.family;

    const FamilySpec& fam = reg.get(claim.family);
    const IndexDefinition& idx =
        get_index(claim.index == ClaimIndex::sombor ? "sombor" : "reduced_sombor");
    const PiecewiseForm derived = symbolic_index(idx, fam);

    const auto diff = try_piecewise_sub(derived, claim.stated_form);
    if (!diff) {
        f.verdict = Verdict::region_mismatch;
        const SplitAxis da = normalize_pieces(derived).axis;
        const SplitAxis sa = normalize_pieces(claim.stated_form).axis;
        f.note = join_notes(
            {std::string("the derived form branches on ") + axis_name(da) +
                 " (where the counting formulas split) while the stated form branches on " +
                 axis_name(sa) + "; coefficientwise comparison does not apply",
             claim.note});
        attach_form_samples(f, derived, claim.stated_form);
        return f;
    }

    f.symbolic_difference = *diff;
    if (diff->is_zero()) {
        f.verdict = Verdict::match;
        f.note = join_notes({"derived and stated forms agree coefficientwise", claim.note});
    } else {
        f.verdict = Verdict::mismatch;
        f.note = join_notes({"derived minus stated is " + diff->render(), claim.note});
    }
    attach_form_samples(f, derived, claim.stated_form);
    return f;
}

Finding check_thm17_row(const Thm17Entry& entry, const FamilyRegistry& reg) {
    Finding f;
    f.check_id = "thm17-row";
    f.family = entry.family;

    const FamilySpec& fam = reg.get(entry.family);
    static const DegreePair kPairs[5] = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

    // Class counts: the table row against the family's own partition.
    std::string count_issues;
    bool counts_ok = true;
    for (int k = 0; k < 5; ++k) {
        const auto it = fam.partition.find(kPairs[k]);
        const PiecewiseForm part_form =
            it != fam.partition.end() ? it->second : zero_form();
        const auto d = try_piecewise_sub(part_form, entry.e[static_cast<std::size_t>(k)]);
        const bool ok = d && d->is_zero();
        if (ok) continue;
        counts_ok = false;
        std::string issue = "E" + std::to_string(k + 1) + " {" + std::to_string(kPairs[k].lo) +
                            "," + std::to_string(kPairs[k].hi) + "}: table gives " +
                            entry.e[static_cast<std::size_t>(k)].render() +
                            ", partition gives " + part_form.render();
        count_issues = join_notes({count_issues, issue});
        if (d && !f.symbolic_difference) f.symbolic_difference = *d;
    }

    // Does the stated A equal 3 - 2m/n? Exact comparison on a 3x3 grid pins
    // down a bilinear quotient completely.
    bool a_claimed = true, a_psum = true;
    for (long long p = 1; p <= 3; ++p) {
        for (long long q = 1; q <= 3; ++q) {
            const auto part = partition_counts_at(fam, p, q, CountValidation::lenient);
            if (part.vertex_count == 0) continue;
            const Rational a = entry.a_form.eval(p, q);
            const Rational three(3);
            if (a != three - Rational(2) * *part.claimed_edges / part.vertex_count)
                a_claimed = false;
            if (a != three - Rational(2) * part.total_edges / part.vertex_count) a_psum = false;
        }
    }
    std::string a_note;
    if (a_claimed && a_psum)
        a_note = "A equals 3 - 2m/n for both the claimed total and the partition sum";
    else if (a_claimed)
        a_note = "A equals 3 - 2m/n for the claimed edge total (not the partition sum)";
    else if (a_psum)
        a_note = "A equals 3 - 2m/n for the partition sum (not the claimed edge total)";
    else
        a_note = "A = " + entry.a_form.render() + " equals 3 - 2m/n for neither edge total";

    // Numeric identity of the recovery formula against the direct definition,
    // under both readings of m.
    double err_claimed = 0.0, err_psum = 0.0;
    int skipped = 0;
    struct Point {
        long long p, q;
        double lhs, avg_claimed, avg_psum;
    };
    std::vector<Point> points;
    for (long long p = 1; p <= 10; ++p) {
        for (long long q = 1; q <= 10; ++q) {
            const auto part = partition_counts_at(fam, p, q, CountValidation::lenient);
            bool negative = false;
            for (const auto& [pair, c] : part.counts)
                if (c < 0) negative = true;
            if (negative) {
                ++skipped;
                continue;
            }
            const double lhs = thm17_formula_eval(entry, p, q);
            const double ac = average_sombor_on_partition(part, MChoice::claimed);
            const double ap = average_sombor_on_partition(part, MChoice::partition_sum);
            err_claimed = std::max(err_claimed, std::abs(lhs - ac) / std::max(1.0, std::abs(ac)));
            err_psum = std::max(err_psum, std::abs(lhs - ap) / std::max(1.0, std::abs(ap)));
            points.push_back({p, q, lhs, ac, ap});
        }
    }

    std::string m_note;
    bool use_claimed;
    if (err_claimed <= kRelTol && err_psum <= kRelTol) {
        use_claimed = false;
        m_note = "the formula reproduces the definition for both readings of m";
    } else if (err_claimed < err_psum) {
        use_claimed = true;
        m_note = err_claimed <= kRelTol
                     ? "the formula reproduces the definition with m = the claimed edge total"
                     : "closest reading is m = the claimed edge total (max relative deviation " +
                           fmt_g(err_claimed) + ")";
    } else {
        use_claimed = false;
        m_note = err_psum <= kRelTol
                     ? "the formula reproduces the definition with m = the partition sum"
                     : "closest reading is m = the partition sum (max relative deviation " +
                           fmt_g(err_psum) + ")";
    }
    const double best_err = std::min(err_claimed, err_psum);

    for (const auto& pt : points) {
        const bool on_grid =
            std::find(grid_axis().begin(), grid_axis().end(), pt.p) != grid_axis().end() &&
            std::find(grid_axis().begin(), grid_axis().end(), pt.q) != grid_axis().end();
        if (!on_grid) continue;
        NumericSample s;
        s.p = pt.p;
        s.q = pt.q;
        s.lhs = pt.lhs;
        s.rhs = use_claimed ? pt.avg_claimed : pt.avg_psum;
        s.abs_diff = std::abs(s.lhs - s.rhs);
        f.numeric_samples.push_back(s);
    }

    f.verdict = (counts_ok && best_err <= kRelTol) ? Verdict::match : Verdict::mismatch;
    std::string skip_note =
        skipped > 0 ? std::to_string(skipped) + " grid points skipped (negative counts)" : "";
    f.note = join_notes({count_issues, a_note, m_note, skip_note,
                         "the stated E3 factor (A - 1) is evaluated as |A - 1|, since the "
                         "definition gives E3*sqrt(2*(A-1)^2) and A < 1 on all but the smallest "
                         "sheets",
                         entry.note});
    return f;
}

Finding check_inequalities(const FamilySpec& fam) {
    Finding f;
    f.check_id = "inequalities";
    f.family = fam.name;

    const IndexDefinition& so = get_index("sombor");
    const IndexDefinition& m1 = get_index("m1");
    const IndexDefinition& m2 = get_index("m2");
    const IndexDefinition& isi = get_index("isi");

    int checked = 0, skipped = 0;
    double worst = 0.0;
    bool have_worst = false;
    long long worst_p = 0, worst_q = 0;
    std::string violations;

    for (long long p = 1; p <= 10; ++p) {
        for (long long q = 1; q <= 10; ++q) {
            const auto part = partition_counts_at(fam, p, q, CountValidation::lenient);
            bool negative = false;
            for (const auto& [pair, c] : part.counts)
                if (c < 0) negative = true;
            if (negative) {
                ++skipped;
                continue;
            }
            ++checked;
            const double vso = index_on_partition(so, part).approx;
            const double bound = std::max({index_on_partition(m1, part).approx / 2.0,
                                           index_on_partition(m2, part).approx / 3.0,
                                           2.0 * index_on_partition(isi, part).approx});
            const double margin = vso - bound;
            if (!have_worst || margin < worst) {
                worst = margin;
                worst_p = p;
                worst_q = q;
                have_worst = true;
            }
            if (margin < -kRelTol) {
                violations = join_notes({violations, "violated at (" + std::to_string(p) + "," +
                                                         std::to_string(q) + ") by " +
                                                         fmt_g(-margin)});
            }

            const bool on_grid =
                std::find(grid_axis().begin(), grid_axis().end(), p) != grid_axis().end() &&
                std::find(grid_axis().begin(), grid_axis().end(), q) != grid_axis().end();
            if (on_grid) {
                NumericSample s;
                s.p = p;
                s.q = q;
                s.lhs = vso;
                s.rhs = bound;
                s.abs_diff = std::abs(s.lhs - s.rhs);
                f.numeric_samples.push_back(s);
            }
        }
    }

    f.verdict = violations.empty() ? Verdict::match : Verdict::mismatch;
    std::string skip_note =
        skipped > 0 ? std::to_string(skipped) + " points skipped (negative counts)" : "";
    std::string worst_note =
        have_worst ? "smallest margin " + fmt_g(worst) + " at (" + std::to_string(worst_p) + "," +
                         std::to_string(worst_q) + ")"
                   : "no valid points";
    f.note = join_notes({"So >= M1/2, So >= M2/3, So >= 2*ISI checked at " +
                             std::to_string(checked) + " points of [1,10]^2",
                         worst_note, skip_note, violations});
    return f;
}

Finding check_negative_counts(const FamilySpec& fam) {
    Finding f;
    f.check_id = "negative-count";
    f.family = fam.name;

    int bad = 0;
    std::string first_note;
    for (long long p = 1; p <= 30; ++p) {
        for (long long q = 1; q <= 30; ++q) {
            const auto part = partition_counts_at(fam, p, q, CountValidation::lenient);
            for (const auto& [pair, c] : part.counts) {
                if (c >= 0) continue;
                ++bad;
                if (first_note.empty())
                    first_note = "E{" + std::to_string(pair.lo) + "," + std::to_string(pair.hi) +
                                 "} = " + render_rational(c) + " first at (p,q)=(" +
                                 std::to_string(p) + "," + std::to_string(q) + ")";
                if (f.numeric_samples.size() < 10) {
                    NumericSample s;
                    s.p = p;
                    s.q = q;
                    s.lhs = to_double(c);
                    s.rhs = 0.0;
                    s.abs_diff = -to_double(c);
                    f.numeric_samples.push_back(s);
                }
            }
        }
    }

    if (bad == 0) {
        f.verdict = Verdict::match;
        f.note = "all counting formulas stay nonnegative on [1,30]^2";
    } else {
        f.verdict = Verdict::mismatch;
        f.note = join_notes({first_note, std::to_string(bad) +
                                             " negative entries on [1,30]^2: the counting "
                                             "formulas leave their validity range"});
    }
    return f;
}

Finding check_closed_form(const ClosedFormClaim18& claim, const FamilyRegistry& reg) {
    Finding f;
    f.check_id = std::string("closed-form-") + claim18_target_name(claim.target);
    f.family = claim.family;

    const FamilySpec& fam = reg.get(claim.family);
    const IndexDefinition& idx =
        get_index(claim.target == Claim18Target::sombor_approx
                      ? "sombor"
                      : claim18_target_name(claim.target));
    const PiecewiseForm derived = symbolic_index(idx, fam);
    const PiecewiseForm stated = PiecewiseForm::single(claim.stated_form);

    if (!claim.approximate) {
        const auto diff = try_piecewise_sub(derived, stated);
        f.symbolic_difference = *diff;
        if (diff->is_zero()) {
            f.verdict = Verdict::match;
            f.note = "exact recomputation reproduces the stated coefficients";
        } else {
            f.verdict = Verdict::mismatch;
            f.note = "derived " + derived.render() + " but stated " + claim.stated_form.render();
        }
        attach_form_samples(f, derived, stated);
        return f;
    }

    // Decimal approximations: every stated coefficient must sit within 0.05 of
    // the exact one. (Pointwise comparison would punish the pq term with the
    // sheet size, which is not what a rounded form claims.)
    const AlignedPieces aligned = normalize_pieces(derived);
    // the one family under this claim has an unsplit partition
    const BilinearForm& exact = aligned.on_eq1;
    const double dev_pq = std::abs(exact.pq.to_double() - claim.stated_form.pq.to_double());
    const double dev_p = std::abs(exact.p.to_double() - claim.stated_form.p.to_double());
    const double dev_q = std::abs(exact.q.to_double() - claim.stated_form.q.to_double());
    const double dev_c = std::abs(exact.c.to_double() - claim.stated_form.c.to_double());
    const double max_dev = std::max({dev_pq, dev_p, dev_q, dev_c});

    std::string offenders;
    if (dev_pq > kApproxTol)
        offenders = join_notes({offenders, "pq coefficient off by " + fmt_g(dev_pq)});
    if (dev_p > kApproxTol)
        offenders = join_notes({offenders, "p coefficient off by " + fmt_g(dev_p)});
    if (dev_q > kApproxTol)
        offenders = join_notes({offenders, "q coefficient off by " + fmt_g(dev_q)});
    if (dev_c > kApproxTol)
        offenders = join_notes({offenders, "constant term off by " + fmt_g(dev_c) + " (stated " +
                                               claim.stated_form.c.render() + ", exact " +
                                               exact.c.render() + " = " +
                                               fmt_g(exact.c.to_double()) + ")"});

    f.verdict = offenders.empty() ? Verdict::match : Verdict::mismatch;
    f.note = join_notes(
        {"stated decimal form checked coefficientwise against the exact " + exact.render(),
         "largest coefficient deviation " + fmt_g(max_dev) + " (tolerance " + fmt_g(kApproxTol) +
             ")",
         offenders});
    attach_form_samples(f, derived, stated);
    return f;
}

AuditReport run_full_audit(const FamilyRegistry& reg, const AuditOptions& opts) {
    struct Task {
        std::string check_id;
        std::string family;
        std::function<Finding()> fn;
    };
    std::vector<Task> tasks;

    for (const auto& fam : reg.all()) {
        const FamilySpec* fp = &fam;
        tasks.push_back({"edge-total", fam.name, [fp] { return check_edge_total(*fp); }});
        tasks.push_back(
            {"negative-count", fam.name, [fp] { return check_negative_counts(*fp); }});
        tasks.push_back({"inequalities", fam.name, [fp] { return check_inequalities(*fp); }});
    }
    for (const auto& claim : theorem_claims()) {
        char id[16];
        std::snprintf(id, sizeof id, "theorem-%02d", claim.id);
        const TheoremClaim* cp = &claim;
        tasks.push_back({id, claim.family, [cp, &reg] { return check_theorem(*cp, reg); }});
    }
    for (const auto& entry : thm17_entries()) {
        const Thm17Entry* ep = &entry;
        tasks.push_back(
            {"thm17-row", entry.family, [ep, &reg] { return check_thm17_row(*ep, reg); }});
    }
    for (const auto& claim : thm18_claims()) {
        const ClosedFormClaim18* cp = &claim;
        tasks.push_back({std::string("closed-form-") + claim18_target_name(claim.target),
                         claim.family, [cp, &reg] { return check_closed_form(*cp, reg); }});
    }

    std::vector<Finding> results(tasks.size());
    auto run_one = [&](std::size_t i) {
        try {
            results[i] = tasks[i].fn();
        } catch (const std::exception& e) {
            // a check that cannot run (e.g. a degenerate user-supplied family)
            // degrades to a verdict rather than aborting the audit
            Finding f;
            f.check_id = tasks[i].check_id;
            f.family = tasks[i].family;
            f.verdict = Verdict::not_applicable;
            f.note = std::string("check not run: ") + e.what();
            results[i] = f;
        }
    };

    if (opts.workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
#ifdef _OPENMP
        const int n = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#pragma omp parallel for num_threads(n) schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i)
            run_one(static_cast<std::size_t>(i));
#else
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
#endif
    }

    std::sort(results.begin(), results.end(), [](const Finding& a, const Finding& b) {
        if (a.check_id != b.check_id) return a.check_id < b.check_id;
        return a.family < b.family;
    });

    AuditReport report;
    report.findings = std::move(results);
    for (const auto& f : report.findings) {
        switch (f.verdict) {
        case Verdict::match: ++report.summary.match; break;
        case Verdict::mismatch: ++report.summary.mismatch; break;
        case Verdict::region_mismatch: ++report.summary.region_mismatch; break;
        case Verdict::not_applicable: ++report.summary.not_applicable; break;
        }
    }
    report.tool_version = kToolVersion;
    report.timestamp = opts.timestamp;
    return report;
}

// ---------------------------------------------------------------------------
// report rendering

std::string render_json(const AuditReport& report) {
    nlohmann::ordered_json root;
    root["findings"] = nlohmann::ordered_json::array();
    for (const auto& f : report.findings) {
        nlohmann::ordered_json o;
        o["check_id"] = f.check_id;
        o["family"] = f.family;
        o["verdict"] = verdict_name(f.verdict);
        if (f.symbolic_difference) o["symbolic_difference"] = f.symbolic_difference->render();
        o["numeric_samples"] = nlohmann::ordered_json::array();
        for (const auto& s : f.numeric_samples) {
            o["numeric_samples"].push_back({{"p", s.p},
                                            {"q", s.q},
                                            {"lhs", s.lhs},
                                            {"rhs", s.rhs},
                                            {"abs_diff", s.abs_diff}});
        }
        o["note"] = f.note;
        root["findings"].push_back(std::move(o));
    }
    root["summary"] = {{"match", report.summary.match},
                       {"mismatch", report.summary.mismatch},
                       {"region-mismatch", report.summary.region_mismatch},
                       {"not-applicable", report.summary.not_applicable},
                       {"total", report.summary.total()}};
    root["tool_version"] = report.tool_version;
    root["timestamp"] = report.timestamp;
    return root.dump(2) + "\n";
}

std::string render_markdown(const AuditReport& report) {
    std::ostringstream os;
    os << "# Claim audit\n\n";
    os << "- tool version: " << report.tool_version << "\n";
    os << "- timestamp: " << report.timestamp << "\n";
    os << "- verdicts: " << report.summary.match << " match, " << report.summary.mismatch
       << " mismatch, " << report.summary.region_mismatch << " region-mismatch, "
       << report.summary.not_applicable << " not-applicable (" << report.summary.total()
       << " findings)\n\n";
    os << "| check | family | verdict | difference (derived - stated) | max sample dev | note |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& f : report.findings) {
        double max_dev = 0.0;
        for (const auto& s : f.numeric_samples) max_dev = std::max(max_dev, s.abs_diff);
        std::string diff = f.symbolic_difference ? f.symbolic_difference->render() : "-";
        std::string note = f.note;
        for (auto* s : {&diff, &note}) {
            std::size_t at = 0;
            while ((at = s->find('|', at)) != std::string::npos) {
                s->replace(at, 1, "\\|");
                at += 2;
            }
        }
        os << "| " << f.check_id << " | " << f.family << " | " << verdict_name(f.verdict) << " | "
           << diff << " | " << (f.numeric_samples.empty() ? std::string("-") : fmt_g(max_dev))
           << " | " << note << " |\n";
    }
    return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string render_csv(const AuditReport& report) {
    std::ostringstream os;
    os << "check_id,family,verdict,symbolic_difference,p,q,lhs,rhs,abs_diff,note\n";
    for (const auto& f : report.findings) {
        const std::string head = csv_escape(f.check_id) + "," + csv_escape(f.family) + "," +
                                 verdict_name(f.verdict) + "," +
                                 csv_escape(f.symbolic_difference
                                                ? f.symbolic_difference->render()
                                                : "");
        const std::string tail = csv_escape(f.note);
        if (f.numeric_samples.empty()) {
            os << head << ",,,,,," << tail << "\n";
            continue;
        }
        for (const auto& s : f.numeric_samples) {
            os << head << "," << s.p << "," << s.q << "," << csv_num(s.lhs) << ","
               << csv_num(s.rhs) << "," << csv_num(s.abs_diff) << "," << tail << "\n";
        }
    }
    return os.str();
}

} // namespace sombor
