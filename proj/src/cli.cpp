#include "sombor/cli.hpp"

#include "sombor/audit.hpp"
#include "sombor/dsl.hpp"
#include "sombor/families.hpp"
#include "sombor/indices.hpp"
#include "sombor/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace sombor {

namespace {

std::string now_utc() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
#if defined(_WIN32)
    gmtime_s(&tm, &t);
#else
    gmtime_r(&t, &tm);
#endif
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

FamilyRegistry registry_from_env(std::ostream& err) {
    FamilyRegistry reg = FamilyRegistry::builtin();
    if (const char* path = std::getenv("SOMBOR_FAMILY_FILE"); path && *path) {
        reg = load_family_file_path(path, std::move(reg));
        err << "note: loaded family definitions from " << path << "\n";
    }
    return reg;
}

// float_digits < 0 means "no --float given": print exactly when possible.
std::string format_value(const NumericValue& v, int float_digits) {
    if (float_digits >= 0) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(float_digits) << v.approx;
        return os.str();
    }
    if (v.is_exact()) return v.exact->render();
    std::ostringstream os;
    os << std::setprecision(12) << v.approx;
    return os.str();
}

std::string format_report(const AuditReport& report, const std::string& format) {
    if (format == "json") return render_json(report);
    if (format == "md") return render_markdown(report);
    if (format == "csv") return render_csv(report);
    // plain text: one block per finding
    std::ostringstream os;
    for (const auto& f : report.findings) {
        os << f.check_id << " " << f.family << ": " << verdict_name(f.verdict) << "\n";
        if (f.symbolic_difference && !f.symbolic_difference->is_zero())
            os << "  difference (derived - stated): " << f.symbolic_difference->render() << "\n";
        if (!f.note.empty()) os << "  note: " << f.note << "\n";
    }
    os << report.summary.match << " match, " << report.summary.mismatch << " mismatch, "
       << report.summary.region_mismatch << " region-mismatch, "
       << report.summary.not_applicable << " not-applicable\n";
    return os.str();
}

AuditReport report_from(std::vector<Finding> findings, const std::string& timestamp) {
    AuditReport r;
    r.findings = std::move(findings);
    for (const auto& f : r.findings) {
        switch (f.verdict) {
        case Verdict::match: ++r.summary.match; break;
        case Verdict::mismatch: ++r.summary.mismatch; break;
        case Verdict::region_mismatch: ++r.summary.region_mismatch; break;
        case Verdict::not_applicable: ++r.summary.not_applicable; break;
        }
    }
    r.tool_version = kToolVersion;
    r.timestamp = timestamp;
    return r;
}

int exit_code_for(const AuditSummary& s) {
    return (s.mismatch + s.region_mismatch + s.not_applicable) > 0 ? 2 : 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-based topological index engine and claim auditor"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(0, 1);

    auto* cmd_list = app.add_subcommand("list-families", "List registered graph families");

    auto* cmd_compute = app.add_subcommand("compute", "Evaluate an index on a family at (p, q)");
    std::string c_family;
    long long c_p = 1, c_q = 1;
    std::string c_index = "sombor";
    std::string c_expr;
    std::string c_mchoice = "partition-sum";
    int c_float = -1;
    cmd_compute->add_option("--family", c_family, "family name")->required();
    cmd_compute->add_option("--p", c_p, "first parameter (>= 1)")->required();
    cmd_compute->add_option("--q", c_q, "second parameter (>= 1)")->required();
    auto* c_index_opt = cmd_compute->add_option(
        "--index", c_index, "sombor, reduced_sombor, m1, m2, isi, or average_sombor");
    auto* c_expr_opt =
        cmd_compute->add_option("--expr", c_expr, "custom edge weight w(du, dv)");
    c_index_opt->excludes(c_expr_opt);
    cmd_compute->add_option("--m-choice", c_mchoice,
                            "edge total used by average_sombor")
        ->check(CLI::IsMember({"partition-sum", "claimed"}));
    cmd_compute->add_option("--float", c_float, "print as a decimal with this many digits")
        ->check(CLI::Range(0, 17));

    auto* cmd_verify = app.add_subcommand("verify", "Audit one stated claim");
    int v_theorem = 0;
    std::string v_family, v_target, v_format = "text";
    cmd_verify->add_option("--theorem", v_theorem, "claim number (1..18)")->required();
    cmd_verify->add_option("--family", v_family, "row selector for claim 17");
    cmd_verify->add_option("--target", v_target,
                           "selector for claim 18: m1, m2, isi, sombor-approx");
    cmd_verify->add_option("--format", v_format, "text, json, md, or csv")
        ->check(CLI::IsMember({"text", "json", "md", "csv"}));

    auto* cmd_audit = app.add_subcommand("audit", "Run every check and emit a report");
    std::string a_format = "json";
    int a_jobs = 0;
    std::string a_timestamp;
    cmd_audit->add_option("--format", a_format, "json, md, or csv")
        ->check(CLI::IsMember({"json", "md", "csv"}));
    cmd_audit->add_option("--jobs", a_jobs, "worker count (1 = serial reference; 0 = all cores)")
        ->check(CLI::Range(0, 1024));
    cmd_audit->add_option("--timestamp", a_timestamp,
                          "fixed timestamp string for reproducible reports");

    auto* cmd_eval = app.add_subcommand("eval", "Evaluate a custom weight over a graph or family");
    std::string e_expr, e_graph, e_family;
    long long e_p = 1, e_q = 1;
    int e_float = -1;
    cmd_eval->add_option("--expr", e_expr, "edge weight w(du, dv)")->required();
    auto* e_graph_opt = cmd_eval->add_option("--graph", e_graph, "edge list file");
    auto* e_family_opt = cmd_eval->add_option("--family", e_family, "family name");
    e_graph_opt->excludes(e_family_opt);
    cmd_eval->add_option("--p", e_p, "family parameter");
    cmd_eval->add_option("--q", e_q, "family parameter");
    cmd_eval->add_option("--float", e_float, "print as a decimal with this many digits")
        ->check(CLI::Range(0, 17));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sombor");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream capture_out, capture_err;
        const int code = app.exit(e, capture_out, capture_err);
        out << capture_out.str();
        err << capture_err.str();
        return code == 0 ? 0 : 1; // --help / --version land here with code 0
    }

    try {
        if (cmd_list->parsed()) {
            const FamilyRegistry reg = registry_from_env(err);
            for (const auto& fam : reg.all()) {
                out << fam.name << ": vertices " << fam.vertex_form.render() << ", edges "
                    << fam.claimed_edge_form.render() << "\n";
            }
            return 0;
        }

        if (cmd_compute->parsed()) {
            const FamilyRegistry reg = registry_from_env(err);
            const FamilySpec& fam = reg.get(c_family);
            const int digits = c_float;
            if (!c_expr.empty()) {
                const IndexDefinition idx = make_dsl_index("expr", parse_weight(c_expr));
                const NumericValue v = index_on_partition(idx, partition_counts_at(fam, c_p, c_q));
                out << format_value(v, digits) << "\n";
            } else if (c_index == "average_sombor") {
                const auto part = partition_counts_at(fam, c_p, c_q);
                const MChoice mc =
                    c_mchoice == "claimed" ? MChoice::claimed : MChoice::partition_sum;
                const double v = average_sombor_on_partition(part, mc);
                out << format_value(nv_real(v), digits) << "\n";
            } else {
                const IndexDefinition& idx = get_index(c_index);
                const NumericValue v = index_on_partition(idx, partition_counts_at(fam, c_p, c_q));
                out << format_value(v, digits) << "\n";
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            const FamilyRegistry reg = registry_from_env(err);
            std::vector<Finding> findings;
            if (v_theorem >= 1 && v_theorem <= 16) {
                findings.push_back(check_theorem(get_theorem_claim(v_theorem), reg));
            } else if (v_theorem == 17) {
                if (!v_family.empty()) {
                    findings.push_back(check_thm17_row(get_thm17_entry(v_family), reg));
                } else {
                    for (const auto& entry : thm17_entries())
                        findings.push_back(check_thm17_row(entry, reg));
                }
            } else if (v_theorem == 18) {
                if (!v_target.empty()) {
                    findings.push_back(check_closed_form(get_thm18_claim(v_target), reg));
                } else {
                    for (const auto& claim : thm18_claims())
                        findings.push_back(check_closed_form(claim, reg));
                }
            } else {
                throw UnknownTheorem("unknown theorem id: " + std::to_string(v_theorem) +
                                     " (valid ids are 1..18)");
            }
            const AuditReport report = report_from(std::move(findings), "unspecified");
            out << format_report(report, v_format);
            return exit_code_for(report.summary);
        }

        if (cmd_audit->parsed()) {
            const FamilyRegistry reg = registry_from_env(err);
            AuditOptions opts;
            opts.workers = a_jobs;
            opts.timestamp = a_timestamp.empty() ? now_utc() : a_timestamp;
            const AuditReport report = run_full_audit(reg, opts);
            out << format_report(report, a_format);
            return exit_code_for(report.summary);
        }

        if (cmd_eval->parsed()) {
            const int digits = e_float;
            const IndexDefinition idx = make_dsl_index("expr", parse_weight(e_expr));
            if (!e_graph.empty()) {
                std::ifstream in(e_graph);
                if (!in) throw Error("cannot open graph file: " + e_graph);
                const Graph g = load_edge_list(in);
                if (!g.is_connected()) err << "note: graph is not connected\n";
                out << format_value(index_on_graph(idx, g), digits) << "\n";
            } else if (!e_family.empty()) {
                const FamilyRegistry reg = registry_from_env(err);
                const auto part = partition_counts_at(reg.get(e_family), e_p, e_q);
                out << format_value(index_on_partition(idx, part), digits) << "\n";
            } else {
                throw Error("eval needs --graph FILE or --family NAME with --p/--q");
            }
            return 0;
        }

        // no subcommand: show help
        out << app.help();
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sombor
