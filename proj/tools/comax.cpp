// comax: compute, cross-verify, analyze and export independence and
// independent domination polynomials of comaximal graphs of Z_n.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "comax/commands.hpp"
#include "comax/errors.hpp"
#include "comax/io.hpp"
#include "comax/number_theory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitConvergence = 3;

void emit_error(int code, const std::string& category, const std::string& message) {
    comax::Json j;
    j["error"] = {{"code", code}, {"category", category}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

/// Data goes to --output (default stdout); warnings stay on stderr.
void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << payload;
}

struct Options {
    comax::RunConfig config;
    std::string format;
    std::string output;
    bool as_printed = false;
};

std::string poly_text(const comax::PolyOutput& result) {
    return comax::to_string(result.polynomial) + "\n";
}

int cmd_poly(std::int64_t n, const std::string& kind_str, const std::string& method_str,
             const Options& opt) {
    const comax::PolyKind kind = comax::parse_kind(kind_str);
    comax::PolyMethod method = comax::parse_method(method_str);
    if (opt.as_printed && method == comax::PolyMethod::closed) method = comax::PolyMethod::as_printed;

    const comax::PolyOutput result = comax::compute_poly(n, kind, method, opt.config);
    for (const auto& note : result.discrepancy_notes)
        std::cerr << "warning: " << note << "\n";

    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "text") {
        write_output(opt.output, poly_text(result));
    } else if (format == "json") {
        comax::Json j = comax::polynomial_to_json(result.polynomial, n, comax::kind_name(kind),
                                                  comax::method_name(method));
        if (result.provenance) {
            j["provenance"] = *result.provenance;
            j["discrepancy_notes"] = result.discrepancy_notes;
        }
        write_output(opt.output, j.dump(2) + "\n");
    } else {
        throw std::domain_error("poly: unsupported format '" + format + "'");
    }
    return kExitOk;
}

int cmd_verify(std::int64_t n_min, std::int64_t n_max, const Options& opt) {
    const comax::VerifyReport report = comax::run_verify(n_min, n_max, opt.config);

    const std::string format = opt.format.empty() ? "text" : opt.format;
    std::string payload;
    if (format == "json") {
        comax::Json rows = comax::Json::array();
        for (const auto& row : report.rows) {
            comax::Json j;
            j["n"] = row.n;
            j["kind"] = comax::kind_name(row.kind);
            j["computed"] = row.computed;
            j["skipped"] = row.skipped;
            j["mismatches"] = row.mismatches;
            j["printed_compared"] = row.printed_compared;
            j["printed_matches"] = row.printed_matches;
            rows.push_back(std::move(j));
        }
        comax::Json j;
        j["rows"] = std::move(rows);
        j["derivation_mismatches"] = report.derivation_mismatches;
        j["printed_mismatches"] = report.printed_mismatches;
        payload = j.dump(2) + "\n";
    } else if (format == "text") {
        std::string text;
        for (const auto& row : report.rows) {
            text += "n=" + std::to_string(row.n) + " " + comax::kind_name(row.kind) + ": ";
            if (row.mismatches.empty()) {
                text += "agree(";
                for (std::size_t i = 0; i < row.computed.size(); ++i)
                    text += (i ? "," : "") + row.computed[i];
                text += ")";
            } else {
                text += "MISMATCH(";
                for (std::size_t i = 0; i < row.mismatches.size(); ++i)
                    text += (i ? "," : "") + row.mismatches[i];
                text += ")";
            }
            if (row.printed_compared && !row.printed_matches)
                text += " printed-variant-differs(expected)";
            for (const auto& s : row.skipped) text += " skipped[" + s + "]";
            text += "\n";
        }
        text += "summary: " + std::to_string(report.derivation_mismatches) +
                " derivation mismatches, " + std::to_string(report.printed_mismatches) +
                " printed-variant mismatches (expected)\n";
        payload = text;
    } else {
        throw std::domain_error("verify: unsupported format '" + format + "'");
    }
    write_output(opt.output, payload);
    return report.derivation_mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_analyze(std::int64_t n, const std::string& kind_str, const Options& opt) {
    const comax::PolyKind kind = comax::parse_kind(kind_str);
    const comax::IntPolynomial p = comax::compute_poly(n, kind, comax::PolyMethod::structured,
                                                       opt.config)
                                       .polynomial;
    const comax::AnalysisReport report = comax::analyze(p, opt.config);
    const comax::Json j = comax::report_to_json(report, n, comax::kind_name(kind));

    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "json") {
        write_output(opt.output, j.dump(2) + "\n");
    } else if (format == "text") {
        std::string text = "n=" + std::to_string(n) + " kind=" + comax::kind_name(kind) + "\n";
        text += "unimodal: " + std::string(report.unimodal ? "true" : "false");
        if (report.mode_index) text += " (mode " + std::to_string(*report.mode_index) + ")";
        text += "\noscillation: " + std::to_string(report.oscillation);
        text += "\nlog_concave: " + std::string(report.log_concave ? "true" : "false");
        text += "\nnewton_holds: " + std::string(report.newton_holds ? "true" : "false");
        if (report.annulus) {
            text += "\nannulus: " + comax::format_real(report.annulus->inner.convert_to<double>()) +
                    " <= |z| <= " + comax::format_real(report.annulus->outer.convert_to<double>());
        } else {
            text += "\nannulus: omitted (" + report.annulus_omitted_reason + ")";
        }
        text += "\nreal_root_count: " + std::to_string(report.real_root_count);
        text += "\nroots:\n";
        for (const auto& r : report.roots)
            text += "  " + comax::format_real(r.re) + " " + comax::format_real(r.im) +
                    " (residual " + comax::format_real(r.residual) + ")\n";
        write_output(opt.output, text);
    } else {
        throw std::domain_error("analyze: unsupported format '" + format + "'");
    }
    return kExitOk;
}

int cmd_scan(std::int64_t n_min, std::int64_t n_max, const std::string& kind_str,
             const Options& opt) {
    if (n_min < 2 || n_max < n_min) throw std::domain_error("scan: need 2 <= n_min <= n_max");
    const comax::PolyKind kind = comax::parse_kind(kind_str);

    std::vector<comax::ScanRow> rows;
    std::vector<std::string> skipped;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        try {
            rows.push_back(comax::compute_scan_row(n, kind, opt.config));
        } catch (const comax::capacity_error& e) {
            skipped.push_back("n=" + std::to_string(n) + ": " + e.what());
        }
    }

    const std::string format = opt.format.empty() ? "text" : opt.format;
    std::string payload;
    if (format == "csv") {
        payload = "n,shape,unimodal,oscillation,log_concave,gamma_i,alpha\n";
        for (const auto& row : rows)
            payload += std::to_string(row.n) + "," + comax::shape_name(row.shape) + "," +
                       (row.unimodal ? "true" : "false") + "," + std::to_string(row.oscillation) +
                       "," + (row.log_concave ? "true" : "false") + "," +
                       std::to_string(row.gamma_i) + "," + std::to_string(row.alpha) + "\n";
    } else if (format == "text") {
        payload = "n shape unimodal oscillation log_concave gamma_i alpha\n";
        for (const auto& row : rows)
            payload += std::to_string(row.n) + " " + comax::shape_name(row.shape) + " " +
                       (row.unimodal ? "yes" : "no") + " " + std::to_string(row.oscillation) + " " +
                       (row.log_concave ? "yes" : "no") + " " + std::to_string(row.gamma_i) + " " +
                       std::to_string(row.alpha) + "\n";
        // prime-power rows: the two readings of the "log-concave unless ..."
        // characterization disagree; report which one the measurements match
        std::vector<const comax::ScanRow*> pm;
        for (const auto& row : rows)
            if (row.shape == comax::FactorShape::prime ||
                row.shape == comax::FactorShape::prime_power)
                pm.push_back(&row);
        if (!pm.empty()) {
            bool narrow = true;  // log-concave iff not (p = 3 and m = 2)
            bool broad = true;   // log-concave iff p != 3 and m != 2
            for (const auto* row : pm) {
                const auto fac = comax::factorize(row->n);
                const auto p = fac.factors[0].prime;
                const auto m = fac.factors[0].exponent;
                if (row->log_concave != !(p == 3 && m == 2)) narrow = false;
                if (row->log_concave != (p != 3 && m != 2)) broad = false;
            }
            payload += "# prime-power log-concavity matches reading: ";
            if (narrow && !broad)
                payload += "not(p=3 and m=2)\n";
            else if (broad && !narrow)
                payload += "(p!=3) and (m!=2)\n";
            else if (narrow && broad)
                payload += "both readings\n";
            else
                payload += "neither reading\n";
        }
        // two-prime rows: the compound not-log-concave conditions admit
        // several readings, so emit the measured set and leave it at that
        std::string not_lc;
        for (const auto& row : rows)
            if ((row.shape == comax::FactorShape::two_primes ||
                 row.shape == comax::FactorShape::two_primes_general) &&
                !row.log_concave)
                not_lc += (not_lc.empty() ? "" : ",") + std::to_string(row.n);
        if (!not_lc.empty())
            payload += "# two-prime shapes measured not log-concave: " + not_lc + "\n";
    } else {
        throw std::domain_error("scan: unsupported format '" + format + "'");
    }
    for (const auto& s : skipped) std::cerr << "warning: skipped " << s << "\n";
    write_output(opt.output, payload);
    return kExitOk;
}

int cmd_export(std::int64_t n, const std::string& what, const std::string& kind_str,
               const Options& opt) {
    const comax::PolyKind kind = comax::parse_kind(kind_str);
    std::string payload;
    if (what == "graph-dot") {
        payload = comax::export_graph_dot(n, opt.config);
    } else if (what == "roots-csv") {
        payload = comax::export_roots_csv(n, kind, opt.config);
    } else if (what == "roots-svg") {
        payload = comax::export_roots_svg(n, kind, opt.config);
    } else {
        throw std::domain_error("export: unknown artifact '" + what +
                                "' (expected graph-dot, roots-csv or roots-svg)");
    }
    write_output(opt.output, payload);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"comaximal graph polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format (json|csv|dot|svg|text)")
        ->envname("COMAX_FORMAT");
    app.add_option("-o,--output", opt.output, "write the artifact to a file instead of stdout");
    app.add_option("--oracle-limit-mis", opt.config.oracle_limit_mis,
                   "max order for maximal-independent-set enumeration")
        ->envname("COMAX_ORACLE_LIMIT_MIS");
    app.add_option("--oracle-limit-ind", opt.config.oracle_limit_ind,
                   "max order for independent-set counting")
        ->envname("COMAX_ORACLE_LIMIT_IND");
    app.add_option("--vertex-capacity", opt.config.vertex_capacity, "max graph order")
        ->envname("COMAX_VERTEX_CAPACITY");
    app.add_option("--tol", opt.config.root_tol, "root residual tolerance")
        ->envname("COMAX_TOL");
    app.add_option("--max-iterations", opt.config.max_iterations, "root finder iteration budget")
        ->envname("COMAX_MAX_ITERATIONS");
    app.add_flag("--as-printed", opt.as_printed,
                 "emit the literal published formula where it differs from the derivation");

    std::int64_t n = 0, n_min = 0, n_max = 0;
    std::string kind, method, what;
    std::string export_kind = "di";

    auto* poly = app.add_subcommand("poly", "compute one polynomial");
    poly->fallthrough();
    poly->add_option("n", n, "modulus")->required();
    poly->add_option("kind", kind, "di|independence")->required();
    poly->add_option("method", method, "closed|structured|oracle|as-printed")->required();

    auto* verify = app.add_subcommand("verify", "cross-check all methods over a range");
    verify->fallthrough();
    verify->add_option("n_min", n_min, "range start")->required();
    verify->add_option("n_max", n_max, "range end")->required();

    auto* analyze = app.add_subcommand("analyze", "shape and zero report");
    analyze->fallthrough();
    analyze->add_option("n", n, "modulus")->required();
    analyze->add_option("kind", kind, "di|independence")->required();

    auto* scan = app.add_subcommand("scan", "verdict table over a range");
    scan->fallthrough();
    scan->add_option("n_min", n_min, "range start")->required();
    scan->add_option("n_max", n_max, "range end")->required();
    scan->add_option("kind", kind, "di|independence")->required();

    auto* exp = app.add_subcommand("export", "emit DOT/CSV/SVG artifacts");
    exp->fallthrough();
    exp->add_option("n", n, "modulus")->required();
    exp->add_option("what", what, "graph-dot|roots-csv|roots-svg")->required();
    exp->add_option("--kind", export_kind, "polynomial for root exports (default di)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints usage or the error text
        return code == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        opt.config.validate();
        if (poly->parsed()) return cmd_poly(n, kind, method, opt);
        if (verify->parsed()) return cmd_verify(n_min, n_max, opt);
        if (analyze->parsed()) return cmd_analyze(n, kind, opt);
        if (scan->parsed()) return cmd_scan(n_min, n_max, kind, opt);
        if (exp->parsed()) return cmd_export(n, what, export_kind, opt);
    } catch (const comax::convergence_error& e) {
        emit_error(kExitConvergence, "convergence", e.what());
        return kExitConvergence;
    } catch (const comax::inconsistency_error& e) {
        emit_error(kExitMismatch, "inconsistency", e.what());
        return kExitMismatch;
    } catch (const comax::capacity_error& e) {
        emit_error(kExitPrecondition, "capacity", e.what());
        return kExitPrecondition;
    } catch (const comax::unsupported_shape_error& e) {
        emit_error(kExitPrecondition, "unsupported-shape", e.what());
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        emit_error(kExitPrecondition, "precondition", e.what());
        return kExitPrecondition;
    } catch (const std::exception& e) {
        emit_error(kExitPrecondition, "error", e.what());
        return kExitPrecondition;
    }
    return kExitOk;
}
