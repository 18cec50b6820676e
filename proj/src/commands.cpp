#include "comax/commands.hpp"

#include <stdexcept>

#include "comax/enumeration.hpp"
#include "comax/errors.hpp"
#include "comax/graph.hpp"
#include "comax/io.hpp"
#include "comax/number_theory.hpp"

namespace comax {

PolyKind parse_kind(const std::string& s) {
    if (s == "di") return PolyKind::di;
    if (s == "independence") return PolyKind::independence;
    throw std::domain_error("unknown kind '" + s + "' (expected di or independence)");
}

PolyMethod parse_method(const std::string& s) {
    if (s == "closed") return PolyMethod::closed;
    if (s == "structured") return PolyMethod::structured;
    if (s == "oracle") return PolyMethod::oracle;
    if (s == "as-printed") return PolyMethod::as_printed;
    throw std::domain_error("unknown method '" + s +
                            "' (expected closed, structured, oracle or as-printed)");
}

std::string kind_name(PolyKind kind) { return kind == PolyKind::di ? "di" : "independence"; }

std::string method_name(PolyMethod method) {
    switch (method) {
        case PolyMethod::closed: return "closed";
        case PolyMethod::structured: return "structured";
        case PolyMethod::oracle: return "oracle";
        case PolyMethod::as_printed: return "as-printed";
    }
    return "closed";
}

namespace {

IntPolynomial oracle_polynomial(std::int64_t n, PolyKind kind, const RunConfig& cfg) {
    const ComaximalGraph built = comaximal_graph_direct(n, cfg);
    if (kind == PolyKind::di)
        return to_polynomial(maximal_independent_sets(built.graph, cfg.oracle_limit_mis));
    return to_polynomial(independent_sets_by_size(built.graph, cfg.oracle_limit_ind));
}

}  // namespace

PolyOutput compute_poly(std::int64_t n, PolyKind kind, PolyMethod method, const RunConfig& cfg) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    PolyOutput out;
    switch (method) {
        case PolyMethod::closed:
        case PolyMethod::as_printed: {
            const bool printed = method == PolyMethod::as_printed;
            FormulaResult result =
                kind == PolyKind::di
                    ? (printed ? di_closed_form_printed(n) : di_closed_form(n))
                    : (printed ? independence_closed_form_printed(n) : independence_closed_form(n));
            out.polynomial = std::move(result.polynomial);
            out.provenance = std::move(result.provenance);
            out.discrepancy_notes = std::move(result.discrepancy_notes);
            break;
        }
        case PolyMethod::structured:
            out.polynomial = kind == PolyKind::di ? di_structured(n) : independence_structured(n);
            break;
        case PolyMethod::oracle:
            out.polynomial = oracle_polynomial(n, kind, cfg);
            break;
    }
    return out;
}

VerifyOutcome verify_single(std::int64_t n, PolyKind kind, const RunConfig& cfg) {
    VerifyOutcome outcome;
    outcome.n = n;
    outcome.kind = kind;

    struct Candidate {
        std::string name;
        IntPolynomial polynomial;
    };
    std::vector<Candidate> derived;

    auto attempt = [&](const std::string& name, auto&& compute) {
        try {
            Candidate c{name, compute()};
            derived.push_back(std::move(c));
            outcome.computed.push_back(name);
        } catch (const capacity_error& e) {
            outcome.skipped.push_back(name + ": " + e.what());
        } catch (const unsupported_shape_error& e) {
            outcome.skipped.push_back(name + ": " + e.what());
        }
    };

    attempt("structured", [&] {
        return kind == PolyKind::di ? di_structured(n) : independence_structured(n);
    });
    attempt("closed", [&] {
        return (kind == PolyKind::di ? di_closed_form(n) : independence_closed_form(n)).polynomial;
    });
    attempt("oracle", [&] { return oracle_polynomial(n, kind, cfg); });

    for (std::size_t i = 0; i < derived.size(); ++i)
        for (std::size_t j = i + 1; j < derived.size(); ++j)
            if (derived[i].polynomial != derived[j].polynomial)
                outcome.mismatches.push_back(derived[i].name + "!=" + derived[j].name);

    // literal printed variant, compared against any derivation result;
    // a mismatch here is an expected finding, not a failure
    try {
        FormulaResult printed =
            kind == PolyKind::di ? di_closed_form_printed(n) : independence_closed_form_printed(n);
        if (!derived.empty()) {
            outcome.printed_compared = true;
            outcome.printed_matches = printed.polynomial == derived.front().polynomial;
            outcome.printed_notes = std::move(printed.discrepancy_notes);
        }
    } catch (const unsupported_shape_error&) {
        // no printed formula for this shape
    } catch (const capacity_error& e) {
        outcome.skipped.push_back(std::string("as-printed: ") + e.what());
    }

    return outcome;
}

VerifyReport run_verify(std::int64_t n_min, std::int64_t n_max, const RunConfig& cfg) {
    if (n_min < 2 || n_max < n_min) throw std::domain_error("verify: need 2 <= n_min <= n_max");
    VerifyReport report;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        for (PolyKind kind : {PolyKind::di, PolyKind::independence}) {
            VerifyOutcome outcome = verify_single(n, kind, cfg);
            report.derivation_mismatches += static_cast<int>(outcome.mismatches.size());
            if (outcome.printed_compared && !outcome.printed_matches) ++report.printed_mismatches;
            report.rows.push_back(std::move(outcome));
        }
    }
    return report;
}

ScanRow compute_scan_row(std::int64_t n, PolyKind kind, const RunConfig& cfg) {
    (void)cfg;
    ScanRow row;
    row.n = n;
    row.shape = classify(factorize(n));

    const IntPolynomial di = di_structured(n);
    const IntPolynomial ind = independence_structured(n);
    const IntPolynomial& target = kind == PolyKind::di ? di : ind;

    row.unimodal = is_unimodal(target).unimodal;
    row.oscillation = oscillation(target);
    row.log_concave = is_log_concave(target).log_concave;
    row.gamma_i = di.min_exponent();
    row.alpha = ind.degree();
    return row;
}

std::string export_graph_dot(std::int64_t n, const RunConfig& cfg) {
    const ComaximalGraph built = comaximal_graph_direct(n, cfg);
    return graph_to_dot(built.graph, built.partition);
}

namespace {

std::vector<Root> roots_for(std::int64_t n, PolyKind kind, const RunConfig& cfg,
                            std::optional<Annulus>& annulus) {
    const IntPolynomial p = kind == PolyKind::di ? di_structured(n) : independence_structured(n);
    annulus.reset();
    try {
        annulus = enestrom_kakeya(p);
    } catch (const std::domain_error&) {
        // bounds only exist for strictly positive coefficient sequences
    }
    return find_roots(p, cfg.root_tol, cfg.max_iterations);
}

}  // namespace

std::string export_roots_csv(std::int64_t n, PolyKind kind, const RunConfig& cfg) {
    std::optional<Annulus> annulus;
    return roots_to_csv(roots_for(n, kind, cfg, annulus));
}

std::string export_roots_svg(std::int64_t n, PolyKind kind, const RunConfig& cfg) {
    std::optional<Annulus> annulus;
    const auto roots = roots_for(n, kind, cfg, annulus);
    return roots_to_svg(roots, annulus);
}

}  // namespace comax
