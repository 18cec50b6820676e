#ifndef COMAX_COMMANDS_HPP
#define COMAX_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comax/analysis.hpp"
#include "comax/closed_forms.hpp"
#include "comax/config.hpp"
#include "comax/polynomial.hpp"

namespace comax {

enum class PolyKind { di, independence };
enum class PolyMethod { closed, structured, oracle, as_printed };

PolyKind parse_kind(const std::string& s);
PolyMethod parse_method(const std::string& s);
std::string kind_name(PolyKind kind);
std::string method_name(PolyMethod method);

struct PolyOutput {
    IntPolynomial polynomial;
    std::optional<std::string> provenance;
    std::vector<std::string> discrepancy_notes;
};

/// Core of the poly command: one polynomial by any of the four routes.
PolyOutput compute_poly(std::int64_t n, PolyKind kind, PolyMethod method, const RunConfig& cfg);

/// Cross-verification of every applicable method for a single n and kind.
struct VerifyOutcome {
    std::int64_t n = 0;
    PolyKind kind = PolyKind::di;
    std::vector<std::string> computed;            ///< method names that produced a result
    std::vector<std::string> skipped;             ///< "method: reason"
    std::vector<std::string> mismatches;          ///< disagreeing derivation-method pairs
    bool printed_compared = false;                ///< a printed variant was available
    bool printed_matches = true;                  ///< literal formula agreed with the derivation
    std::vector<std::string> printed_notes;       ///< discrepancy notes attached to the variant
};

VerifyOutcome verify_single(std::int64_t n, PolyKind kind, const RunConfig& cfg);

/// Whole verify sweep; mismatch count excludes expected printed-variant ones.
struct VerifyReport {
    std::vector<VerifyOutcome> rows;
    int derivation_mismatches = 0;
    int printed_mismatches = 0;
};

VerifyReport run_verify(std::int64_t n_min, std::int64_t n_max, const RunConfig& cfg);

/// One scan line: shape and the shape verdicts of the requested polynomial,
/// plus the domination/independence numbers read off the structured results.
struct ScanRow {
    std::int64_t n = 0;
    FactorShape shape = FactorShape::generic;
    bool unimodal = false;
    std::int64_t oscillation = 0;
    bool log_concave = false;
    std::int64_t gamma_i = 0;
    std::int64_t alpha = 0;
};

ScanRow compute_scan_row(std::int64_t n, PolyKind kind, const RunConfig& cfg);

std::string export_graph_dot(std::int64_t n, const RunConfig& cfg);
std::string export_roots_csv(std::int64_t n, PolyKind kind, const RunConfig& cfg);
std::string export_roots_svg(std::int64_t n, PolyKind kind, const RunConfig& cfg);

}  // namespace comax

#endif
