#ifndef COMAX_IO_HPP
#define COMAX_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "comax/analysis.hpp"
#include "comax/closed_forms.hpp"
#include "comax/graph.hpp"
#include "comax/polynomial.hpp"

namespace comax {

using Json = nlohmann::ordered_json;

/// Interchange form: coefficients as [exponent, decimal-string] pairs sorted
/// by exponent, lossless for arbitrary-precision values.
Json polynomial_to_json(const IntPolynomial& p, std::int64_t n, std::string_view kind,
                        std::string_view method);

/// Same, with the provenance and discrepancy notes of a closed-form result.
Json formula_to_json(const FormulaResult& result, std::int64_t n, std::string_view kind,
                     std::string_view method);

IntPolynomial polynomial_from_json(const Json& j);

Json report_to_json(const AnalysisReport& report, std::int64_t n, std::string_view kind);

/// Header re,im,residual, one root per line, 17 significant digits.
std::string roots_to_csv(const std::vector<Root>& roots);

/// 800x800 scatter, axes through the origin, one filled circle per root;
/// annulus circles drawn when bounds are available.
std::string roots_to_svg(const std::vector<Root>& roots, const std::optional<Annulus>& annulus);

/// Undirected DOT with a class attribute per vertex: unit, zero, or d=<divisor>.
std::string graph_to_dot(const CompactGraph& g, const DivisorPartition& partition);

/// Up to 17 significant digits, shortest form ("0" stays "0").
std::string format_real(double value);

}  // namespace comax

#endif
