#include "comax/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace comax {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

Json polynomial_to_json(const IntPolynomial& p, std::int64_t n, std::string_view kind,
                        std::string_view method) {
    Json coefficients = Json::array();
    for (const auto& [e, c] : p.terms()) coefficients.push_back(Json::array({e, c.str()}));
    Json j;
    j["n"] = n;
    j["kind"] = kind;
    j["method"] = method;
    j["coefficients"] = std::move(coefficients);
    return j;
}

Json formula_to_json(const FormulaResult& result, std::int64_t n, std::string_view kind,
                     std::string_view method) {
    Json j = polynomial_to_json(result.polynomial, n, kind, method);
    j["provenance"] = result.provenance;
    j["discrepancy_notes"] = result.discrepancy_notes;
    return j;
}

IntPolynomial polynomial_from_json(const Json& j) {
    IntPolynomial p;
    for (const auto& pair : j.at("coefficients"))
        p.set_coefficient(pair.at(0).get<std::int64_t>(), BigInt(pair.at(1).get<std::string>()));
    return p;
}

namespace {

std::string rational_string(const BigRational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

}  // namespace

Json report_to_json(const AnalysisReport& report, std::int64_t n, std::string_view kind) {
    Json j;
    j["n"] = n;
    j["kind"] = kind;
    j["unimodal"] = report.unimodal;
    if (report.mode_index)
        j["mode_index"] = *report.mode_index;
    else
        j["mode_index"] = nullptr;
    j["oscillation"] = report.oscillation;
    j["log_concave"] = report.log_concave;
    j["log_concave_violations"] = report.log_concave_violations;
    j["newton_holds"] = report.newton_holds;
    if (report.annulus) {
        j["annulus"] = {
            {"inner", report.annulus->inner.convert_to<double>()},
            {"outer", report.annulus->outer.convert_to<double>()},
            {"inner_exact", rational_string(report.annulus->inner)},
            {"outer_exact", rational_string(report.annulus->outer)},
        };
    } else {
        j["annulus"] = nullptr;
        j["annulus_omitted_reason"] = report.annulus_omitted_reason;
    }
    Json roots = Json::array();
    for (const auto& r : report.roots)
        roots.push_back({{"re", r.re}, {"im", r.im}, {"residual", r.residual}});
    j["roots"] = std::move(roots);
    j["real_root_count"] = report.real_root_count;
    return j;
}

std::string roots_to_csv(const std::vector<Root>& roots) {
    std::string out = "re,im,residual\n";
    for (const auto& r : roots)
        out += format_real(r.re) + "," + format_real(r.im) + "," + format_real(r.residual) + "\n";
    return out;
}

namespace {

std::string svg_coord(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

}  // namespace

std::string roots_to_svg(const std::vector<Root>& roots, const std::optional<Annulus>& annulus) {
    double extent = 1.0;
    for (const auto& r : roots) extent = std::max({extent, std::abs(r.re), std::abs(r.im)});
    if (annulus) extent = std::max(extent, annulus->outer.convert_to<double>());
    const double scale = 400.0 / (extent * 1.15);
    auto px = [&](double re) { return 400.0 + re * scale; };
    auto py = [&](double im) { return 400.0 - im * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    svg << "  <line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    if (annulus) {
        for (const auto& radius : {annulus->inner, annulus->outer}) {
            const double r = radius.convert_to<double>() * scale;
            svg << "  <circle cx=\"400\" cy=\"400\" r=\"" << svg_coord(r)
                << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" "
                   "stroke-dasharray=\"6 4\"/>\n";
        }
    }
    for (const auto& root : roots)
        svg << "  <circle cx=\"" << svg_coord(px(root.re)) << "\" cy=\"" << svg_coord(py(root.im))
            << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string graph_to_dot(const CompactGraph& g, const DivisorPartition& partition) {
    std::vector<std::string> klass(static_cast<std::size_t>(g.order()));
    for (auto u : partition.units) klass[static_cast<std::size_t>(u)] = "unit";
    klass[static_cast<std::size_t>(partition.zero)] = "zero";
    for (const auto& cell : partition.classes)
        for (auto x : cell.members)
            klass[static_cast<std::size_t>(x)] = "d=" + std::to_string(cell.divisor);

    std::ostringstream dot;
    dot << "graph comaximal_" << partition.n << " {\n";
    for (int v = 0; v < g.order(); ++v)
        dot << "  " << v << " [class=\"" << klass[static_cast<std::size_t>(v)] << "\"];\n";
    for (int u = 0; u < g.order(); ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (u < v) dot << "  " << u << " -- " << v << ";\n";
        });
    dot << "}\n";
    return dot.str();
}

}  // namespace comax
