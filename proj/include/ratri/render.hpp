#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratri/family.hpp"

namespace ratri {

enum class OutputFormat { text, json, csv };

/// "text", "json" or "csv"; nullopt otherwise.
std::optional<OutputFormat> parse_format(std::string_view name);

std::string render_triples(const std::vector<PythTriple>& rows, OutputFormat fmt);

/// Full report: sides, area, heights, the ten cos/sin values, radii and
/// classification. with_degrees appends double-precision degree measures
/// to the text form, clearly labeled approximate; the exact fields are
/// untouched.
std::string render_triangle(const RationalTriangle& t, OutputFormat fmt,
                            bool with_degrees = false);

std::string render_family(const TriangleFamily& fam, OutputFormat fmt);

std::string render_catalog(const Catalog& cat, OutputFormat fmt, bool full);

std::string render_check(const std::array<Rational, 3>& sides,
                         const RationalityReport& report, OutputFormat fmt);

}  // namespace ratri
