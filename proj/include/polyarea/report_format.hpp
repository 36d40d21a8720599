#pragma once

// Serialization of verification reports and tables. Rationals always travel as
// "p/q" strings in JSON and CSV; only markdown adds a decimal approximation.

#include "polyarea/verify.hpp"

#include <optional>
#include <string>

namespace polyarea {

enum class OutputFormat { Json, Csv, Markdown };

std::optional<OutputFormat> parse_format(const std::string& name);

/// Six significant digits, for display only.
std::string approximate(const Rational& x);

/// RFC 4180 field quoting: wraps in quotes (doubling inner quotes) only when needed.
std::string csv_field(const std::string& value);

std::string format_report(const VerificationReport& report, OutputFormat format);
std::string format_polygonal_table(const PolygonalTable& table, OutputFormat format);
std::string format_third_order_table(const ThirdOrderTable& table, OutputFormat format);

}  // namespace polyarea
