#include "hyperbessel/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "hyperbessel/errors.hpp"

namespace hyperbessel::cli {

void fill_errors(EvalReport& report) {
  report.abs_err = std::abs(report.approx - report.oracle);
  if (report.oracle != 0.0) {
    report.rel_err = report.abs_err / std::abs(report.oracle);
  } else {
    report.rel_err.reset();
  }
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw ArgumentError("unknown format '" + text + "' (expected csv or json)");
}

std::string format_value(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.16e", value);
  return buffer;
}

std::string format_error(double value, bool full) {
  if (full) return format_value(value);
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1e", value);
  return buffer;
}

namespace {

nlohmann::ordered_json error_json(double value, bool full) {
  // Round-trips the printed text so JSON and CSV carry the same digits.
  return full ? nlohmann::ordered_json(value) : nlohmann::ordered_json(std::strtod(format_error(value, false).c_str(), nullptr));
}

}  // namespace

void write_reports(std::ostream& out, std::span<const EvalReport> reports, const ReportStyle& style) {
  if (style.format == Format::Csv) {
    out << kReportColumns << '\n';
    for (const auto& r : reports) {
      out << to_char(r.kind) << ',' << r.n << ',' << r.p << ',' << format_value(r.z) << ',' << format_value(r.approx)
          << ',' << format_value(r.oracle) << ',' << format_error(r.abs_err, style.full_errors) << ','
          << (r.rel_err ? format_error(*r.rel_err, style.full_errors) : std::string("nan")) << ',' << r.ns << '\n';
    }
    return;
  }

  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    rows.push_back({
        {"kind", std::string(1, to_char(r.kind))},
        {"n", r.n},
        {"p", r.p},
        {"z", r.z},
        {"approx", r.approx},
        {"oracle", r.oracle},
        {"abs_err", error_json(r.abs_err, style.full_errors)},
        {"rel_err", r.rel_err ? error_json(*r.rel_err, style.full_errors) : nlohmann::ordered_json(nullptr)},
        {"ns", r.ns},
    });
  }
  out << rows.dump(2) << '\n';
}

}  // namespace hyperbessel::cli
