#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "hyperbessel/approximation.hpp"

namespace hyperbessel::cli {

// One evaluated grid cell.
struct EvalReport {
  Kind kind = Kind::I;
  int n = 0;
  int p = 0;
  double z = 0.0;
  double approx = 0.0;
  double oracle = 0.0;
  double abs_err = 0.0;
  std::optional<double> rel_err;  // empty when the oracle is exactly zero
  std::int64_t ns = 0;
};

// Fills abs_err and rel_err from approx and oracle.
void fill_errors(EvalReport& report);

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

struct ReportStyle {
  Format format = Format::Csv;
  bool full_errors = true;  // false: two significant figures for errors
};

inline constexpr const char* kReportColumns = "kind,n,p,z,approx,oracle,abs_err,rel_err,ns";

// "%.16e" for values, "%.1e" for two-significant-figure errors.
std::string format_value(double value);
std::string format_error(double value, bool full);

void write_reports(std::ostream& out, std::span<const EvalReport> reports, const ReportStyle& style);

}  // namespace hyperbessel::cli
