#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hyperbessel/approximation.hpp"
#include "hyperbessel/cli/report.hpp"
#include "hyperbessel/reference.hpp"

namespace hyperbessel::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitConsistency = 4,
};

struct GridOptions {
  Kind kind = Kind::I;
  std::vector<int> orders{0, 1, 2, 3};
  int p = 2;
  std::vector<double> zs{1.0, 2.0, 3.0, 4.0};
  std::optional<double> eps;
  bool extended = false;  // errors measured with 50-digit arithmetic
  unsigned threads = 1;
  ReportStyle style;
};

// Evaluates every (n, z) cell. Rows are ordered by (n, z) whatever the
// thread count. The binary64 oracle is cross-checked against the platform
// Bessel functions; disagreement throws ConsistencyError.
std::vector<EvalReport> evaluate_grid(const GridOptions& options, const SeriesPolicy& policy);

int cmd_eval(const GridOptions& options, std::ostream& out);
int cmd_table(const GridOptions& options, std::ostream& out);

// One line per n: alpha_1^(n) .. alpha_n^(n). Cross-checks the symbolic
// derivation against the recurrence table and the closed forms first.
int cmd_coeffs(int n_max, std::ostream& out);

struct ScalingOptions {
  Kind kind = Kind::I;
  int n = 0;
  int p = 2;
  std::vector<double> zs;
  std::optional<double> eps;
  Format format = Format::Csv;
};

// Least-squares slope of log|approx - oracle| against log z, both sides
// evaluated with 50-digit arithmetic.
double fit_error_slope(Kind kind, int n, int p, std::span<const double> zs, std::optional<double> eps = {});

int cmd_scaling(const ScalingOptions& options, std::ostream& out);

struct BenchOptions {
  Kind kind = Kind::I;
  int n = 0;
  int p = 2;
  std::vector<double> zs;
  int repetitions = 200;
  std::optional<double> eps;
  Format format = Format::Csv;
};

int cmd_bench(const BenchOptions& options, const SeriesPolicy& policy, std::ostream& out);

struct IdentityOptions {
  std::vector<int> ps{1, 2, 3};
  std::vector<double> zs{0.5, 1.0, 2.0, 4.0};
  double tolerance = 1e-12;
  Format format = Format::Csv;
};

int cmd_identities(const IdentityOptions& options, const SeriesPolicy& policy, std::ostream& out);

}  // namespace hyperbessel::cli
