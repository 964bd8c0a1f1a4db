#include "hyperbessel/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <string>
#include <thread>

#include <json.hpp>

#include "hyperbessel/coefficients.hpp"
#include "hyperbessel/errors.hpp"
#include "hyperbessel/numeric.hpp"

namespace hyperbessel::cli {

namespace {

using Clock = std::chrono::steady_clock;

const SeriesPolicy kExtendedPolicy{1e-48, 400};

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> failures(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) body(i);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

double platform_bessel(Kind kind, int n, double z) {
  const double magnitude = kind == Kind::I ? std::cyl_bessel_i(double(n), std::abs(z))
                                           : std::cyl_bessel_j(double(n), std::abs(z));
  return (z < 0 && n % 2 != 0) ? -magnitude : magnitude;
}

void cross_check_oracle(Kind kind, int n, double z, double oracle) {
  const double platform = platform_bessel(kind, n, z);
  const double scale = kind == Kind::I ? std::abs(platform) : std::max(1.0, std::cyl_bessel_i(double(n), std::abs(z)));
  if (std::abs(oracle - platform) > 1e-10 * scale) {
    throw ConsistencyError("oracle disagrees with platform Bessel at kind=" + std::string(1, to_char(kind)) +
                           " n=" + std::to_string(n) + " z=" + format_value(z));
  }
}

template <class Real>
Real oracle_value(Kind kind, int n, const Real& z, const SeriesPolicy& policy) {
  return kind == Kind::I ? ref_I(n, z, policy) : ref_J(n, z, policy);
}

std::int64_t time_evaluation(const Approximant<double>& approx, Kind kind, double z) {
  constexpr int kBatch = 64;
  volatile double sink = 0.0;
  const auto start = Clock::now();
  for (int i = 0; i < kBatch; ++i) sink = sink + approx(kind, z);
  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
  return static_cast<std::int64_t>(elapsed / kBatch);
}

}  // namespace

std::vector<EvalReport> evaluate_grid(const GridOptions& options, const SeriesPolicy& policy) {
  if (options.orders.empty() || options.zs.empty()) throw ArgumentError("empty evaluation grid");
  for (int n : options.orders) validate_order(n, options.p);

  std::vector<std::shared_ptr<const Approximant<double>>> binary;
  std::vector<std::shared_ptr<const Approximant<Extended>>> extended;
  for (int n : options.orders) {
    const double eps = options.eps.value_or(default_small_arg_threshold(n));
    binary.push_back(cached_approximant(n, options.p, eps));
    if (options.extended) extended.push_back(std::make_shared<const Approximant<Extended>>(n, options.p, eps));
  }

  const std::size_t columns = options.zs.size();
  std::vector<EvalReport> reports(options.orders.size() * columns);
  parallel_for(reports.size(), options.threads, [&](std::size_t index) {
    const std::size_t row = index / columns;
    const double z = options.zs[index % columns];
    EvalReport& r = reports[index];
    r.kind = options.kind;
    r.n = options.orders[row];
    r.p = options.p;
    r.z = z;

    const double oracle = oracle_value(options.kind, r.n, z, policy);
    cross_check_oracle(options.kind, r.n, z, oracle);
    if (options.extended) {
      const Extended xz(z);
      const Extended a = (*extended[row])(options.kind, xz);
      const Extended o = oracle_value(options.kind, r.n, xz, kExtendedPolicy);
      r.approx = static_cast<double>(a);
      r.oracle = static_cast<double>(o);
      r.abs_err = static_cast<double>(abs(a - o));
      if (o != 0) {
        r.rel_err = static_cast<double>(abs(a - o) / abs(o));
      }
    } else {
      r.approx = (*binary[row])(options.kind, z);
      r.oracle = oracle;
      fill_errors(r);
    }
    r.ns = time_evaluation(*binary[row], options.kind, z);
  });
  return reports;
}

int cmd_eval(const GridOptions& options, std::ostream& out) {
  GridOptions o = options;
  o.style.full_errors = true;
  const auto reports = evaluate_grid(o, policy_from_env());
  write_reports(out, reports, o.style);
  return kExitOk;
}

int cmd_table(const GridOptions& options, std::ostream& out) {
  const auto reports = evaluate_grid(options, policy_from_env());
  write_reports(out, reports, options.style);
  return kExitOk;
}

int cmd_coeffs(int n_max, std::ostream& out) {
  if (n_max < 1) throw ArgumentError("coeffs: n_max must be >= 1");
  const AlphaTable symbolic = AlphaTable::from_expansion(n_max);
  if (!(symbolic == alpha_recurrence_table(n_max))) {
    throw ConsistencyError("coeffs: recurrence table disagrees with the symbolic derivation");
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int q = 1; q <= n; ++q) {
      if (has_closed_form(n, q) && alpha_closed_form(n, q) != symbolic.at(n, q)) {
        throw ConsistencyError("coeffs: closed form disagrees at n=" + std::to_string(n) + " q=" + std::to_string(q));
      }
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto row = symbolic.row(n);
    for (std::size_t q = 0; q < row.size(); ++q) out << (q ? " " : "") << row[q];
    out << '\n';
  }
  return kExitOk;
}

double fit_error_slope(Kind kind, int n, int p, std::span<const double> zs, std::optional<double> eps) {
  if (zs.size() < 8) throw ArgumentError("scaling: need at least 8 samples");
  for (double z : zs) {
    if (!(z > 0.0 && z <= 1.0)) throw ArgumentError("scaling: every z must lie in (0, 1]");
  }
  const auto [lo, hi] = std::minmax_element(zs.begin(), zs.end());
  if (*hi / *lo < 1.0 + 1e-9) throw ArgumentError("scaling: degenerate z range");

  const Approximant<Extended> approx(n, p, eps);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double z : zs) {
    const Extended xz(z);
    const Extended error = abs(approx(kind, xz) - oracle_value(kind, n, xz, kExtendedPolicy));
    if (error == 0) throw ConsistencyError("scaling: error vanished at z=" + format_value(z));
    const double x = std::log(z);
    const double y = static_cast<double>(log(error));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double count = static_cast<double>(zs.size());
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

int cmd_scaling(const ScalingOptions& options, std::ostream& out) {
  validate_order(options.n, options.p);
  const double slope = fit_error_slope(options.kind, options.n, options.p, options.zs, options.eps);
  const int expected = 4 * options.p - options.n;
  const auto [lo, hi] = std::minmax_element(options.zs.begin(), options.zs.end());
  if (options.format == Format::Csv) {
    out << "kind,n,p,z_min,z_max,samples,slope,expected\n"
        << to_char(options.kind) << ',' << options.n << ',' << options.p << ',' << format_value(*lo) << ','
        << format_value(*hi) << ',' << options.zs.size() << ',' << format_value(slope) << ',' << expected << '\n';
  } else {
    nlohmann::ordered_json row{{"kind", std::string(1, to_char(options.kind))},
                               {"n", options.n},
                               {"p", options.p},
                               {"z_min", *lo},
                               {"z_max", *hi},
                               {"samples", options.zs.size()},
                               {"slope", slope},
                               {"expected", expected}};
    out << nlohmann::ordered_json::array({row}).dump(2) << '\n';
  }
  return kExitOk;
}

namespace {

template <class F>
double median_ns_per_eval(int repetitions, std::size_t points, F&& sweep) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(repetitions));
  for (int rep = 0; rep < repetitions; ++rep) {
    const auto start = Clock::now();
    sweep();
    const auto elapsed = std::chrono::duration<double, std::nano>(Clock::now() - start).count();
    samples.push_back(elapsed / static_cast<double>(points));
  }
  auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

}  // namespace

int cmd_bench(const BenchOptions& options, const SeriesPolicy& policy, std::ostream& out) {
  if (options.repetitions < 1) throw ArgumentError("bench: repetitions must be >= 1");
  if (options.zs.empty()) throw ArgumentError("bench: empty z grid");
  validate_order(options.n, options.p);
  const auto approx = cached_approximant(options.n, options.p,
                                         options.eps.value_or(default_small_arg_threshold(options.n)));
  for (double z : options.zs) (void)oracle_value(options.kind, options.n, z, policy);  // range check

  volatile double sink = 0.0;
  const double approx_ns = median_ns_per_eval(options.repetitions, options.zs.size(), [&] {
    for (double z : options.zs) sink = sink + (*approx)(options.kind, z);
  });
  const double oracle_ns = median_ns_per_eval(options.repetitions, options.zs.size(), [&] {
    for (double z : options.zs) sink = sink + oracle_value(options.kind, options.n, z, policy);
  });

  if (options.format == Format::Csv) {
    char a[32], o[32];
    std::snprintf(a, sizeof a, "%.1f", approx_ns);
    std::snprintf(o, sizeof o, "%.1f", oracle_ns);
    out << "kind,n,p,points,repetitions,approx_ns,oracle_ns\n"
        << to_char(options.kind) << ',' << options.n << ',' << options.p << ',' << options.zs.size() << ','
        << options.repetitions << ',' << a << ',' << o << '\n';
  } else {
    nlohmann::ordered_json row{{"kind", std::string(1, to_char(options.kind))},
                               {"n", options.n},
                               {"p", options.p},
                               {"points", options.zs.size()},
                               {"repetitions", options.repetitions},
                               {"approx_ns", approx_ns},
                               {"oracle_ns", oracle_ns}};
    out << nlohmann::ordered_json::array({row}).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_identities(const IdentityOptions& options, const SeriesPolicy& policy, std::ostream& out) {
  if (options.zs.empty() || options.ps.empty()) throw ArgumentError("identities: empty grid");
  std::vector<std::pair<Identity, double>> maxima;
  double overall = 0.0;
  for (Identity which : kAllIdentities) {
    double worst = 0.0;
    const std::vector<int> fixed{0};
    for (int p : identity_uses_p(which) ? options.ps : fixed) {
      for (double z : options.zs) worst = std::max(worst, std::abs(identity_residual(which, p, z, policy)));
    }
    maxima.emplace_back(which, worst);
    overall = std::max(overall, worst);
  }

  if (options.format == Format::Csv) {
    out << "identity,max_abs_residual\n";
    for (const auto& [which, worst] : maxima) out << identity_name(which) << ',' << format_error(worst, false) << '\n';
    out << "all," << format_error(overall, false) << '\n';
  } else {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [which, worst] : maxima) {
      rows.push_back({{"identity", std::string(identity_name(which))}, {"max_abs_residual", worst}});
    }
    rows.push_back({{"identity", "all"}, {"max_abs_residual", overall}});
    out << rows.dump(2) << '\n';
  }
  return overall < options.tolerance ? kExitOk : kExitConsistency;
}

}  // namespace hyperbessel::cli
