#include "hyperbessel/cli/app.hpp"

#include <functional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "hyperbessel/cli/commands.hpp"
#include "hyperbessel/cli/parse.hpp"
#include "hyperbessel/errors.hpp"

namespace hyperbessel::cli {

namespace {

Kind parse_kind(const std::string& text) { return text == "J" ? Kind::J : Kind::I; }

// Raw option text shared by the grid-style subcommands.
struct RawOptions {
  std::string kind = "I";
  std::string orders;
  int n = 0;
  int p = 2;
  std::string z;
  std::optional<double> eps;
  std::string format = "csv";
  bool full = false;
  bool extended = false;
  unsigned threads = 1;
  int repetitions = 200;
  std::string ps = "1,2,3";
};

void add_kind(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("--kind", raw.kind, "I (modified) or J (ordinary)")->check(CLI::IsMember({"I", "J"}));
}

void add_common(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("--eps", raw.eps, "small-argument threshold (default max(0.25(n+1), 0.1 n^2))");
  cmd.add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bessel functions of integer order from hyperbolic and trigonometric node sums"};
  app.require_subcommand(1);
  RawOptions raw;
  std::function<int()> action;

  auto* eval = app.add_subcommand("eval", "evaluate one order at one or more arguments");
  add_kind(*eval, raw);
  eval->add_option("-n", raw.n, "order")->required();
  eval->add_option("-p", raw.p, "accuracy parameter (4p nodes)");
  eval->add_option("-z", raw.z, "argument: value, comma list or a:b:steps")->required();
  add_common(*eval, raw);
  eval->add_flag("--full", raw.full, "full-precision errors (always on for eval)");
  eval->add_flag("--extended", raw.extended, "measure errors with 50-digit arithmetic");
  eval->callback([&] {
    action = [&] {
      GridOptions o;
      o.kind = parse_kind(raw.kind);
      o.orders = {raw.n};
      o.p = raw.p;
      o.zs = parse_real_grid(raw.z);
      o.eps = raw.eps;
      o.extended = raw.extended;
      o.style = {parse_format(raw.format), true};
      return cmd_eval(o, out);
    };
  });

  auto* table = app.add_subcommand("table", "relative-error grid over orders and arguments");
  add_kind(*table, raw);
  raw.orders = "0:3";
  raw.z = "1,2,3,4";
  table->add_option("-n", raw.orders, "orders: comma list or a:b");
  table->add_option("-p", raw.p, "accuracy parameter");
  table->add_option("-z", raw.z, "arguments: comma list or a:b:steps");
  add_common(*table, raw);
  table->add_flag("--full", raw.full, "full-precision errors instead of two significant figures");
  table->add_flag("--extended", raw.extended, "measure errors with 50-digit arithmetic");
  table->add_option("--threads", raw.threads, "worker threads")->check(CLI::Range(1u, 256u));
  table->callback([&] {
    action = [&] {
      GridOptions o;
      o.kind = parse_kind(raw.kind);
      o.orders = parse_int_list(raw.orders);
      o.p = raw.p;
      o.zs = parse_real_grid(raw.z);
      o.eps = raw.eps;
      o.extended = raw.extended;
      o.threads = raw.threads;
      o.style = {parse_format(raw.format), raw.full};
      return cmd_table(o, out);
    };
  });

  auto* coeffs = app.add_subcommand("coeffs", "dump alpha coefficients, one row per order");
  int n_max = kDefaultMaxOrder;
  coeffs->add_option("-n", n_max, "largest order");
  coeffs->callback([&] { action = [&] { return cmd_coeffs(n_max, out); }; });

  auto* scaling = app.add_subcommand("scaling", "fit the small-argument error exponent");
  add_kind(*scaling, raw);
  scaling->add_option("-n", raw.n, "order");
  scaling->add_option("-p", raw.p, "accuracy parameter");
  std::string scaling_z = "0.1:0.5:16";
  scaling->add_option("-z", scaling_z, "sample arguments in (0, 1], at least 8");
  add_common(*scaling, raw);
  scaling->callback([&] {
    action = [&] {
      ScalingOptions o;
      o.kind = parse_kind(raw.kind);
      o.n = raw.n;
      o.p = raw.p;
      o.zs = parse_real_grid(scaling_z);
      o.eps = raw.eps;
      o.format = parse_format(raw.format);
      return cmd_scaling(o, out);
    };
  });

  auto* bench = app.add_subcommand("bench", "median ns/eval of the approximant and the series oracle");
  add_kind(*bench, raw);
  bench->add_option("-n", raw.n, "order");
  bench->add_option("-p", raw.p, "accuracy parameter");
  std::string bench_z = "0.5:4:64";
  bench->add_option("-z", bench_z, "argument grid");
  bench->add_option("--reps", raw.repetitions, "repetitions of the full grid");
  add_common(*bench, raw);
  bench->callback([&] {
    action = [&] {
      BenchOptions o;
      o.kind = parse_kind(raw.kind);
      o.n = raw.n;
      o.p = raw.p;
      o.zs = parse_real_grid(bench_z);
      o.repetitions = raw.repetitions;
      o.eps = raw.eps;
      o.format = parse_format(raw.format);
      return cmd_bench(o, policy_from_env(), out);
    };
  });

  auto* identities = app.add_subcommand("identities", "residuals of the node-average identities");
  std::string identity_z = "0.5,1,2,4";
  identities->add_option("-p", raw.ps, "accuracy parameters for the p-dependent identities");
  identities->add_option("-z", identity_z, "arguments");
  identities->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  identities->callback([&] {
    action = [&] {
      IdentityOptions o;
      o.ps = parse_int_list(raw.ps);
      o.zs = parse_real_grid(identity_z);
      o.format = parse_format(raw.format);
      return cmd_identities(o, policy_from_env(), out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "unexpected failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hyperbessel::cli
