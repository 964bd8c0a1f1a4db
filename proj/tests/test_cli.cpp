#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperbessel/cli/app.hpp"
#include "hyperbessel/cli/commands.hpp"
#include "hyperbessel/cli/parse.hpp"
#include "hyperbessel/cli/report.hpp"
#include "hyperbessel/errors.hpp"

namespace hb = hyperbessel;
namespace cli = hyperbessel::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperbessel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST(Parse, RealGrid) {
  EXPECT_EQ(cli::parse_real_grid("1,2,3"), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(cli::parse_real_grid("0.5"), (std::vector<double>{0.5}));
  const auto g = cli::parse_real_grid("0.1:0.5:5");
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[0], 0.1);
  EXPECT_DOUBLE_EQ(g[2], 0.3);
  EXPECT_EQ(g[4], 0.5);
  EXPECT_THROW(cli::parse_real_grid("1,x"), hb::ArgumentError);
  EXPECT_THROW(cli::parse_real_grid("1:2"), hb::ArgumentError);
  EXPECT_THROW(cli::parse_real_grid("1:2:0"), hb::ArgumentError);
  EXPECT_THROW(cli::parse_real_grid("nan"), hb::ArgumentError);
}

TEST(Parse, IntList) {
  EXPECT_EQ(cli::parse_int_list("0:3"), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(cli::parse_int_list("2,5"), (std::vector<int>{2, 5}));
  EXPECT_THROW(cli::parse_int_list("3:1"), hb::ArgumentError);
  EXPECT_THROW(cli::parse_int_list("1.5"), hb::ArgumentError);
}

TEST(Report, ErrorsAndFlaggedRelativeError) {
  cli::EvalReport r;
  r.approx = 1.5;
  r.oracle = 1.0;
  cli::fill_errors(r);
  EXPECT_DOUBLE_EQ(r.abs_err, 0.5);
  ASSERT_TRUE(r.rel_err);
  EXPECT_DOUBLE_EQ(*r.rel_err, 0.5);
  r.oracle = 0.0;
  cli::fill_errors(r);
  EXPECT_FALSE(r.rel_err);
  EXPECT_EQ(cli::format_error(1.234e-5, false), "1.2e-05");
  EXPECT_EQ(cli::format_value(0.1), "1.0000000000000001e-01");
}

TEST(Eval, TableOneCellAndFormat) {
  const auto r = run({"eval", "--kind", "I", "-n", "0", "-p", "2", "-z", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], cli::kReportColumns);
  const auto f = fields(ls[1]);
  ASSERT_EQ(f.size(), 9u);
  EXPECT_EQ(f[0], "I");
  EXPECT_EQ(f[3], "1.0000000000000000e+00");
  EXPECT_NEAR(std::stod(f[7]), 1.6e-7, 0.25 * 1.6e-7);
  EXPECT_EQ(f[7].size(), std::string("1.5734764202428892e-07").size());  // full precision
}

TEST(Eval, ZeroOracleFlagsRelativeError) {
  const auto r = run({"eval", "--kind", "I", "-n", "1", "-p", "2", "-z", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = fields(lines(r.out)[1]);
  EXPECT_EQ(std::stod(f[4]), 0.0);
  EXPECT_EQ(std::stod(f[5]), 0.0);
  EXPECT_EQ(std::stod(f[6]), 0.0);
  EXPECT_EQ(f[7], "nan");
}

TEST(Eval, JWithTightTail) {
  const auto r = run({"eval", "--kind", "J", "-n", "0", "-p", "3", "-z", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = nlohmann::json::parse(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["kind"], "J");
  EXPECT_LT(rows[0]["rel_err"].get<double>(), 1e-9);
  for (const char* key : {"kind", "n", "p", "z", "approx", "oracle", "abs_err", "rel_err", "ns"}) {
    EXPECT_TRUE(rows[0].contains(key)) << key;
  }
}

TEST(Eval, ExitCodes) {
  EXPECT_EQ(run({"eval", "-n", "8", "-p", "2", "-z", "1"}).code, 3);
  EXPECT_EQ(run({"eval", "-n", "1", "-z", "abc"}).code, 2);
  EXPECT_EQ(run({"eval", "-n", "1", "-z", "1", "--kind", "K"}).code, 2);
  EXPECT_EQ(run({"eval", "-z", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "-n", "1", "-z", "40"}).code, 2);
  EXPECT_EQ(run({"eval", "-n", "1", "-z", "1", "--eps", "-1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Table, DefaultsReproduceSixteenCells) {
  const auto r = run({"table"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 17u);
  // Ordered by (n, z); errors to two significant figures.
  const auto cell_i2_z2 = fields(ls[1 + 2 * 4 + 1]);
  EXPECT_EQ(cell_i2_z2[1], "2");
  EXPECT_EQ(cell_i2_z2[3], "2.0000000000000000e+00");
  EXPECT_EQ(cell_i2_z2[7], "1.0e-03");
  const auto cell_i3_z4 = fields(ls[16]);
  EXPECT_EQ(cell_i3_z4[7], "3.0e-02");
  EXPECT_EQ(fields(ls[1])[7], "1.6e-07");
}

TEST(Table, ThreadedOutputIsDeterministic) {
  const auto serial = run({"table", "-n", "0:3", "-z", "0.5:4:8", "--extended"});
  const auto threaded = run({"table", "-n", "0:3", "-z", "0.5:4:8", "--extended", "--threads", "4"});
  ASSERT_EQ(serial.code, 0);
  ASSERT_EQ(threaded.code, 0);
  auto strip_ns = [](const std::string& text) {
    std::string out;
    for (const auto& line : lines(text)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  EXPECT_EQ(strip_ns(serial.out), strip_ns(threaded.out));
}

TEST(Table, PEqualsOneIsWorse) {
  const auto r = run({"table", "-n", "0", "-p", "1", "-z", "1", "--full"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(std::stod(fields(lines(r.out)[1])[7]), 1.6e-7);
}

TEST(Table, JsonTwoSignificantFigures) {
  const auto r = run({"table", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = nlohmann::json::parse(r.out);
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_EQ(rows[0]["rel_err"].get<double>(), 1.6e-7);
}

TEST(Coeffs, DumpFormat) {
  const auto r = run({"coeffs", "-n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n-1 1\n3 -3 1\n-15 15 -6 1\n");
  const auto full = run({"coeffs"});
  ASSERT_EQ(full.code, 0);
  const auto ls = lines(full.out);
  ASSERT_EQ(ls.size(), 20u);
  EXPECT_EQ(ls[19].substr(0, ls[19].find(' ')), "-8200794532637891559375");  // -(37!!)
  EXPECT_EQ(run({"coeffs", "-n", "0"}).code, 2);
}

TEST(Scaling, SlopesMatchTruncationOrder) {
  struct Case {
    int n, p;
  };
  for (auto [n, p] : {Case{0, 2}, Case{3, 2}, Case{0, 1}}) {
    const auto r = run({"scaling", "-n", std::to_string(n), "-p", std::to_string(p)});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto f = fields(lines(r.out)[1]);
    EXPECT_EQ(std::stoi(f[7]), 4 * p - n);
    EXPECT_NEAR(std::stod(f[6]), 4 * p - n, 0.2);
  }
}

TEST(Scaling, RejectsBadRanges) {
  EXPECT_EQ(run({"scaling", "-z", "0.1:0.5:4"}).code, 2);
  EXPECT_EQ(run({"scaling", "-z", "0.5:0.5:10"}).code, 2);
  EXPECT_EQ(run({"scaling", "-z", "0.5:1.5:10"}).code, 2);
  EXPECT_EQ(run({"scaling", "-n", "9", "-p", "2"}).code, 3);
}

TEST(Bench, SummaryRow) {
  const auto r = run({"bench", "--kind", "I", "-n", "0", "-p", "2", "-z", "0.5:4:16", "--reps", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "kind,n,p,points,repetitions,approx_ns,oracle_ns");
  const auto f = fields(ls[1]);
  ASSERT_EQ(f.size(), 7u);
  EXPECT_GT(std::stod(f[5]), 0.0);
  EXPECT_GT(std::stod(f[6]), 0.0);

  const auto j = run({"bench", "--kind", "J", "-n", "2", "-p", "3", "--reps", "3", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(nlohmann::json::parse(j.out)[0]["kind"], "J");

  EXPECT_EQ(run({"bench", "--reps", "0"}).code, 2);
}

TEST(Identities, SuitePasses) {
  const auto r = run({"identities"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(fields(ls.back())[0], "all");
  EXPECT_LT(std::stod(fields(ls.back())[1]), 1e-12);
}

TEST(Identities, ToleranceViolationIsConsistencyFailure) {
  cli::IdentityOptions options;
  options.tolerance = 1e-30;
  std::ostringstream out;
  EXPECT_EQ(cli::cmd_identities(options, {}, out), cli::kExitConsistency);
}

TEST(Environment, OracleToleranceOverride) {
  ::setenv("HYPERBESSEL_ORACLE_TOL", "bogus", 1);
  EXPECT_EQ(run({"eval", "-n", "0", "-z", "1"}).code, 2);
  ::setenv("HYPERBESSEL_ORACLE_TOL", "1e-13", 1);
  EXPECT_EQ(run({"eval", "-n", "0", "-z", "1"}).code, 0);
  // A loose oracle no longer agrees with the platform Bessel functions.
  ::setenv("HYPERBESSEL_ORACLE_TOL", "1e-3", 1);
  EXPECT_EQ(run({"eval", "-n", "0", "-z", "1"}).code, 4);
  ::unsetenv("HYPERBESSEL_ORACLE_TOL");
}

TEST(Executable, ExitCodeFromProcess) {
  const std::string base = HYPERBESSEL_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status(base + " eval -n 0 -p 2 -z 1"), 0);
  EXPECT_EQ(status(base + " eval -n 4 -p 1 -z 1"), 3);
  EXPECT_EQ(status(base + " bench --reps 0"), 2);
}
