#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/math/constants/constants.hpp>

#include "hyperbessel/errors.hpp"

namespace hyperbessel {

// Truncation control for the ascending-series oracle.
struct SeriesPolicy {
  double tolerance = 1e-15;  // stop once |term| < tolerance * |partial sum|
  int max_terms = 200;

  void validate() const;
};

// Environment variable that overrides SeriesPolicy::tolerance in the tools.
inline constexpr const char* kOracleToleranceEnv = "HYPERBESSEL_ORACLE_TOL";

// Default policy with the tolerance taken from kOracleToleranceEnv when set.
SeriesPolicy policy_from_env();

inline constexpr double kOracleMaxArgument = 30.0;
inline constexpr int kOracleMaxOrder = 64;

// Compensated (Kahan) accumulator.
template <class Real>
class CompensatedSum {
 public:
  void add(const Real& value) {
    const Real y = value - compensation_;
    const Real t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  const Real& value() const noexcept { return sum_; }

 private:
  Real sum_ = 0;
  Real compensation_ = 0;
};

namespace detail {

// sum_k (-1)^(k*alternating) (z/2)^(n+2k) / (k! (n+k)!) without order or
// argument caps. The leading term uses a running product, never n! itself.
template <class Real>
Real bessel_series(int n, const Real& z, const SeriesPolicy& policy, bool alternating) {
  using std::abs;
  const Real half = z / Real(2);
  Real term = 1;
  for (int i = 1; i <= n; ++i) term *= half / Real(i);
  if (term == 0) return Real(0);

  const Real half2 = half * half;
  const Real tolerance(policy.tolerance);
  CompensatedSum<Real> sum;
  sum.add(term);
  int quiet = 0;
  for (int k = 1; k < policy.max_terms; ++k) {
    term *= half2 / (Real(k) * Real(n + k));
    if (alternating) term = -term;
    sum.add(term);
    if (term == 0) break;
    // Alternating sums need two consecutive small terms before stopping.
    quiet = abs(term) < tolerance * abs(sum.value()) ? quiet + 1 : 0;
    if (quiet >= (alternating ? 2 : 1)) break;
  }
  return sum.value();
}

template <class Real>
void check_oracle_range(int n, const Real& z, const char* where) {
  using std::abs;
  using std::isfinite;
  if (n < 0 || n > kOracleMaxOrder) {
    throw ArgumentError(std::string(where) + ": order must be in 0.." + std::to_string(kOracleMaxOrder));
  }
  if (!isfinite(z) || abs(z) > Real(kOracleMaxArgument)) {
    throw ArgumentError(std::string(where) + ": |z| must be finite and <= 30");
  }
}

}  // namespace detail

// I_n(z) by its ascending series, compensated summation.
template <class Real>
Real ref_I(int n, const Real& z, const SeriesPolicy& policy = {}) {
  policy.validate();
  detail::check_oracle_range(n, z, "ref_I");
  return detail::bessel_series(n, z, policy, false);
}

// J_n(z) by the alternating ascending series.
template <class Real>
Real ref_J(int n, const Real& z, const SeriesPolicy& policy = {}) {
  policy.validate();
  detail::check_oracle_range(n, z, "ref_J");
  return detail::bessel_series(n, z, policy, true);
}

// 2 sum_{k>=1} I_{4pk}(z), the amount by which the n = 0 approximant
// exceeds I_0.
template <class Real>
Real tail_I0(int p, const Real& z, const SeriesPolicy& policy = {}) {
  using std::abs;
  policy.validate();
  if (p < 1) throw ArgumentError("tail_I0: p must be >= 1");
  detail::check_oracle_range(0, z, "tail_I0");
  CompensatedSum<Real> sum;
  const Real tolerance(policy.tolerance);
  for (int k = 1; k <= policy.max_terms; ++k) {
    const Real term = Real(2) * detail::bessel_series(4 * p * k, z, policy, false);
    sum.add(term);
    if (term == 0 || abs(term) < tolerance * abs(sum.value())) break;
  }
  return sum.value();
}

// Lattice-average identities at w = 1 checked by the oracle.
enum class Identity {
  CoshEvenOrders,   // cosh z = I_0 + 2 sum_{k>=1} I_2k
  CoshHalfSquared,  // cosh^2(z/2) = I_0 + 2 sum I_4k
  EightNodes,       // (1 + cosh z + 2 cosh(z/sqrt2)) / 4 = I_0 + 2 sum I_8k
  NodeAverage,      // (1/2p)(1 + cosh z + 2 sum_k cosh(z cos(k pi/2p))) = I_0 + 2 sum I_4pk
  TrigNodeAverage,  // same with cos and J
};

inline constexpr Identity kAllIdentities[] = {Identity::CoshEvenOrders, Identity::CoshHalfSquared,
                                              Identity::EightNodes, Identity::NodeAverage,
                                              Identity::TrigNodeAverage};

std::string_view identity_name(Identity which);
bool identity_uses_p(Identity which) noexcept;

// Left side minus right side, right side truncated by the policy. p is
// ignored by identities that fix the node count.
template <class Real>
Real identity_residual(Identity which, int p, const Real& z, const SeriesPolicy& policy = {}) {
  using std::abs;
  using std::cos;
  using std::cosh;
  using std::sqrt;
  policy.validate();
  detail::check_oracle_range(0, z, "identity_residual");

  int period = 0;
  bool trig = false;
  Real lhs = 0;
  switch (which) {
    case Identity::CoshEvenOrders:
      period = 2;
      lhs = cosh(z);
      break;
    case Identity::CoshHalfSquared: {
      period = 4;
      const Real c = cosh(Real(z / Real(2)));
      lhs = c * c;
      break;
    }
    case Identity::EightNodes:
      period = 8;
      lhs = (Real(1) + cosh(z) + Real(2) * cosh(Real(z / sqrt(Real(2))))) / Real(4);
      break;
    case Identity::NodeAverage:
    case Identity::TrigNodeAverage: {
      if (p < 1) throw ArgumentError("identity_residual: p must be >= 1");
      trig = which == Identity::TrigNodeAverage;
      period = 4 * p;
      const Real step = boost::math::constants::pi<Real>() / Real(2 * p);
      auto f = [trig](const Real& x) { return trig ? Real(cos(x)) : Real(cosh(x)); };
      Real sum = Real(1) + f(z);
      for (int k = 1; k < p; ++k) sum += Real(2) * f(Real(z * cos(Real(k) * step)));
      lhs = sum / Real(2 * p);
      break;
    }
    default:
      throw ArgumentError("identity_residual: unknown identity");
  }

  CompensatedSum<Real> rhs;
  rhs.add(detail::bessel_series(0, z, policy, trig));
  const Real tolerance(policy.tolerance);
  for (int k = 1; k <= policy.max_terms; ++k) {
    const Real term = Real(2) * detail::bessel_series(period * k, z, policy, trig);
    rhs.add(term);
    if (term == 0 || abs(term) < tolerance * abs(rhs.value())) break;
  }
  return lhs - rhs.value();
}

}  // namespace hyperbessel
