#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hyperbessel/coefficients.hpp"
#include "hyperbessel/errors.hpp"
#include "hyperbessel/kernels.hpp"
#include "hyperbessel/numeric.hpp"

namespace hyperbessel {

enum class Kind { I, J };

constexpr char to_char(Kind kind) noexcept { return kind == Kind::I ? 'I' : 'J'; }

// Below this |z| the assembled form would lose more than about four digits
// to cancellation between the negative powers of z. 0.25 (n + 1) covers
// n <= 4; the quadratic branch tracks the measured crossover beyond that.
constexpr double default_small_arg_threshold(int n) noexcept {
  const double linear = 0.25 * (n + 1);
  const double quadratic = 0.1 * n * n;
  return linear > quadratic ? linear : quadratic;
}

// Upper bound accepted for a threshold (the n = 20 default).
inline constexpr double kMaxSmallArgThreshold = 40.0;

struct ApproxRequest {
  Kind kind = Kind::I;
  int n = 0;
  int p = 2;
  double z = 0.0;
  std::optional<double> eps;  // defaults to default_small_arg_threshold(n)

  double threshold() const noexcept { return eps.value_or(default_small_arg_threshold(n)); }
};

// Throws ArgumentError for n < 0 or p < 1, DomainError for n >= 4p or
// n > kDefaultMaxOrder.
void validate_order(int n, int p);
void validate_threshold(double eps);
void validate(const ApproxRequest& request);

// Laurent coefficients of the approximant about z = 0, starting at
// min_order = 1 - n (0 for n = 0). Every negative-order coefficient is
// exactly zero when the construction is consistent.
struct LaurentSeries {
  int min_order = 0;
  std::vector<Rational> coeffs;

  int max_order() const noexcept { return min_order + static_cast<int>(coeffs.size()) - 1; }
  Rational at(int order) const {
    if (order < min_order || order > max_order()) return Rational(0);
    return coeffs[static_cast<std::size_t>(order - min_order)];
  }
};

// Exact Maclaurin coefficients of I_n^(ap)(z; p), obtained by expanding
// every kernel in its own power series
//   S_q(z) = sum_{j odd} M_{q+j} z^j / j!,  C_q(z) = sum_{j even} M_{q+j} z^j / j!
// with exact node moments M_m, and collecting (1/2p) sum_q alpha_q z^(q-n) K_q.
class ExactApproximantSeries {
 public:
  ExactApproximantSeries(int n, int p);

  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }

  // Coefficient of z^order; order >= 1 - n.
  Rational coefficient(int order);

 private:
  const Rational& moment(int m);
  const BigInt& factorial(int j);

  int n_;
  int p_;
  std::vector<Term> terms_;
  std::vector<Rational> moments_;
  std::vector<BigInt> factorials_;
};

LaurentSeries exact_maclaurin(int n, int p, int max_order);

// Approximants of fixed order n and accuracy parameter p. Immutable after
// construction and safe to share between threads.
//
//   I_n^(ap)(z) = (1/2p) sum_{q=1}^{n} alpha_q^(n) z^(q-n) K_q(z)     (n >= 1)
//   I_0^(ap)(z) = (1/2p) (1 + C_0(z))
//
// J_n^(ap)(z) = i^n I_n^(ap)(-iz), assembled in real arithmetic from the
// trigonometric kernels; term q carries the sign (-1)^(n + ceil(q/2)).
//
// For |z| < eps both are evaluated from the approximant's own Maclaurin
// series (exact rational coefficients rounded once), which agrees with the
// series of I_n / J_n through order 4p - n - 1.
template <class Real>
class Approximant {
 public:
  Approximant(int n, int p, std::optional<double> eps = std::nullopt)
      : n_(n), p_(p), nodes_(p), eps_(eps.value_or(default_small_arg_threshold(n))) {
    validate_order(n, p);
    validate_threshold(eps_);
    if (n > 0) {
      for (const BigInt& a : default_alpha_table().row(n)) alphas_.push_back(to_real<Real>(a));
    }
    build_series();
  }

  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  double threshold() const noexcept { return eps_; }
  std::size_t series_terms() const noexcept { return series_.size(); }

  Real operator()(Kind kind, const Real& z) const {
    detail::require_finite(z, "Approximant");
    using std::abs;
    return abs(z) < Real(eps_) ? series(kind, z) : assembled(kind, z);
  }
  Real I(const Real& z) const { return (*this)(Kind::I, z); }
  Real J(const Real& z) const { return (*this)(Kind::J, z); }

  // Direct kernel assembly, no small-argument switch.
  Real assembled(Kind kind, const Real& z) const {
    detail::require_finite(z, "Approximant::assembled");
    const auto family = kind == Kind::I ? KernelFamily::Hyperbolic : KernelFamily::Trigonometric;
    boost::container::small_vector<Real, 24> kernels(static_cast<std::size_t>(n_) + 1);
    evaluate_kernels_into<Real>(std::span<Real>(kernels.data(), kernels.size()), nodes_, z, family);
    const Real scale = Real(1) / Real(2 * p_);
    if (n_ == 0) return scale * (Real(1) + kernels[0]);

    // Ascending q with one division by z per step:
    // acc_q = acc_{q-1} / z + s_q alpha_q K_q ends at sum_q s_q alpha_q z^(q-n) K_q.
    Real acc = 0;
    for (int q = 1; q <= n_; ++q) {
      Real term = alphas_[static_cast<std::size_t>(q - 1)] * kernels[static_cast<std::size_t>(q)];
      if (kind == Kind::J && ((n_ + (q + 1) / 2) % 2 != 0)) term = -term;
      acc = (q == 1) ? term : Real(acc / z + term);
    }
    return scale * acc;
  }

  // Truncated Maclaurin series of the approximant.
  Real series(Kind kind, const Real& z) const {
    detail::require_finite(z, "Approximant::series");
    const Real z2 = z * z;
    Real acc = 0;
    for (std::size_t k = series_.size(); k-- > 0;) {
      const Real c = (kind == Kind::J && k % 2 != 0) ? Real(-series_[k]) : series_[k];
      acc = acc * z2 + c;
    }
    for (int i = 0; i < n_; ++i) acc *= z;
    return acc;
  }

 private:
  void build_series() {
    // Coefficients of z^(n + 2k). Stop once two consecutive terms at
    // |z| = eps are negligible against the running sum.
    using std::abs;
    constexpr int kMaxTerms = 400;
    ExactApproximantSeries exact(n_, p_);
    const Real tiny = std::numeric_limits<Real>::epsilon() / Real(16);
    const Real eps2 = Real(eps_) * Real(eps_);
    Real power = 1;
    Real sum = 0;
    int small_run = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
      const Real c = to_real<Real>(exact.coefficient(n_ + 2 * k));
      series_.push_back(c);
      const Real term = abs(c * power);
      sum += term;
      power *= eps2;
      small_run = (sum > 0 && term <= tiny * sum) ? small_run + 1 : 0;
      if (small_run >= 2 && k >= 1) return;
    }
    throw ArgumentError("Approximant: series fallback did not converge; lower the small-argument threshold");
  }

  int n_;
  int p_;
  NodeSet<Real> nodes_;
  double eps_;
  std::vector<Real> alphas_;
  std::vector<Real> series_;
};

// Thread-safe shared cache of binary64 approximants keyed by (n, p, eps).
std::shared_ptr<const Approximant<double>> cached_approximant(int n, int p, double eps);

double approx_I(const ApproxRequest& request);
double approx_J(const ApproxRequest& request);
// Dispatches on request.kind.
double approximate(const ApproxRequest& request);

// Literal p = 2 closed forms for n = 0..3, kept as an independent fixture
// for the general assembly. With s = 1/sqrt(2):
//   n=0: (1 + cosh z + 2 cosh(sz)) / 4
//   n=1: (sinh z + sqrt2 sinh(sz)) / 4
//   n=2: (-(sinh z + sqrt2 sinh(sz))/z + cosh z + cosh(sz)) / 4
//   n=3: (3(sinh z + sqrt2 sinh(sz))/z^2 - 3(cosh z + cosh(sz))/z + sinh z + s sinh(sz)) / 4
template <class Real>
Real closed_form_p2(int n, const Real& z) {
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  if (n < 0 || n > 3) throw ArgumentError("closed_form_p2: n must be in 0..3");
  detail::require_finite(z, "closed_form_p2");
  if (n >= 2 && z == 0) throw ArgumentError("closed_form_p2: z = 0 is singular for n >= 2");

  const Real root2 = sqrt(Real(2));
  const Real s = Real(1) / root2;
  const Real shz = sinh(z), chz = cosh(z);
  const Real shs = sinh(Real(s * z)), chs = cosh(Real(s * z));
  switch (n) {
    case 0: return (Real(1) + chz + Real(2) * chs) / Real(4);
    case 1: return (shz + root2 * shs) / Real(4);
    case 2: return (-(shz + root2 * shs) / z + chz + chs) / Real(4);
    default:
      return (Real(3) * (shz + root2 * shs) / (z * z) - Real(3) * (chz + chs) / z + shz + s * shs) / Real(4);
  }
}

}  // namespace hyperbessel
