#pragma once

#include <cmath>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/math/constants/constants.hpp>

#include "hyperbessel/errors.hpp"
#include "hyperbessel/kernel_kind.hpp"
#include "hyperbessel/numeric.hpp"

namespace hyperbessel {

// Cosine nodes c_k = cos(k pi / 2p), k = 1..p-1, strictly decreasing in (0, 1).
template <class Real>
class NodeSet {
 public:
  explicit NodeSet(int p) : p_(p) {
    if (p < 1) throw ArgumentError("NodeSet: p must be >= 1, got " + std::to_string(p));
    using std::cos;
    const Real step = boost::math::constants::pi<Real>() / Real(2 * p);
    nodes_.reserve(static_cast<std::size_t>(p - 1));
    for (int k = 1; k < p; ++k) nodes_.push_back(cos(Real(k) * step));
  }

  int p() const noexcept { return p_; }
  std::span<const Real> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  int p_;
  std::vector<Real> nodes_;
};

template <class Real = double>
NodeSet<Real> make_nodes(int p) {
  return NodeSet<Real>(p);
}

enum class KernelFamily { Hyperbolic, Trigonometric };

namespace detail {

template <class Real>
void require_finite(const Real& z, const char* where) {
  using std::isfinite;
  if (!isfinite(z)) throw ArgumentError(std::string(where) + ": argument must be finite");
}

template <class Real>
Real odd_part(KernelFamily family, const Real& x) {
  using std::sin;
  using std::sinh;
  return family == KernelFamily::Hyperbolic ? Real(sinh(x)) : Real(sin(x));
}

template <class Real>
Real even_part(KernelFamily family, const Real& x) {
  using std::cos;
  using std::cosh;
  return family == KernelFamily::Hyperbolic ? Real(cosh(x)) : Real(cos(x));
}

// Both parts at once. cosh is recovered from sinh as sqrt(1 + sinh^2), which
// has no cancellation and costs a square root instead of a second exp.
template <class Real>
std::pair<Real, Real> odd_even_parts(KernelFamily family, const Real& x) {
  using std::abs;
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  if (family == KernelFamily::Trigonometric) return {Real(sin(x)), Real(cos(x))};
  Real s = sinh(x);
  if (abs(x) >= Real(300)) return {s, Real(cosh(x))};
  Real c = sqrt(Real(1) + s * s);
  return {std::move(s), std::move(c)};
}

template <class Real>
Real kernel_sum(KernelKind kind, KernelFamily family, int q, const NodeSet<Real>& nodes, const std::type_identity_t<Real>& z) {
  auto f = [&](const Real& x) { return kind == KernelKind::S ? odd_part(family, x) : even_part(family, x); };
  Real sum = f(z);
  for (const Real& c : nodes.nodes()) {
    Real weight = 2;
    for (int i = 0; i < q; ++i) weight *= c;
    sum += weight * f(Real(c * z));
  }
  return sum;
}

}  // namespace detail

// S_q(z) = sinh z + sum_k 2 c_k^q sinh(c_k z), q >= 1.
template <class Real>
Real kernel_S(int q, const NodeSet<Real>& nodes, const std::type_identity_t<Real>& z) {
  if (q < 1) throw ArgumentError("kernel_S: q must be >= 1");
  detail::require_finite(z, "kernel_S");
  return detail::kernel_sum(KernelKind::S, KernelFamily::Hyperbolic, q, nodes, z);
}

// C_q(z) = cosh z + sum_k 2 c_k^q cosh(c_k z), q >= 0. No constant term.
template <class Real>
Real kernel_C(int q, const NodeSet<Real>& nodes, const std::type_identity_t<Real>& z) {
  if (q < 0) throw ArgumentError("kernel_C: q must be >= 0");
  detail::require_finite(z, "kernel_C");
  return detail::kernel_sum(KernelKind::C, KernelFamily::Hyperbolic, q, nodes, z);
}

// sin z + sum_k 2 c_k^q sin(c_k z); S_q(-iz) = -i * kernel_S_trig(q, z).
template <class Real>
Real kernel_S_trig(int q, const NodeSet<Real>& nodes, const std::type_identity_t<Real>& z) {
  if (q < 1) throw ArgumentError("kernel_S_trig: q must be >= 1");
  detail::require_finite(z, "kernel_S_trig");
  return detail::kernel_sum(KernelKind::S, KernelFamily::Trigonometric, q, nodes, z);
}

// cos z + sum_k 2 c_k^q cos(c_k z); C_q(-iz) = kernel_C_trig(q, z).
template <class Real>
Real kernel_C_trig(int q, const NodeSet<Real>& nodes, const std::type_identity_t<Real>& z) {
  if (q < 0) throw ArgumentError("kernel_C_trig: q must be >= 0");
  detail::require_finite(z, "kernel_C_trig");
  return detail::kernel_sum(KernelKind::C, KernelFamily::Trigonometric, q, nodes, z);
}

// Evaluates K_0..K_{q_max} at one argument, sharing the node function
// values across q. K_q is S-kind for odd q and C-kind for even q.
template <class Real>
void evaluate_kernels_into(std::span<Real> out, const NodeSet<Real>& nodes, const std::type_identity_t<Real>& z,
                           KernelFamily family) {
  detail::require_finite(z, "evaluate_kernels");
  const std::size_t count = nodes.size();
  boost::container::small_vector<Real, 16> odd_values(count), even_values(count), weights(count, Real(2));
  for (std::size_t k = 0; k < count; ++k) {
    std::tie(odd_values[k], even_values[k]) = detail::odd_even_parts(family, Real(nodes.nodes()[k] * z));
  }
  const auto [odd_z, even_z] = detail::odd_even_parts(family, Real(z));

  for (std::size_t q = 0; q < out.size(); ++q) {
    const bool odd = q % 2 != 0;
    Real sum = odd ? odd_z : even_z;
    for (std::size_t k = 0; k < count; ++k) {
      sum += weights[k] * (odd ? odd_values[k] : even_values[k]);
      weights[k] *= nodes.nodes()[k];
    }
    out[q] = sum;
  }
}

template <class Real>
std::vector<Real> evaluate_kernels(int q_max, const NodeSet<Real>& nodes, const std::type_identity_t<Real>& z, KernelFamily family) {
  if (q_max < 0) throw ArgumentError("evaluate_kernels: q_max must be >= 0");
  std::vector<Real> kernels(static_cast<std::size_t>(q_max) + 1);
  evaluate_kernels_into<Real>(kernels, nodes, z, family);
  return kernels;
}

// Exact even moment 1 + 2 sum_k c_k^m of the node set, m even, m >= 0.
// Obtained from the root-of-unity average of cos^m over 4p points.
Rational node_moment(int p, int m);

}  // namespace hyperbessel
