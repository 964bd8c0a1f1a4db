#include "hyperbessel/approximation.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace hyperbessel {

void validate_order(int n, int p) {
  if (n < 0) throw ArgumentError("order n must be non-negative, got " + std::to_string(n));
  if (p < 1) throw ArgumentError("accuracy parameter p must be >= 1, got " + std::to_string(p));
  if (n >= 4 * p) {
    throw DomainError("order n=" + std::to_string(n) + " requires p > n/4 (n < 4p), got p=" + std::to_string(p));
  }
  if (n > kDefaultMaxOrder) {
    throw DomainError("order n=" + std::to_string(n) + " exceeds the coefficient table limit " +
                      std::to_string(kDefaultMaxOrder));
  }
}

void validate_threshold(double eps) {
  if (!std::isfinite(eps) || eps <= 0.0 || eps > kMaxSmallArgThreshold) {
    throw ArgumentError("small-argument threshold must be in (0, " + std::to_string(kMaxSmallArgThreshold) +
                        "], got " + std::to_string(eps));
  }
}

void validate(const ApproxRequest& request) {
  validate_order(request.n, request.p);
  validate_threshold(request.threshold());
  if (!std::isfinite(request.z)) throw ArgumentError("argument z must be finite");
}

ExactApproximantSeries::ExactApproximantSeries(int n, int p) : n_(n), p_(p) {
  if (n < 0 || p < 1) throw ArgumentError("ExactApproximantSeries: need n >= 0 and p >= 1");
  terms_ = derive_expansion(n).terms;
  factorials_.push_back(1);
}

const Rational& ExactApproximantSeries::moment(int m) {
  const int index = m / 2;
  while (static_cast<int>(moments_.size()) <= index) {
    moments_.push_back(node_moment(p_, 2 * static_cast<int>(moments_.size())));
  }
  return moments_[static_cast<std::size_t>(index)];
}

const BigInt& ExactApproximantSeries::factorial(int j) {
  while (static_cast<int>(factorials_.size()) <= j) {
    const BigInt next = factorials_.back() * static_cast<int>(factorials_.size());
    factorials_.push_back(next);
  }
  return factorials_[static_cast<std::size_t>(j)];
}

Rational ExactApproximantSeries::coefficient(int order) {
  const int min_order = n_ == 0 ? 0 : 1 - n_;
  if (order < min_order) {
    throw ArgumentError("ExactApproximantSeries: order below the Laurent range");
  }
  // Only orders with the parity of n appear.
  if (((order - n_) % 2 + 2) % 2 != 0) return Rational(0);

  Rational sum = (n_ == 0 && order == 0) ? Rational(1) : Rational(0);
  for (const Term& term : terms_) {
    // Term: coeff * z^(q-n) * K_q(z); picks up z^j from K_q with j = order + n - q.
    const int j = order + n_ - term.q;
    if (j < 0) continue;
    sum += Rational(term.coeff) * moment(term.q + j) / Rational(factorial(j));
  }
  return sum / Rational(2 * p_);
}

LaurentSeries exact_maclaurin(int n, int p, int max_order) {
  ExactApproximantSeries exact(n, p);
  LaurentSeries series;
  series.min_order = n == 0 ? 0 : 1 - n;
  for (int order = series.min_order; order <= max_order; ++order) series.coeffs.push_back(exact.coefficient(order));
  return series;
}

std::shared_ptr<const Approximant<double>> cached_approximant(int n, int p, double eps) {
  using Key = std::tuple<int, int, double>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const Approximant<double>>> cache;

  const Key key{n, p, eps};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // Built outside the lock; a concurrent builder of the same key yields an
  // identical object and the first insert wins.
  auto built = std::make_shared<const Approximant<double>>(n, p, eps);
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

namespace {
double evaluate(const ApproxRequest& request, Kind kind) {
  validate(request);
  return (*cached_approximant(request.n, request.p, request.threshold()))(kind, request.z);
}
}  // namespace

double approx_I(const ApproxRequest& request) {
  if (request.kind != Kind::I) throw ArgumentError("approx_I: request kind must be I");
  return evaluate(request, Kind::I);
}

double approx_J(const ApproxRequest& request) {
  if (request.kind != Kind::J) throw ArgumentError("approx_J: request kind must be J");
  return evaluate(request, Kind::J);
}

double approximate(const ApproxRequest& request) { return evaluate(request, request.kind); }

}  // namespace hyperbessel
