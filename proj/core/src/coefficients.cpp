#include "hyperbessel/coefficients.hpp"

#include <map>
#include <string>
#include <utility>

#include "hyperbessel/errors.hpp"

namespace hyperbessel {

BigInt double_factorial(int m) {
  if (m < -1 || m % 2 == 0) {
    throw ArgumentError("double_factorial: expected odd m >= -1, got " + std::to_string(m));
  }
  BigInt result = 1;
  for (int k = m; k > 1; k -= 2) result *= k;
  return result;
}

TermExpansion derive_expansion(int n) {
  if (n < 0) throw ArgumentError("derive_expansion: order must be non-negative");

  // (q, zexp) -> coefficient. The kind is implied by the parity of q.
  using Key = std::pair<int, int>;
  std::map<Key, BigInt> current{{{0, 0}, BigInt(1)}};

  for (int step = 0; step < n; ++step) {
    std::map<Key, BigInt> next;
    for (const auto& [key, coeff] : current) {
      const auto [q, zexp] = key;
      // d/dz (c z^m K_q) = c m z^(m-1) K_q + c z^m K_{q+1}, then divide by z.
      if (zexp != 0) next[{q, zexp - 2}] += coeff * zexp;
      next[{q + 1, zexp - 1}] += coeff;
    }
    std::erase_if(next, [](const auto& entry) { return entry.second.is_zero(); });
    current = std::move(next);
  }

  TermExpansion expansion;
  expansion.order = n;
  expansion.terms.reserve(current.size());
  for (auto& [key, coeff] : current) {
    expansion.terms.push_back(Term{std::move(coeff), key.second, key.first, kernel_kind_for(key.first)});
  }
  return expansion;
}

BigInt alpha(int n, int q) {
  if (n < 1 || q < 1 || q > n) {
    throw ArgumentError("alpha: need 1 <= q <= n, got n=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  for (auto& term : derive_expansion(n).terms) {
    if (term.q == q) return std::move(term.coeff);
  }
  return 0;
}

AlphaTable::AlphaTable(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw ArgumentError("AlphaTable: n_max must be >= 1");
  entries_.resize(static_cast<std::size_t>(n_max) * (n_max + 1) / 2);
}

namespace {
std::size_t triangle_index(int n, int q) {
  return static_cast<std::size_t>(n - 1) * n / 2 + static_cast<std::size_t>(q - 1);
}
}  // namespace

const BigInt& AlphaTable::at(int n, int q) const {
  if (n < 1 || n > n_max_ || q < 1 || q > n) {
    throw ArgumentError("AlphaTable::at: (" + std::to_string(n) + ", " + std::to_string(q) + ") out of range");
  }
  return entries_[triangle_index(n, q)];
}

BigInt& AlphaTable::mutable_at(int n, int q) { return entries_[triangle_index(n, q)]; }

std::span<const BigInt> AlphaTable::row(int n) const {
  if (n < 1 || n > n_max_) throw ArgumentError("AlphaTable::row: n out of range");
  return {entries_.data() + triangle_index(n, 1), static_cast<std::size_t>(n)};
}

AlphaTable AlphaTable::from_expansion(int n_max) {
  AlphaTable table(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (auto& term : derive_expansion(n).terms) table.mutable_at(n, term.q) = std::move(term.coeff);
  }
  return table;
}

AlphaTable alpha_recurrence_table(int n_max) {
  AlphaTable table(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, BigInt> boundary;
    auto set_boundary = [&](int q, BigInt value) {
      if (q < 1 || q > n) return;
      auto [it, inserted] = boundary.try_emplace(q, value);
      if (!inserted && it->second != value) {
        throw ConsistencyError("alpha_recurrence_table: boundary forms disagree at n=" + std::to_string(n) +
                               " q=" + std::to_string(q));
      }
    };
    const BigInt leading = ((n + 1) % 2 == 0 ? 1 : -1) * double_factorial(2 * n - 3);
    set_boundary(1, leading);
    if (n >= 2) {
      set_boundary(2, -leading);
      set_boundary(n - 1, BigInt(-(n - 1) * n / 2));
    }
    set_boundary(n, BigInt(1));

    for (auto& [q, value] : boundary) table.mutable_at(n, q) = std::move(value);
    for (int q = 3; q <= n - 2; ++q) {
      table.mutable_at(n, q) = table.at(n - 1, q - 1) - (2 * n - q - 2) * table.at(n - 1, q);
    }
  }
  return table;
}

const AlphaTable& default_alpha_table() {
  static const AlphaTable table = AlphaTable::from_expansion(kDefaultMaxOrder);
  return table;
}

bool covers(ClosedForm form, int n, int q) noexcept {
  if (n < 1 || q < 1 || q > n) return false;
  switch (form) {
    case ClosedForm::Leading: return q == 1 || q == 2;
    case ClosedForm::Third: return q == 3;
    case ClosedForm::Fourth: return q == 4;
    case ClosedForm::SubDiagonal: return n >= 2 && q == n - 1;
    case ClosedForm::Diagonal: return q == n;
  }
  return false;
}

bool has_closed_form(int n, int q) noexcept {
  for (auto form : {ClosedForm::Leading, ClosedForm::Third, ClosedForm::Fourth, ClosedForm::SubDiagonal,
                    ClosedForm::Diagonal}) {
    if (covers(form, n, q)) return true;
  }
  return false;
}

namespace {
BigInt sign_power(int exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

BigInt factorial_ratio(int top, int bottom) {
  // top! / bottom! for bottom <= top
  BigInt r = 1;
  for (int k = bottom + 1; k <= top; ++k) r *= k;
  return r;
}
}  // namespace

BigInt alpha_closed_form(int n, int q, ClosedForm form) {
  if (!covers(form, n, q)) {
    throw ArgumentError("alpha_closed_form: form does not cover n=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  switch (form) {
    case ClosedForm::Leading: {
      BigInt value = sign_power(n + 1) * double_factorial(2 * n - 3);
      return q == 1 ? value : BigInt(-value);
    }
    case ClosedForm::Third:
      return sign_power(n + 1) * (n - 2) * double_factorial(2 * n - 5);
    case ClosedForm::Fourth: {
      BigInt sum = 0;
      for (int j = 0; j <= n - 4; ++j) {
        sum += (BigInt(1) << (n - 4 - j)) * double_factorial(2 * j + 1) * factorial_ratio(n - 3, j);
      }
      return sign_power(n) * sum;
    }
    case ClosedForm::SubDiagonal:
      return BigInt(-(n - 1) * n / 2);
    case ClosedForm::Diagonal:
      return 1;
  }
  return 0;
}

BigInt alpha_closed_form(int n, int q) {
  for (auto form : {ClosedForm::Leading, ClosedForm::Third, ClosedForm::Fourth, ClosedForm::SubDiagonal,
                    ClosedForm::Diagonal}) {
    if (covers(form, n, q)) return alpha_closed_form(n, q, form);
  }
  throw ArgumentError("alpha_closed_form: no closed form for n=" + std::to_string(n) + " q=" + std::to_string(q));
}

}  // namespace hyperbessel
