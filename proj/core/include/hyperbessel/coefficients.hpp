#pragma once

#include <span>
#include <vector>

#include "hyperbessel/kernel_kind.hpp"
#include "hyperbessel/numeric.hpp"

namespace hyperbessel {

// Largest order the coefficient machinery is exercised and validated at by
// default. Larger tables are allowed; arithmetic stays exact.
inline constexpr int kDefaultMaxOrder = 20;

// m!! for odd m >= -1, with (-1)!! = 1.
BigInt double_factorial(int m);

// One term coeff * z^zexp * K_q(z), K_q = S_q or C_q.
struct Term {
  BigInt coeff;
  int zexp = 0;
  int q = 0;
  KernelKind kind = KernelKind::C;

  friend bool operator==(const Term&, const Term&) = default;
};

// T_n = ((1/z) d/dz)^n C_0 written as a sum of kernel terms, ordered by
// ascending q. For n >= 1 there is exactly one term per q = 1..n with
// zexp = q - 2n.
struct TermExpansion {
  int order = 0;
  std::vector<Term> terms;
};

// Symbolic derivation: applies (1/z) d/dz to {C_0} n times using
// dS_q/dz = C_{q+1} and dC_q/dz = S_{q+1}. This is the authoritative
// source of every coefficient. n = 0 yields the seed term itself.
TermExpansion derive_expansion(int n);

// Coefficient of z^(q-2n) K_q in derive_expansion(n).
BigInt alpha(int n, int q);

// Triangular table of alpha(n, q), 1 <= q <= n <= n_max.
class AlphaTable {
 public:
  AlphaTable() = default;

  // Built from derive_expansion(n) for every row.
  static AlphaTable from_expansion(int n_max);

  int n_max() const noexcept { return n_max_; }
  const BigInt& at(int n, int q) const;
  std::span<const BigInt> row(int n) const;

  friend bool operator==(const AlphaTable&, const AlphaTable&) = default;

 private:
  friend AlphaTable alpha_recurrence_table(int n_max);
  explicit AlphaTable(int n_max);
  BigInt& mutable_at(int n, int q);

  int n_max_ = 0;
  std::vector<BigInt> entries_;  // row-major triangle
};

// Same table assembled only from the boundary closed forms (q = 1, 2,
// n-1, n) and the interior three-term recurrence
//   alpha(n, q) = alpha(n-1, q-1) - (2n - q - 2) alpha(n-1, q),  3 <= q <= n-2.
// Overlapping boundary cases are checked against each other.
AlphaTable alpha_recurrence_table(int n_max);

// Shared read-only table of kDefaultMaxOrder rows.
const AlphaTable& default_alpha_table();

// The individual closed forms. Several may cover the same entry (for
// example q = 3 = n - 1 at n = 4); each is evaluated independently.
enum class ClosedForm {
  Leading,      // q = 1 and q = 2
  Third,        // q = 3, n >= 3
  Fourth,       // q = 4, n >= 4
  SubDiagonal,  // q = n - 1, n >= 2
  Diagonal,     // q = n
};

bool covers(ClosedForm form, int n, int q) noexcept;

// True when some closed form covers (n, q).
bool has_closed_form(int n, int q) noexcept;

// Closed forms for q in {1, 2, 3, 4, n-1, n}:
//   q = 1, 2:   alpha_1 = -alpha_2 = (-1)^(n+1) (2n-3)!!
//   q = n-1:    -n(n-1)/2
//   q = n:      1
//   q = 3:      (-1)^(n+1) (n-2) (2n-5)!!
//   q = 4:      (-1)^n (n-3)! sum_{j=0}^{n-4} 2^(n-4-j) (2j+1)!! / j!
// The first covering form (in the order listed above) is used by the
// two-argument overload.
BigInt alpha_closed_form(int n, int q);
BigInt alpha_closed_form(int n, int q, ClosedForm form);

}  // namespace hyperbessel
