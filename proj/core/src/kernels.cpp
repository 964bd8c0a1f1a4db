#include "hyperbessel/kernels.hpp"

namespace hyperbessel {

Rational node_moment(int p, int m) {
  if (p < 1) throw ArgumentError("node_moment: p must be >= 1");
  if (m < 0 || m % 2 != 0) throw ArgumentError("node_moment: m must be even and non-negative");
  if (m == 0) return Rational(2 * p - 1);

  // (1/4p) sum_{j<4p} cos^m(pi j / 2p) = 2^-m sum_{l : m-2l = 0 mod 4p} C(m, l),
  // and for even m >= 2 the full sum equals 2 * moment.
  const int period = 4 * p;
  BigInt hits = 0;
  BigInt binom = 1;  // C(m, l)
  for (int l = 0; l <= m; ++l) {
    if ((m - 2 * l) % period == 0) hits += binom;
    binom = binom * (m - l) / (l + 1);
  }
  return Rational(BigInt(2 * p) * hits, BigInt(1) << m);
}

}  // namespace hyperbessel
