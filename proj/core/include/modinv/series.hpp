#pragma once

// Closed-form series for the ordinary inverse inv(q, p), 1 < q < p coprime.
// All sums are evaluated in exact rationals.
//
// First type:  r_i = r_{i-2} mod r_{i-1},
//              inv = p * sum (-1)^i / (r_{i-1} r_i)  (+ p when n is odd)
// Second type: r_i = -r_{i-2} mod r_{i-1},
//              inv = p * sum 1 / (r_{i-1} r_i)
// where r_{-1} = p, r_0 = q and r_n = 1.

#include "modinv/int.hpp"

#include <vector>

namespace modinv {

struct RemainderChain {
  /// r[k] is r_{k-1}; r.front() == p, r.back() == 1.
  std::vector<Int> r;
  /// c[k] is c_{k-1}; entries for indices -1 and 0 are zero placeholders.
  std::vector<Int> c;

  /// Index n of the final remainder (r_n == 1).
  long n() const noexcept { return static_cast<long>(r.size()) - 2; }
  const Int& rem(long i) const { return r[static_cast<std::size_t>(i + 1)]; }
  const Int& quot(long i) const { return c[static_cast<std::size_t>(i + 1)]; }
};

/// Remainder chain with r_i = (sign * r_{i-2}) mod r_{i-1} and
/// c_i = sign * floor(sign * r_{i-2} / r_{i-1}). sign is +1 (first type) or
/// -1 (second type). Throws NotCoprimeError when the chain reaches 0 first.
RemainderChain remainder_chain(const Int& p, const Int& q, int sign);

struct FirstTypeResult {
  Int value;
  /// p * sum (-1)^i / (r_{i-1} r_i), before the parity correction.
  Int raw;
  long n = 0;
};

FirstTypeResult inverse_series_first_type(const Int& p, const Int& q);

/// Pairs consecutive terms of the first-type sum:
///   inv = -p * sum_{i=0}^{(n-1)/2} c_{2i+1} / (r_{2i-1} r_{2i+1})
///         + (n even ? p / r_{n-1} : p)
Int inverse_series_first_type_condensed(const Int& p, const Int& q);

/// Second-type sum; `condensed` pairs terms as
///   inv = p * sum_{i=0}^{(n-1)/2} c_{2i+1} / (r_{2i-1} r_{2i+1})
///         + (n even ? p / r_{n-1} : 0)
Int inverse_series_second_type(const Int& p, const Int& q, bool condensed = false);

struct ConvergentPair {
  Int r;
  Int f;

  friend bool operator==(const ConvergentPair&, const ConvergentPair&) = default;
};

/// (r_j, f_j) for j = 0..n of the all-minus trace of (p, q, 1). Every pair
/// satisfies (r_j * inv(q, p)) mod p == f_j.
std::vector<ConvergentPair> convergent_inverse_check(const Int& p, const Int& q);

}  // namespace modinv
