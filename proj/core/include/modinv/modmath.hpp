#pragma once

#include "modinv/int.hpp"

#include <optional>

namespace modinv {

/// `a - m * floor(a / m)`. The result takes the sign of the modulus:
/// [0, m) for m > 0 and (m, 0] for m < 0. Throws ZeroModulusError on m == 0.
Int floor_mod(const Int& a, const Int& m);

enum class InverseStatus { Defined, UndefinedZeroModulus, UndefinedNotCoprime };

/// Result of a sign-aware modular inverse. Undefined outcomes are kept
/// distinct from every legal value rather than encoded as a sentinel.
class ModInverseOutcome {
 public:
  static ModInverseOutcome defined(Int value);
  static ModInverseOutcome zero_modulus();
  static ModInverseOutcome not_coprime(Int gcd);

  InverseStatus status() const noexcept { return status_; }
  bool is_defined() const noexcept { return status_ == InverseStatus::Defined; }

  /// Throws NotCoprimeError / ZeroModulusError when the outcome is undefined.
  const Int& value() const;
  /// Present only for UndefinedNotCoprime.
  const std::optional<Int>& gcd() const noexcept { return gcd_; }

  friend bool operator==(const ModInverseOutcome&, const ModInverseOutcome&) = default;

 private:
  ModInverseOutcome(InverseStatus status, std::optional<Int> value, std::optional<Int> gcd)
      : status_(status), value_(std::move(value)), gcd_(std::move(gcd)) {}

  InverseStatus status_;
  std::optional<Int> value_;
  std::optional<Int> gcd_;
};

/// Modular inverse with a sign-aware range:
///   m > 1   -> x in [1, m-1]
///   m < -1  -> x in [m+1, -1]
///   |m| = 1 -> |m|(sgn m - sgn a)/2 + sgn a
/// `a` may lie outside the canonical range; it is reduced first.
ModInverseOutcome mod_inverse(const Int& a, const Int& m);

/// mod_inverse(a, m).value(); throws on undefined outcomes.
Int inverse(const Int& a, const Int& m);

/// a * inv(a, b) + b * inv(b, a) - (1 + a * b). Always zero for valid
/// input; exposed so the reciprocity identity can be checked directly.
/// Requires gcd(a, b) == 1 and a * b != 0.
Int reciprocity_residual(const Int& a, const Int& b);

/// inv(k*a + b, a) without inverting k*a + b: equals inv(b, a) for |a| > 1 and
/// inv(b, a) + (sgn(k*a + b) - sgn(b)) / 2 for |a| == 1.
/// Requires gcd(a, b) == 1, a != 0, b != 0, k*a + b != 0.
Int shifted_inverse(const Int& k, const Int& a, const Int& b);

enum class ShiftSign { Plus, Minus };

/// inv(a, k*a + b) (Plus) or inv(a, k*a - b) (Minus), built from the inverses
/// of the small pair (a, b):
///   inv(a, k*a + b) = k * (a - inv(b, a)) + inv(a, b)
///   inv(a, k*a - b) = k * inv(b, a) - (b - inv(a, b))
/// Requires |a| > 1, gcd(a, b) == 1 and a nonzero resulting modulus.
Int inverse_mod_shifted(const Int& k, const Int& a, const Int& b, ShiftSign sign);

}  // namespace modinv
