#include "modinv/modmath.hpp"

namespace modinv {

namespace {

// Inverse of a modulo n for n > 1, returned in [1, n-1]; nullopt when gcd > 1.
std::optional<Int> positive_modulus_inverse(const Int& a, const Int& n, Int& gcd_out) {
  Int old_r = n;
  Int r = floor_mod(a, n);
  Int old_t = 0;
  Int t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int next_r = old_r - q * r;
    old_r = std::move(r);
    r = std::move(next_r);
    Int next_t = old_t - q * t;
    old_t = std::move(t);
    t = std::move(next_t);
  }
  gcd_out = old_r;
  if (old_r != 1) return std::nullopt;
  return floor_mod(old_t, n);
}

}  // namespace

Int floor_mod(const Int& a, const Int& m) {
  if (m == 0) throw ZeroModulusError();
  Int r = a % m;
  if (r != 0 && r.sign() != m.sign()) r += m;
  return r;
}

ModInverseOutcome ModInverseOutcome::defined(Int value) {
  return {InverseStatus::Defined, std::move(value), std::nullopt};
}

ModInverseOutcome ModInverseOutcome::zero_modulus() {
  return {InverseStatus::UndefinedZeroModulus, std::nullopt, std::nullopt};
}

ModInverseOutcome ModInverseOutcome::not_coprime(Int gcd) {
  return {InverseStatus::UndefinedNotCoprime, std::nullopt, std::move(gcd)};
}

const Int& ModInverseOutcome::value() const {
  switch (status_) {
    case InverseStatus::Defined:
      return *value_;
    case InverseStatus::UndefinedZeroModulus:
      throw ZeroModulusError();
    case InverseStatus::UndefinedNotCoprime:
      throw NotCoprimeError(*gcd_);
  }
  throw Error("corrupt ModInverseOutcome");
}

ModInverseOutcome mod_inverse(const Int& a, const Int& m) {
  if (a == 0 || m == 0) return ModInverseOutcome::zero_modulus();
  const Int n = abs(m);
  if (n == 1) {
    // |m|(sgn m - sgn a)/2 + sgn a; the bracket is even so the halving is exact.
    return ModInverseOutcome::defined(Int(n * (sgn(m) - sgn(a)) / 2 + sgn(a)));
  }
  Int g;
  auto x = positive_modulus_inverse(a, n, g);
  if (!x) return ModInverseOutcome::not_coprime(std::move(g));
  if (m < 0) *x -= n;
  return ModInverseOutcome::defined(std::move(*x));
}

Int inverse(const Int& a, const Int& m) { return mod_inverse(a, m).value(); }

Int reciprocity_residual(const Int& a, const Int& b) {
  if (a == 0 || b == 0) throw PreconditionError("reciprocity_residual: arguments must be nonzero");
  if (gcd(a, b) != 1) throw NotCoprimeError(gcd(a, b));
  return a * inverse(a, b) + b * inverse(b, a) - (1 + a * b);
}

Int shifted_inverse(const Int& k, const Int& a, const Int& b) {
  if (a == 0 || b == 0) throw PreconditionError("shifted_inverse: a and b must be nonzero");
  const Int shifted = k * a + b;
  if (shifted == 0) throw PreconditionError("shifted_inverse: k*a + b must be nonzero");
  if (gcd(a, b) != 1) throw NotCoprimeError(gcd(a, b));
  Int base = inverse(b, a);
  if (abs(a) > 1) return base;
  return base + (sgn(shifted) - sgn(b)) / 2;
}

Int inverse_mod_shifted(const Int& k, const Int& a, const Int& b, ShiftSign sign) {
  if (abs(a) <= 1) throw PreconditionError("inverse_mod_shifted: requires |a| > 1");
  if (gcd(a, b) != 1) throw NotCoprimeError(gcd(a, b));
  const Int modulus = sign == ShiftSign::Plus ? Int(k * a + b) : Int(k * a - b);
  if (modulus == 0) throw ZeroModulusError();
  const Int inv_ab = inverse(a, b);
  const Int inv_ba = inverse(b, a);
  if (sign == ShiftSign::Plus) return k * (a - inv_ba) + inv_ab;
  return k * inv_ba - (b - inv_ab);
}

}  // namespace modinv
