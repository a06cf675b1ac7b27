#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace modinv {

/// Arbitrary-precision signed integer used for every quantity in the library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used where the series formulas sum fractions.
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A modulus (or divisor) of zero was supplied.
class ZeroModulusError : public PreconditionError {
 public:
  ZeroModulusError() : PreconditionError("modulus must be nonzero") {}
};

/// An inverse was requested for arguments that share a factor.
class NotCoprimeError : public Error {
 public:
  explicit NotCoprimeError(Int gcd);

  const Int& gcd() const noexcept { return gcd_; }

 private:
  Int gcd_;
};

/// Returns -1, 0 or +1.
inline int sgn(const Int& v) { return v.sign(); }

/// Quotient rounded toward negative infinity. Throws ZeroModulusError on b == 0.
Int floor_div(const Int& a, const Int& b);

/// Quotient rounded toward positive infinity. Throws ZeroModulusError on b == 0.
Int ceil_div(const Int& a, const Int& b);

/// Non-negative gcd; gcd(0, m) == |m| and gcd(0, 0) == 0.
Int gcd(const Int& a, const Int& b);

/// Non-negative lcm; lcm(0, m) == 0.
Int lcm(const Int& a, const Int& b);

Int abs(const Int& v);

/// Decimal rendering, no locale involvement.
std::string to_string(const Int& v);

/// Parses an optionally signed decimal integer (leading '+' allowed).
/// Throws PreconditionError on anything else, including empty input.
Int parse_int(std::string_view text);

/// Narrowing helper for test and benchmark code; nullopt when out of range.
std::optional<std::int64_t> to_int64(const Int& v);

}  // namespace modinv
