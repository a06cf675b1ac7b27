#include "modinv/int.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>

namespace modinv {

NotCoprimeError::NotCoprimeError(Int gcd)
    : Error("arguments are not coprime, gcd=" + to_string(gcd)), gcd_(std::move(gcd)) {}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw ZeroModulusError();
  Int q;
  Int r;
  boost::multiprecision::divide_qr(a, b, q, r);
  // divide_qr truncates; step down when the remainder has the wrong sign.
  if (r != 0 && (r.sign() != b.sign())) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw ZeroModulusError();
  Int q;
  Int r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && (r.sign() == b.sign())) ++q;
  return q;
}

Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a);
  Int y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

std::string to_string(const Int& v) { return v.str(); }

Int parse_int(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw PreconditionError("not an integer: '" + std::string(text) + "'");
  Int value = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw PreconditionError("not an integer: '" + std::string(text) + "'");
    value *= 10;
    value += ch - '0';
  }
  return negative ? Int(-value) : value;
}

std::optional<std::int64_t> to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace modinv
