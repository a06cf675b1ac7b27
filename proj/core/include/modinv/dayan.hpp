#pragma once

// Generalized Dayan ("find one") trace engine.
//
// A trace for (p, q, a) runs the remainder chain
//   r_{i-1} = c_{i+1} r_i + s_{i+1} r_{i+1}
// alongside the residue chain
//   gamma_i = beta_i r_i - s_{i+1} gamma_{i+1}
// and the convergent numerators f_i = c_i f_{i-1} + s_{i-1} f_{i-2}, starting
// from r_{-1} = p, r_0 = q, gamma_0 = a, f_{-1} = 0, f_0 = 1. The extended
// inverse (a * q^-1 mod p) is sum f_i beta_i up to the step where r hits 1 or
// gamma hits 0; each s_i is picked freely by a SignStrategy.

#include "modinv/int.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modinv {

/// No solution exists because the gcd does not divide the right-hand side.
class NoSolutionError : public Error {
 public:
  explicit NoSolutionError(Int gcd);
  NoSolutionError(Int gcd, const std::string& what);

  const Int& gcd() const noexcept { return gcd_; }

 private:
  Int gcd_;
};

/// An explicit sign sequence ran out before the trace terminated.
class StrategyExhaustedError : public Error {
 public:
  explicit StrategyExhaustedError(std::size_t step);

  /// 1-based index of the sign that was missing.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Chooses s_{i+1} in {-1, +1} for each division of r_{i-1} by r_i.
class SignStrategy {
 public:
  enum class Kind { AllPlus, AllMinus, LeastAbsoluteRemainder, Explicit };

  static SignStrategy all_plus() { return SignStrategy(Kind::AllPlus, {}); }
  static SignStrategy all_minus() { return SignStrategy(Kind::AllMinus, {}); }
  /// Picks the sign giving the smaller next remainder; ties go to +1.
  static SignStrategy least_absolute() { return SignStrategy(Kind::LeastAbsoluteRemainder, {}); }
  /// signs[k] is s_{k+1}. Every entry must be -1 or +1.
  static SignStrategy explicit_signs(std::vector<int> signs);

  /// Accepts "plus", "minus", "least-abs" and "explicit:-1,+1,..."
  /// (long forms "all-plus" / "all-minus" also work).
  static SignStrategy parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  /// Sign s_step for dividing `prev` by `cur` (step is 1-based, cur > 1).
  int choose(std::size_t step, const Int& prev, const Int& cur) const;

  /// Canonical text form; parse(name()) == *this.
  std::string name() const;

  friend bool operator==(const SignStrategy&, const SignStrategy&) = default;

 private:
  SignStrategy(Kind kind, std::vector<int> signs) : kind_(kind), signs_(std::move(signs)) {}

  Kind kind_;
  std::vector<int> signs_;
};

/// One column of a trace table. Fields not produced at this index are empty:
/// gamma/beta start at 0, c and s at 1, and rows past the end of the sum
/// (kept only to finish the remainder chain) carry just r and s.
struct DayanStep {
  long index = 0;
  Int r;
  std::optional<int> s;
  std::optional<Int> gamma;
  std::optional<Int> c;
  std::optional<Int> beta;
  std::optional<Int> f;

  friend bool operator==(const DayanStep&, const DayanStep&) = default;
};

enum class Termination {
  RemainderOne,   ///< r_n = 1 (p, q coprime)
  GammaZero,      ///< gamma reached 0 and the remainder chain was not finished
  RemainderZero,  ///< r_{n+1} = 0 with r_n = gcd(p, q) > 1
};

std::string_view to_string(Termination t);
/// Inverse of to_string; throws PreconditionError on unknown names.
Termination termination_from_string(std::string_view text);

struct TraceOptions {
  /// Keep dividing after gamma hits 0 until r reaches 1 or 0, so the trace
  /// also yields gcd(p, q). The sum is unaffected.
  bool complete_remainders = true;
};

struct DayanTrace {
  Int p;
  Int q;
  Int a;
  SignStrategy strategy = SignStrategy::all_plus();
  /// steps[k] has index k - 1.
  std::vector<DayanStep> steps;
  Termination termination = Termination::RemainderOne;
  /// Known once the remainder chain ends (RemainderOne or RemainderZero).
  std::optional<Int> gcd;
  /// Last index contributing to the sum; -1 for an empty sum.
  long sum_index = -1;
  /// False when the chain ended in r = 0 with gamma not divisible by the gcd.
  bool solvable = true;

  const DayanStep& at(long index) const;
  long last_index() const noexcept { return static_cast<long>(steps.size()) - 2; }

  /// Steps needed to produce the answer: sum_index + 1.
  std::size_t sum_steps() const noexcept { return static_cast<std::size_t>(sum_index + 1); }
  /// Quotient-remainder computations over the remainder chain; matches the
  /// classical Euclid division count once the chain is complete.
  std::size_t remainder_steps() const noexcept;

  friend bool operator==(const DayanTrace&, const DayanTrace&) = default;
};

/// Runs the trace. Requires 0 < q < p and 0 <= a < p.
/// Throws PreconditionError, or StrategyExhaustedError for short explicit sequences.
DayanTrace run_trace(const Int& p, const Int& q, const Int& a, const SignStrategy& strategy,
                     TraceOptions options = {});

/// sum_{i=0}^{m} f_i beta_i. Throws NoSolutionError when the trace is unsolvable.
Int ext_inverse_sum_f(const DayanTrace& trace);

/// sum_{i=0}^{m} p gamma_i / (r_{i-1} r_i), evaluated exactly.
/// Throws NoSolutionError when the trace is unsolvable.
Int ext_inverse_sum_fraction(const DayanTrace& trace);

enum class ExtInverseStatus { Defined, NoSolution };

struct ExtInverseOutcome {
  ExtInverseStatus status = ExtInverseStatus::NoSolution;
  std::optional<Int> value;
  /// m when gcd(a, m) == 1, otherwise m / gcd.
  Int reduced_modulus;
  Int gcd;

  bool is_defined() const noexcept { return status == ExtInverseStatus::Defined; }
  friend bool operator==(const ExtInverseOutcome&, const ExtInverseOutcome&) = default;
};

struct TracedExtInverse {
  ExtInverseOutcome outcome;
  /// Empty when a is a multiple of m (nothing to divide).
  std::optional<DayanTrace> trace;
};

/// Canonical solution x of a*x = b (mod m): the residue mod m when
/// gcd(a, m) == 1, the residue mod m/d of (a/d) x = b/d (mod m/d) when
/// d = gcd(a, m) divides b, NoSolution otherwise. a and b are reduced mod m
/// first. Requires m > 1 and a != 0.
ExtInverseOutcome ext_mod_inverse(const Int& b, const Int& a, const Int& m,
                                  const SignStrategy& strategy = SignStrategy::all_plus());

TracedExtInverse ext_mod_inverse_traced(const Int& b, const Int& a, const Int& m,
                                        const SignStrategy& strategy = SignStrategy::all_plus());

}  // namespace modinv
