#pragma once

#include "modinv/dayan.hpp"
#include "modinv/int.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace modinv {

/// x = residue (mod modulus), with modulus > 1 and the residue canonical in
/// [0, modulus).
class Congruence {
 public:
  /// Throws PreconditionError when modulus <= 1.
  Congruence(const Int& residue, const Int& modulus);

  const Int& residue() const noexcept { return residue_; }
  const Int& modulus() const noexcept { return modulus_; }

  bool satisfied_by(const Int& x) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  Int residue_;
  Int modulus_;
};

struct CrtSolution {
  Int x;
  /// Product of the moduli for co-prime systems, their lcm in general.
  Int modulus;

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// Two congruences of the input are mutually incompatible: gcd(m_i, m_j)
/// does not divide a_i - a_j. Indices refer to the caller's original list.
class IncompatibleCongruencesError : public NoSolutionError {
 public:
  IncompatibleCongruencesError(std::size_t first, std::size_t second, Int first_modulus, Int second_modulus,
                               Int gcd);

  std::size_t first_index() const noexcept { return first_; }
  std::size_t second_index() const noexcept { return second_; }
  const Int& first_modulus() const noexcept { return first_modulus_; }
  const Int& second_modulus() const noexcept { return second_modulus_; }

 private:
  std::size_t first_;
  std::size_t second_;
  Int first_modulus_;
  Int second_modulus_;
};

/// Garner-style iteration x_k = M_{k-1} * ((a_k - x_{k-1}) * M_{k-1}^-1 mod m_k) + x_{k-1}
/// with every extended inverse taken from the Dayan engine. Moduli are not
/// checked up front; a shared factor surfaces as NotCoprimeError from the
/// inverse step that meets it.
CrtSolution solve_coprime(std::span<const Congruence> system,
                          const SignStrategy& strategy = SignStrategy::all_plus());

/// Two congruences with arbitrary moduli. The gcd is found by the same trace
/// that yields the inverse. Returns x in [0, lcm) and the lcm; throws
/// IncompatibleCongruencesError (indices 0 and 1) when no solution exists.
CrtSolution solve_pair(const Congruence& first, const Congruence& second,
                       const SignStrategy& strategy = SignStrategy::all_plus());

enum class Pairing {
  Balanced,  ///< neighbours merged per round; odd tail passes through
  LeftFold,  ///< ((c0 + c1) + c2) + ...
};

struct SolveOptions {
  Pairing pairing = Pairing::Balanced;
  /// Run the merges of each balanced round concurrently.
  bool parallel = false;
  SignStrategy strategy = SignStrategy::all_plus();
};

struct SolveStats {
  std::size_t rounds = 0;
  std::size_t merges = 0;
};

/// Reduces an arbitrary system by pairwise merges. Deterministic for any
/// pairing and scheduling. On failure throws IncompatibleCongruencesError
/// naming a concrete incompatible pair of original congruences.
CrtSolution solve_general(std::span<const Congruence> system, const SolveOptions& options = {},
                          SolveStats* stats = nullptr);

/// ceil(log2(n)) for n >= 1: the round count of the balanced tree.
std::size_t balanced_rounds(std::size_t n);

}  // namespace modinv
