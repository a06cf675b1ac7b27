#pragma once

// Brute-force references and the classical extended Euclid baseline. The scans
// and the Euclid routine share no code with the Dayan engine, so they stay
// usable as test oracles; compare_steps runs both side by side.

#include "modinv/crt.hpp"
#include "modinv/int.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace modinv::oracle {

/// Scans the sign-aware inverse range ([1, m-1] or [m+1, -1]) for x with
/// a*x = 1 (mod m). Requires |m| > 1.
std::optional<Int> brute_inverse(const Int& a, const Int& m);

/// Smallest x in [0, m) with a*x = b (mod m). Requires m > 1.
std::optional<Int> brute_ext_inverse(const Int& b, const Int& a, const Int& m);

inline constexpr std::int64_t kDefaultScanBound = 10'000'000;

/// Scans [0, lcm) for a simultaneous solution; returns (x, lcm). Throws
/// PreconditionError when the lcm exceeds `bound`.
std::optional<std::pair<Int, Int>> brute_crt(std::span<const Congruence> system,
                                             std::int64_t bound = kDefaultScanBound);

enum class Algorithm { ExtendedEuclid, DayanAllPlus, DayanAllMinus, DayanLeastAbs };

struct StepCount {
  Algorithm algorithm = Algorithm::ExtendedEuclid;
  /// Quotient-remainder computations performed.
  std::size_t divisions = 0;

  friend bool operator==(const StepCount&, const StepCount&) = default;
};

struct EuclidResult {
  std::optional<Int> inverse;  ///< in [1, m-1]
  StepCount steps;
};

/// Classical extended Euclid on (m, a mod m), counting divisions. Requires m > 1.
EuclidResult euclid_inverse_counted(const Int& a, const Int& m);

/// One sampled extended-inverse task (a * q^-1 mod p, p and q coprime).
struct StepSample {
  Int p;
  Int q;
  Int a;
  std::size_t euclid = 0;
  std::size_t dayan_plus = 0;
  std::size_t dayan_minus = 0;
  std::size_t dayan_least_abs = 0;
};

struct StepAggregate {
  Algorithm algorithm;
  double mean = 0.0;
  std::size_t max = 0;
  /// divisions -> number of samples
  std::map<std::size_t, std::size_t> histogram;
};

struct StepComparison {
  std::vector<StepSample> samples;
  std::vector<StepAggregate> aggregates;  ///< one per Algorithm, in enum order
};

/// Samples `samples` tasks with p uniform in [p_min, p_max], q coprime to p in
/// [2, p-1] and a uniform in [0, p). Euclid is charged the full inverse; each
/// Dayan strategy is charged the steps its sum needs. Requires
/// 3 <= p_min <= p_max. Deterministic for a given seed.
StepComparison compare_steps(std::int64_t p_min, std::int64_t p_max, std::size_t samples,
                             std::uint64_t seed = 1);

/// CSV with header p,q,a,euclid_steps,dayan_plus_steps,dayan_minus_steps,dayan_leastabs_steps.
void write_steps_csv(std::ostream& out, std::span<const StepSample> samples);

const char* to_string(Algorithm algorithm);

}  // namespace modinv::oracle
