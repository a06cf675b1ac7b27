#include "modinv/oracle.hpp"

#include "modinv/dayan.hpp"

#include <limits>
#include <random>

namespace modinv::oracle {

namespace {

constexpr std::int64_t kSmall = std::int64_t{1} << 31;

// Scalar path for operands that keep every product inside int64.
std::optional<std::int64_t> small(const Int& v) {
  auto n = to_int64(v);
  if (!n || *n <= -kSmall || *n >= kSmall) return std::nullopt;
  return n;
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return (r != 0 && ((r < 0) != (m < 0))) ? r + m : r;
}

Int plain_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r != 0 && (r < 0) != (m < 0)) r += m;
  return r;
}

}  // namespace

std::optional<Int> brute_inverse(const Int& a, const Int& m) {
  if (abs(m) <= 1) throw PreconditionError("brute_inverse: requires |m| > 1");
  const Int lo = m > 0 ? Int(1) : Int(m + 1);
  const Int hi = m > 0 ? Int(m - 1) : Int(-1);
  auto sa = small(a);
  auto sm = small(m);
  if (sa && sm) {
    const std::int64_t a64 = mod64(*sa, *sm);
    for (std::int64_t x = static_cast<std::int64_t>(lo); x <= static_cast<std::int64_t>(hi); ++x) {
      if (mod64(a64 * x - 1, *sm) == 0) return Int(x);
    }
    return std::nullopt;
  }
  for (Int x = lo; x <= hi; ++x) {
    if (plain_mod(Int(a * x - 1), m) == 0) return x;
  }
  return std::nullopt;
}

std::optional<Int> brute_ext_inverse(const Int& b, const Int& a, const Int& m) {
  if (m <= 1) throw PreconditionError("brute_ext_inverse: requires m > 1");
  auto sa = small(a);
  auto sb = small(b);
  auto sm = small(m);
  if (sa && sb && sm) {
    const std::int64_t a64 = mod64(*sa, *sm);
    const std::int64_t b64 = mod64(*sb, *sm);
    for (std::int64_t x = 0; x < *sm; ++x) {
      if ((a64 * x) % *sm == b64) return Int(x);
    }
    return std::nullopt;
  }
  const Int target = plain_mod(b, m);
  for (Int x = 0; x < m; ++x) {
    if (plain_mod(Int(a * x), m) == target) return x;
  }
  return std::nullopt;
}

std::optional<std::pair<Int, Int>> brute_crt(std::span<const Congruence> system, std::int64_t bound) {
  if (system.empty()) throw PreconditionError("brute_crt: empty system");
  Int l = 1;
  for (const Congruence& c : system) {
    l = lcm(l, c.modulus());
    if (l > bound) throw PreconditionError("brute_crt: lcm exceeds scan bound");
  }
  const auto l64 = static_cast<std::int64_t>(l);
  std::vector<std::pair<std::int64_t, std::int64_t>> eqs;
  for (const Congruence& c : system) {
    eqs.emplace_back(static_cast<std::int64_t>(c.residue()), static_cast<std::int64_t>(c.modulus()));
  }
  for (std::int64_t x = 0; x < l64; ++x) {
    bool all = true;
    for (const auto& [residue, modulus] : eqs) {
      if (x % modulus != residue) {
        all = false;
        break;
      }
    }
    if (all) return std::make_pair(Int(x), l);
  }
  return std::nullopt;
}

EuclidResult euclid_inverse_counted(const Int& a, const Int& m) {
  if (m <= 1) throw PreconditionError("euclid_inverse_counted: requires m > 1");
  EuclidResult out;
  out.steps.algorithm = Algorithm::ExtendedEuclid;
  Int old_r = m;
  Int r = plain_mod(a, m);
  Int old_t = 0;
  Int t = 1;
  while (r != 0) {
    Int q;
    Int rem;
    boost::multiprecision::divide_qr(old_r, r, q, rem);
    ++out.steps.divisions;
    old_r = std::move(r);
    r = std::move(rem);
    Int next_t = old_t - q * t;
    old_t = std::move(t);
    t = std::move(next_t);
  }
  if (old_r == 1) out.inverse = plain_mod(old_t, m);
  return out;
}

StepComparison compare_steps(std::int64_t p_min, std::int64_t p_max, std::size_t samples, std::uint64_t seed) {
  if (p_min < 3 || p_max < p_min) throw PreconditionError("compare_steps: requires 3 <= p_min <= p_max");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick_p(p_min, p_max);

  StepComparison out;
  out.samples.reserve(samples);
  while (out.samples.size() < samples) {
    const std::int64_t p = pick_p(rng);
    const std::int64_t q = std::uniform_int_distribution<std::int64_t>(2, p - 1)(rng);
    if (gcd(Int(p), Int(q)) != 1) continue;
    const std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, p - 1)(rng);

    StepSample s{Int(p), Int(q), Int(a)};
    s.euclid = euclid_inverse_counted(s.q, s.p).steps.divisions;
    const TraceOptions sum_only{.complete_remainders = false};
    s.dayan_plus = run_trace(s.p, s.q, s.a, SignStrategy::all_plus(), sum_only).sum_steps();
    s.dayan_minus = run_trace(s.p, s.q, s.a, SignStrategy::all_minus(), sum_only).sum_steps();
    s.dayan_least_abs = run_trace(s.p, s.q, s.a, SignStrategy::least_absolute(), sum_only).sum_steps();
    out.samples.push_back(std::move(s));
  }

  const auto column = [](const StepSample& s, Algorithm alg) {
    switch (alg) {
      case Algorithm::ExtendedEuclid:
        return s.euclid;
      case Algorithm::DayanAllPlus:
        return s.dayan_plus;
      case Algorithm::DayanAllMinus:
        return s.dayan_minus;
      case Algorithm::DayanLeastAbs:
        return s.dayan_least_abs;
    }
    return std::size_t{0};
  };
  for (Algorithm alg : {Algorithm::ExtendedEuclid, Algorithm::DayanAllPlus, Algorithm::DayanAllMinus,
                        Algorithm::DayanLeastAbs}) {
    StepAggregate agg{alg};
    std::size_t total = 0;
    for (const StepSample& s : out.samples) {
      const std::size_t n = column(s, alg);
      total += n;
      agg.max = std::max(agg.max, n);
      ++agg.histogram[n];
    }
    agg.mean = out.samples.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(out.samples.size());
    out.aggregates.push_back(std::move(agg));
  }
  return out;
}

void write_steps_csv(std::ostream& out, std::span<const StepSample> samples) {
  out << "p,q,a,euclid_steps,dayan_plus_steps,dayan_minus_steps,dayan_leastabs_steps\n";
  for (const StepSample& s : samples) {
    out << s.p << ',' << s.q << ',' << s.a << ',' << s.euclid << ',' << s.dayan_plus << ',' << s.dayan_minus
        << ',' << s.dayan_least_abs << '\n';
  }
}

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::ExtendedEuclid:
      return "extended-euclid";
    case Algorithm::DayanAllPlus:
      return "dayan-all-plus";
    case Algorithm::DayanAllMinus:
      return "dayan-all-minus";
    case Algorithm::DayanLeastAbs:
      return "dayan-least-abs";
  }
  return "?";
}

}  // namespace modinv::oracle
