#include "modinv/dayan.hpp"

#include "modinv/modmath.hpp"

#include <charconv>

namespace modinv {

NoSolutionError::NoSolutionError(Int gcd)
    : Error("no solution: gcd " + to_string(gcd) + " does not divide the residue"), gcd_(std::move(gcd)) {}

NoSolutionError::NoSolutionError(Int gcd, const std::string& what) : Error(what), gcd_(std::move(gcd)) {}

StrategyExhaustedError::StrategyExhaustedError(std::size_t step)
    : Error("explicit sign sequence exhausted: no sign for s_" + std::to_string(step)), step_(step) {}

SignStrategy SignStrategy::explicit_signs(std::vector<int> signs) {
  for (int s : signs) {
    if (s != 1 && s != -1) throw PreconditionError("explicit signs must be -1 or +1");
  }
  return SignStrategy(Kind::Explicit, std::move(signs));
}

SignStrategy SignStrategy::parse(std::string_view text) {
  if (text == "plus" || text == "all-plus") return all_plus();
  if (text == "minus" || text == "all-minus") return all_minus();
  if (text == "least-abs" || text == "leastabs") return least_absolute();
  constexpr std::string_view prefix = "explicit:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw PreconditionError("unknown sign strategy '" + std::string(text) + "'");
  }
  std::string_view rest = text.substr(prefix.size());
  std::vector<int> signs;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw PreconditionError("bad sign in strategy '" + std::string(text) + "'");
    }
    signs.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return explicit_signs(std::move(signs));
}

int SignStrategy::choose(std::size_t step, const Int& prev, const Int& cur) const {
  switch (kind_) {
    case Kind::AllPlus:
      return 1;
    case Kind::AllMinus:
      return -1;
    case Kind::LeastAbsoluteRemainder: {
      const Int plus = floor_mod(prev, cur);
      const Int minus = plus == 0 ? Int(0) : Int(cur - plus);
      return minus < plus ? -1 : 1;
    }
    case Kind::Explicit:
      if (step == 0 || step > signs_.size()) throw StrategyExhaustedError(step);
      return signs_[step - 1];
  }
  return 1;
}

std::string SignStrategy::name() const {
  switch (kind_) {
    case Kind::AllPlus:
      return "all-plus";
    case Kind::AllMinus:
      return "all-minus";
    case Kind::LeastAbsoluteRemainder:
      return "least-abs";
    case Kind::Explicit:
      break;
  }
  std::string out = "explicit:";
  for (std::size_t k = 0; k < signs_.size(); ++k) {
    if (k != 0) out += ',';
    out += signs_[k] > 0 ? "+1" : "-1";
  }
  return out;
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::RemainderOne:
      return "remainder-one";
    case Termination::GammaZero:
      return "gamma-zero";
    case Termination::RemainderZero:
      return "remainder-zero";
  }
  return "?";
}

Termination termination_from_string(std::string_view text) {
  for (auto t : {Termination::RemainderOne, Termination::GammaZero, Termination::RemainderZero}) {
    if (to_string(t) == text) return t;
  }
  throw PreconditionError("unknown termination '" + std::string(text) + "'");
}

const DayanStep& DayanTrace::at(long index) const {
  if (index < -1 || index > last_index()) throw PreconditionError("trace index out of range");
  return steps[static_cast<std::size_t>(index + 1)];
}

std::size_t DayanTrace::remainder_steps() const noexcept {
  // The r_n = 1 row implies one more (trivial) division r_{n-1} = r_{n-1} * 1 + 0.
  const auto divisions = static_cast<std::size_t>(last_index());
  return termination == Termination::RemainderOne ? divisions + 1 : divisions;
}

DayanTrace run_trace(const Int& p, const Int& q, const Int& a, const SignStrategy& strategy,
                     TraceOptions options) {
  if (!(0 < q && q < p)) throw PreconditionError("run_trace: requires 0 < q < p");
  if (a < 0 || a >= p) throw PreconditionError("run_trace: requires 0 <= a < p");

  DayanTrace trace;
  trace.p = p;
  trace.q = q;
  trace.a = a;
  trace.strategy = strategy;
  auto& steps = trace.steps;
  steps.push_back(DayanStep{.index = -1, .r = p, .f = Int(0)});
  steps.push_back(DayanStep{.index = 0, .r = q, .gamma = a, .f = Int(1)});

  bool summing = true;
  for (long i = 0;; ++i) {
    const auto row = static_cast<std::size_t>(i + 1);
    if (summing && *steps[row].gamma == 0) {
      steps[row].beta = Int(0);
      trace.sum_index = i - 1;
      summing = false;
      if (!options.complete_remainders) {
        trace.termination = Termination::GammaZero;
        return trace;
      }
    }
    if (steps[row].r == 1) {
      if (summing) {
        steps[row].beta = steps[row].gamma;
        trace.sum_index = i;
      }
      trace.termination = Termination::RemainderOne;
      trace.gcd = Int(1);
      return trace;
    }

    const Int& prev_r = steps[row - 1].r;
    const Int& r = steps[row].r;
    const int s = strategy.choose(static_cast<std::size_t>(i + 1), prev_r, r);
    const Int signed_prev = s * prev_r;

    DayanStep next{.index = i + 1, .r = floor_mod(signed_prev, r), .s = s};
    if (summing) {
      const Int& gamma = *steps[row].gamma;
      const Int c = Int(s * floor_div(signed_prev, r));
      const int s_here = steps[row].s.value_or(1);  // s_0 = +1
      steps[row].beta = Int(s * ceil_div(Int(s * gamma), r));
      next.gamma = floor_mod(Int(-s * gamma), r);
      next.f = Int(c * *steps[row].f + s_here * *steps[row - 1].f);
      next.c = c;
    }
    const Int r_here = r;
    steps.push_back(std::move(next));

    if (steps.back().r == 0) {
      trace.termination = Termination::RemainderZero;
      trace.gcd = r_here;
      if (summing) {
        trace.sum_index = i;
        if (*steps.back().gamma == 0) {
          steps.back().beta = Int(0);
        } else {
          trace.solvable = false;
        }
      }
      return trace;
    }
  }
}

namespace {

void require_solvable(const DayanTrace& trace) {
  if (!trace.solvable) throw NoSolutionError(trace.gcd.value_or(Int(0)));
}

}  // namespace

Int ext_inverse_sum_f(const DayanTrace& trace) {
  require_solvable(trace);
  Int sum = 0;
  for (long i = 0; i <= trace.sum_index; ++i) {
    const DayanStep& step = trace.at(i);
    sum += *step.f * *step.beta;
  }
  return sum;
}

Int ext_inverse_sum_fraction(const DayanTrace& trace) {
  require_solvable(trace);
  Rational sum = 0;
  for (long i = 0; i <= trace.sum_index; ++i) {
    const DayanStep& step = trace.at(i);
    sum += Rational(Int(trace.p * *step.gamma), Int(trace.at(i - 1).r * step.r));
  }
  if (denominator(sum) != 1) throw Error("ext_inverse_sum_fraction: sum is not an integer");
  return numerator(sum);
}

TracedExtInverse ext_mod_inverse_traced(const Int& b, const Int& a, const Int& m,
                                        const SignStrategy& strategy) {
  if (m <= 1) throw PreconditionError("ext_mod_inverse: requires m > 1");
  if (a == 0) throw PreconditionError("ext_mod_inverse: requires a != 0");
  const Int q = floor_mod(a, m);
  const Int rhs = floor_mod(b, m);

  if (q == 0) {
    // gcd(a, m) = m; only b = 0 (mod m) is solvable, modulo m/m = 1.
    ExtInverseOutcome out{.reduced_modulus = Int(1), .gcd = m};
    if (rhs == 0) {
      out.status = ExtInverseStatus::Defined;
      out.value = Int(0);
    }
    return {std::move(out), std::nullopt};
  }

  DayanTrace trace = run_trace(m, q, rhs, strategy, TraceOptions{.complete_remainders = true});
  const Int d = *trace.gcd;
  ExtInverseOutcome out{.reduced_modulus = m / d, .gcd = d};
  if (trace.solvable) {
    out.status = ExtInverseStatus::Defined;
    out.value = ext_inverse_sum_f(trace);
  }
  return {std::move(out), std::move(trace)};
}

ExtInverseOutcome ext_mod_inverse(const Int& b, const Int& a, const Int& m, const SignStrategy& strategy) {
  return ext_mod_inverse_traced(b, a, m, strategy).outcome;
}

}  // namespace modinv
