#include "modinv/series.hpp"

#include "modinv/dayan.hpp"
#include "modinv/modmath.hpp"

namespace modinv {

namespace {

void require_series_args(const Int& p, const Int& q) {
  if (!(1 < q && q < p)) throw PreconditionError("series: requires 1 < q < p");
}

Int exact_integer(const Rational& v) {
  if (denominator(v) != 1) throw Error("series: sum is not an integer");
  return numerator(v);
}

// sum_{i=0}^{(n-1)/2} c_{2i+1} / (r_{2i-1} r_{2i+1})
Rational paired_terms(const RemainderChain& chain) {
  Rational sum = 0;
  for (long i = 0; 2 * i + 1 <= chain.n(); ++i) {
    sum += Rational(chain.quot(2 * i + 1), Int(chain.rem(2 * i - 1) * chain.rem(2 * i + 1)));
  }
  return sum;
}

}  // namespace

RemainderChain remainder_chain(const Int& p, const Int& q, int sign) {
  require_series_args(p, q);
  RemainderChain chain;
  chain.r = {p, q};
  chain.c = {Int(0), Int(0)};
  while (chain.r.back() != 1) {
    const Int& prev = chain.r[chain.r.size() - 2];
    const Int& cur = chain.r.back();
    if (cur == 0) throw NotCoprimeError(prev);
    Int next_c = sign * floor_div(Int(sign * prev), cur);
    Int next_r = floor_mod(Int(sign * prev), cur);
    chain.c.push_back(std::move(next_c));
    chain.r.push_back(std::move(next_r));
  }
  return chain;
}

FirstTypeResult inverse_series_first_type(const Int& p, const Int& q) {
  const RemainderChain chain = remainder_chain(p, q, +1);
  Rational sum = 0;
  for (long i = 0; i <= chain.n(); ++i) {
    const Rational term(Int(1), Int(chain.rem(i - 1) * chain.rem(i)));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  FirstTypeResult out;
  out.raw = exact_integer(sum * p);
  out.n = chain.n();
  out.value = out.n % 2 == 0 ? out.raw : Int(out.raw + p);
  return out;
}

Int inverse_series_first_type_condensed(const Int& p, const Int& q) {
  const RemainderChain chain = remainder_chain(p, q, +1);
  const long n = chain.n();
  Rational value = -paired_terms(chain) * p;
  if (n % 2 == 0) {
    value += Rational(p, chain.rem(n - 1));
  } else {
    value += p;
  }
  return exact_integer(value);
}

Int inverse_series_second_type(const Int& p, const Int& q, bool condensed) {
  const RemainderChain chain = remainder_chain(p, q, -1);
  const long n = chain.n();
  Rational value = 0;
  if (condensed) {
    value = paired_terms(chain) * p;
    if (n % 2 == 0) value += Rational(p, chain.rem(n - 1));
  } else {
    for (long i = 0; i <= n; ++i) value += Rational(p, Int(chain.rem(i - 1) * chain.rem(i)));
  }
  return exact_integer(value);
}

std::vector<ConvergentPair> convergent_inverse_check(const Int& p, const Int& q) {
  require_series_args(p, q);
  const DayanTrace trace = run_trace(p, q, Int(1), SignStrategy::all_minus());
  if (trace.gcd != Int(1)) throw NotCoprimeError(trace.gcd.value_or(Int(0)));
  std::vector<ConvergentPair> pairs;
  for (long j = 0; j <= trace.last_index(); ++j) {
    const DayanStep& step = trace.at(j);
    pairs.push_back({step.r, *step.f});
  }
  return pairs;
}

}  // namespace modinv
