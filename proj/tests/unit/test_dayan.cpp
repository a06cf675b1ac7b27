#include "modinv/dayan.hpp"
#include "modinv/modmath.hpp"
#include "modinv/oracle.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <vector>

using modinv::DayanStep;
using modinv::DayanTrace;
using modinv::Int;
using modinv::SignStrategy;
using modinv::Termination;

namespace {

using Column = std::vector<std::optional<long>>;
constexpr std::nullopt_t _ = std::nullopt;

Column column(const DayanTrace& t, std::optional<Int> DayanStep::*field) {
  Column out;
  for (const DayanStep& s : t.steps) {
    const auto& v = s.*field;
    out.push_back(v ? std::optional<long>(static_cast<long>(*v)) : std::nullopt);
  }
  return out;
}

Column r_column(const DayanTrace& t) {
  Column out;
  for (const DayanStep& s : t.steps) out.push_back(static_cast<long>(s.r));
  return out;
}

const std::vector<SignStrategy>& builtin_strategies() {
  static const std::vector<SignStrategy> all = {SignStrategy::all_plus(), SignStrategy::all_minus(),
                                                SignStrategy::least_absolute()};
  return all;
}

}  // namespace

TEST(SignStrategyTest, ParseAndName) {
  for (const char* text : {"all-plus", "all-minus", "least-abs", "explicit:-1,-1,-1,+1"}) {
    EXPECT_EQ(SignStrategy::parse(text).name(), text);
  }
  EXPECT_EQ(SignStrategy::parse("plus"), SignStrategy::all_plus());
  EXPECT_EQ(SignStrategy::parse("explicit:-1,1").signs(), (std::vector<int>{-1, 1}));
  EXPECT_THROW(SignStrategy::parse("explicit:2"), modinv::PreconditionError);
  EXPECT_THROW(SignStrategy::parse("explicit:-1,,1"), modinv::PreconditionError);
  EXPECT_THROW(SignStrategy::parse("sideways"), modinv::PreconditionError);
}

TEST(SignStrategyTest, LeastAbsoluteTieGoesPlus) {
  const auto s = SignStrategy::least_absolute();
  EXPECT_EQ(s.choose(1, 10, 4), 1);   // 10 = 2*4 + 2 = 3*4 - 2
  EXPECT_EQ(s.choose(1, 11, 4), -1);  // 11 = 3*4 - 1
  EXPECT_EQ(s.choose(1, 9, 4), 1);    // 9 = 2*4 + 1
  EXPECT_EQ(s.choose(1, 12, 4), 1);
}

TEST(RunTraceTest, AllPlusTable) {
  const DayanTrace t = modinv::run_trace(189, 106, 1, SignStrategy::all_plus());
  EXPECT_EQ(r_column(t), (Column{189, 106, 83, 23, 14, 9, 5, 4, 1}));
  EXPECT_EQ(column(t, &DayanStep::gamma), (Column{_, 1, 105, 61, 8, 6, 3, 2, 2}));
  EXPECT_EQ(column(t, &DayanStep::c), (Column{_, _, 1, 1, 3, 1, 1, 1, 1}));
  EXPECT_EQ(column(t, &DayanStep::beta), (Column{_, 1, 2, 3, 1, 1, 1, 1, 2}));
  EXPECT_EQ(column(t, &DayanStep::f), (Column{0, 1, 1, 2, 7, 9, 16, 25, 41}));
  EXPECT_EQ(t.termination, Termination::RemainderOne);
  EXPECT_EQ(t.gcd, Int(1));
  EXPECT_EQ(t.sum_index, 7);
  EXPECT_EQ(modinv::ext_inverse_sum_f(t), 148);
  EXPECT_EQ(modinv::ext_inverse_sum_fraction(t), 148);
}

TEST(RunTraceTest, MixedSignTable) {
  const DayanTrace t = modinv::run_trace(189, 106, 1, SignStrategy::explicit_signs({-1, -1, -1, 1}));
  EXPECT_EQ(r_column(t), (Column{189, 106, 23, 9, 4, 1}));
  EXPECT_EQ(column(t, &DayanStep::gamma), (Column{_, 1, 1, 1, 1, 3}));
  EXPECT_EQ(column(t, &DayanStep::c), (Column{_, _, 2, 5, 3, 2}));
  EXPECT_EQ(column(t, &DayanStep::beta), (Column{_, 0, 0, 0, 1, 3}));
  EXPECT_EQ(column(t, &DayanStep::f), (Column{0, 1, 2, 9, 25, 41}));
  std::vector<std::optional<int>> s;
  for (const auto& step : t.steps) s.push_back(step.s);
  EXPECT_EQ(s, (std::vector<std::optional<int>>{_, _, -1, -1, -1, 1}));
  EXPECT_EQ(modinv::ext_inverse_sum_f(t), 148);
  EXPECT_EQ(modinv::ext_inverse_sum_fraction(t), 148);
}

TEST(RunTraceTest, GammaReachesZeroFirst) {
  const DayanTrace t = modinv::run_trace(189, 106, 46, SignStrategy::all_plus());
  EXPECT_EQ(r_column(t), (Column{189, 106, 83, 23, 14, 9, 5, 4, 1}));
  EXPECT_EQ(column(t, &DayanStep::gamma), (Column{_, 46, 60, 23, 0, _, _, _, _}));
  EXPECT_EQ(column(t, &DayanStep::c), (Column{_, _, 1, 1, 3, _, _, _, _}));
  EXPECT_EQ(column(t, &DayanStep::beta), (Column{_, 1, 1, 1, 0, _, _, _, _}));
  EXPECT_EQ(column(t, &DayanStep::f), (Column{0, 1, 1, 2, 7, _, _, _, _}));
  EXPECT_EQ(t.sum_index, 2);
  EXPECT_EQ(t.sum_steps(), 3u);
  EXPECT_EQ(modinv::ext_inverse_sum_f(t), 4);
  EXPECT_EQ(modinv::ext_inverse_sum_fraction(t), 4);
}

TEST(RunTraceTest, StopsAtGammaZeroWithoutCompletion) {
  const DayanTrace t =
      modinv::run_trace(189, 106, 46, SignStrategy::all_plus(), modinv::TraceOptions{.complete_remainders = false});
  EXPECT_EQ(t.termination, Termination::GammaZero);
  EXPECT_FALSE(t.gcd.has_value());
  EXPECT_EQ(t.last_index(), 3);
  EXPECT_EQ(modinv::ext_inverse_sum_f(t), 4);
}

TEST(RunTraceTest, NonCoprimeTableFindsGcd) {
  const DayanTrace t = modinv::run_trace(945, 530, 230, SignStrategy::all_plus());
  EXPECT_EQ(r_column(t), (Column{945, 530, 415, 115, 70, 45, 25, 20, 5, 0}));
  EXPECT_EQ(column(t, &DayanStep::gamma), (Column{_, 230, 300, 115, 0, _, _, _, _, _}));
  EXPECT_EQ(column(t, &DayanStep::c), (Column{_, _, 1, 1, 3, _, _, _, _, _}));
  EXPECT_EQ(column(t, &DayanStep::beta), (Column{_, 1, 1, 1, 0, _, _, _, _, _}));
  EXPECT_EQ(column(t, &DayanStep::f), (Column{0, 1, 1, 2, 7, _, _, _, _, _}));
  EXPECT_EQ(t.termination, Termination::RemainderZero);
  EXPECT_EQ(t.gcd, Int(5));
  EXPECT_EQ(modinv::ext_inverse_sum_f(t), 4);
  EXPECT_EQ(modinv::ext_inverse_sum_fraction(t), 4);
  EXPECT_EQ(t.remainder_steps(), 8u);
}

TEST(RunTraceTest, ZeroNumeratorGivesEmptySum) {
  const DayanTrace t = modinv::run_trace(189, 106, 0, SignStrategy::all_plus());
  EXPECT_EQ(t.sum_index, -1);
  EXPECT_EQ(t.sum_steps(), 0u);
  EXPECT_EQ(modinv::ext_inverse_sum_f(t), 0);
  EXPECT_EQ(modinv::ext_inverse_sum_fraction(t), 0);
}

TEST(RunTraceTest, UnitDivisorReturnsNumerator) {
  const DayanTrace t = modinv::run_trace(17, 1, 9, SignStrategy::all_plus());
  EXPECT_EQ(modinv::ext_inverse_sum_f(t), 9);
}

TEST(RunTraceTest, PreconditionsAndExhaustion) {
  EXPECT_THROW(modinv::run_trace(10, 10, 1, SignStrategy::all_plus()), modinv::PreconditionError);
  EXPECT_THROW(modinv::run_trace(10, 0, 1, SignStrategy::all_plus()), modinv::PreconditionError);
  EXPECT_THROW(modinv::run_trace(10, 3, 10, SignStrategy::all_plus()), modinv::PreconditionError);
  EXPECT_THROW(modinv::run_trace(10, 3, -1, SignStrategy::all_plus()), modinv::PreconditionError);
  try {
    modinv::run_trace(189, 106, 1, SignStrategy::explicit_signs({-1, -1}));
    FAIL() << "expected StrategyExhaustedError";
  } catch (const modinv::StrategyExhaustedError& e) {
    EXPECT_EQ(e.step(), 3u);
  }
}

TEST(RunTraceTest, UnsolvableTraceReportsNoSolution) {
  // gcd(10, 4) = 2 does not divide 5.
  const DayanTrace t = modinv::run_trace(10, 4, 5, SignStrategy::all_plus());
  EXPECT_FALSE(t.solvable);
  EXPECT_EQ(t.gcd, Int(2));
  EXPECT_THROW(modinv::ext_inverse_sum_f(t), modinv::NoSolutionError);
  EXPECT_THROW(modinv::ext_inverse_sum_fraction(t), modinv::NoSolutionError);
}

TEST(RunTraceTest, RecurrenceInvariantsHold) {
  for (int p = 3; p <= 60; ++p) {
    for (int q = 1; q < p; ++q) {
      for (int a = 0; a < p; a += 3) {
        for (const auto& strategy : builtin_strategies()) {
          const DayanTrace t = modinv::run_trace(p, q, a, strategy);
          EXPECT_EQ(t.at(0).gamma, Int(a));
          for (long i = 0; i < t.last_index(); ++i) {
            const DayanStep& prev = t.at(i - 1);
            const DayanStep& cur = t.at(i);
            const DayanStep& next = t.at(i + 1);
            ASSERT_TRUE(next.s.has_value());
            EXPECT_TRUE(0 <= next.r && next.r < cur.r);
            if (next.c) {
              EXPECT_EQ(prev.r, *next.c * cur.r + *next.s * next.r);
              // r_{-1} = f_{i+1} r_i + s_{i+1} f_i r_{i+1}
              EXPECT_EQ(t.p, *next.f * cur.r + *next.s * *cur.f * next.r);
            }
            if (next.gamma && cur.beta) {
              EXPECT_EQ(*cur.gamma, *cur.beta * cur.r - *next.s * *next.gamma);
              EXPECT_TRUE(0 <= *next.gamma && *next.gamma < cur.r);
            }
          }
          if (t.gcd) {
            EXPECT_EQ(*t.gcd, modinv::gcd(p, q));
            for (const DayanStep& s : t.steps) EXPECT_EQ(s.r % *t.gcd, 0);
          }
        }
      }
    }
  }
}

TEST(ExtModInverseTest, Examples) {
  auto out = modinv::ext_mod_inverse(46, 106, 189);
  EXPECT_TRUE(out.is_defined());
  EXPECT_EQ(out.value, Int(4));
  EXPECT_EQ(out.reduced_modulus, 189);

  out = modinv::ext_mod_inverse(230, 530, 945);
  EXPECT_EQ(out.value, Int(4));
  EXPECT_EQ(out.reduced_modulus, 189);
  EXPECT_EQ(out.gcd, 5);

  EXPECT_EQ(modinv::ext_mod_inverse(106, 106, 189).value, Int(1));
  EXPECT_EQ(modinv::ext_mod_inverse(1, 106, 189).value, Int(148));

  out = modinv::ext_mod_inverse(5, 4, 10);
  EXPECT_FALSE(out.is_defined());
  EXPECT_EQ(out.gcd, 2);

  EXPECT_THROW(modinv::ext_mod_inverse(1, 3, 1), modinv::PreconditionError);
  EXPECT_THROW(modinv::ext_mod_inverse(1, 0, 10), modinv::PreconditionError);
}

TEST(ExtModInverseTest, ReducesOutOfRangeArguments) {
  EXPECT_EQ(modinv::ext_mod_inverse(46 + 189, 106 - 189, 189).value, Int(4));
  EXPECT_EQ(modinv::ext_mod_inverse(-143, 106, 189).value, Int(4));  // -143 = 46 (mod 189)
}

TEST(ExtModInverseTest, MultipleOfModulus) {
  auto out = modinv::ext_mod_inverse(20, 30, 10);
  EXPECT_TRUE(out.is_defined());
  EXPECT_EQ(out.value, Int(0));
  EXPECT_EQ(out.reduced_modulus, 1);
  EXPECT_FALSE(modinv::ext_mod_inverse(3, 30, 10).is_defined());
}

TEST(ExtModInverseTest, MatchesScanOnSmallModuli) {
  for (int m = 2; m <= 40; ++m) {
    for (int a = 1; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        const auto scanned = modinv::oracle::brute_ext_inverse(b, a, m);
        for (const auto& strategy : builtin_strategies()) {
          const auto out = modinv::ext_mod_inverse(b, a, m, strategy);
          ASSERT_EQ(out.is_defined(), scanned.has_value()) << b << "," << a << "," << m;
          if (scanned) {
            EXPECT_EQ(out.value, *scanned);
            EXPECT_TRUE(0 <= *out.value && *out.value < out.reduced_modulus);
          }
        }
      }
    }
  }
}

TEST(ExtModInverseTest, EarlyTerminationForMultiplesOfDivisor) {
  for (int p = 5; p <= 80; ++p) {
    for (int q = 2; q < p; ++q) {
      if (modinv::gcd(p, q) != 1) continue;
      for (int k = 1; k * q < p; ++k) {
        const DayanTrace t = modinv::run_trace(p, q, k * q, SignStrategy::all_plus());
        EXPECT_EQ(t.sum_steps(), 1u);
        EXPECT_EQ(modinv::ext_inverse_sum_f(t), k);
      }
    }
  }
}

TEST(ExtModInverseTest, TwoStepTermination) {
  // a = k1*q - k2*r1 with k2*r1 < q stops once gamma_2 = 0.
  for (int p = 7; p <= 80; ++p) {
    for (int q = 2; q < p; ++q) {
      if (modinv::gcd(p, q) != 1) continue;
      const int r1 = p % q;
      if (r1 == 0) continue;
      for (int k1 = 1; k1 * q < p + q; ++k1) {
        for (int k2 = 1; k2 * r1 < q; ++k2) {
          const int a = k1 * q - k2 * r1;
          if (a <= 0 || a >= p) continue;
          const DayanTrace t = modinv::run_trace(p, q, a, SignStrategy::all_plus());
          EXPECT_EQ(t.sum_steps(), 2u) << p << "," << q << "," << a;
        }
      }
    }
  }
}

TEST(ExtModInverseTest, StrategiesAgreeWithSums) {
  for (int p = 3; p <= 70; ++p) {
    for (int q = 1; q < p; ++q) {
      if (modinv::gcd(p, q) != 1) continue;
      for (int a = 0; a < p; ++a) {
        std::optional<Int> first;
        for (const auto& strategy : builtin_strategies()) {
          const DayanTrace t = modinv::run_trace(p, q, a, strategy);
          const Int by_f = modinv::ext_inverse_sum_f(t);
          EXPECT_EQ(by_f, modinv::ext_inverse_sum_fraction(t));
          if (!first) first = by_f;
          EXPECT_EQ(by_f, *first);
        }
      }
    }
  }
}

TEST(ExtModInverseTest, CancellationOfCommonFactor) {
  // gcd(a, m) = 1, g = gcd(a, b): (b a^-1)_m = ((b/g) (a/g)^-1)_m
  for (int m = 2; m <= 30; ++m) {
    for (int a = 1; a < m; ++a) {
      if (modinv::gcd(a, m) != 1) continue;
      for (int b = 1; b < 2 * m; ++b) {
        const Int g = modinv::gcd(a, b);
        EXPECT_EQ(modinv::ext_mod_inverse(b, a, m).value, modinv::ext_mod_inverse(Int(b / g), Int(a / g), m).value);
      }
    }
  }
}

TEST(ExtModInverseTest, AllSolutionsWhenGcdDividesRhs) {
  for (int m = 2; m <= 36; ++m) {
    for (int a = 1; a < m; ++a) {
      const Int d = modinv::gcd(a, m);
      if (d == 1) continue;
      for (int b = 0; b < m; b += static_cast<int>(d)) {
        const auto out = modinv::ext_mod_inverse(b, a, m);
        ASSERT_TRUE(out.is_defined());
        EXPECT_EQ(out.reduced_modulus, m / d);
        for (Int i = 0; i < d; ++i) {
          const Int x = *out.value + i * out.reduced_modulus;
          EXPECT_EQ((a * x - b) % m, 0);
        }
      }
    }
  }
}

TEST(ExtModInverseTest, LargeOperands) {
  const Int p("170141183460469231731687303715884105727");
  const Int q("98765432109876543210987654321");
  const Int a("55555555555555555555555555555");
  for (const auto& strategy : builtin_strategies()) {
    const auto out = modinv::ext_mod_inverse(a, q, p, strategy);
    ASSERT_TRUE(out.is_defined());
    EXPECT_EQ(modinv::floor_mod(Int(q * *out.value - a), p), 0);
  }
}

TEST(ExtendedReciprocityTest, BothDecompositions) {
  for (int p = 3; p <= 60; ++p) {
    for (int q = 2; q < p; ++q) {
      if (modinv::gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        // p = c q + s r, a = beta q - s gamma with 0 <= r, gamma < q
        const Int r = modinv::floor_mod(Int(s * p), q);
        const Int r_inv = modinv::inverse(r, q);
        for (int a = 0; a < p; ++a) {
          const Int gamma = modinv::floor_mod(Int(-s * a), q);
          const Int t = modinv::floor_mod(Int(gamma * r_inv), q);
          const Int t_alt = modinv::floor_mod(Int(-modinv::floor_mod(s * a, q) * modinv::inverse(Int(s * p), q)), q);
          EXPECT_EQ(t, t_alt);
          // x = a/q + (p/q) t, so q x = a + p t exactly.
          const Int x = *modinv::ext_mod_inverse(a, q, p).value;
          EXPECT_EQ(Int(q * x), Int(a + p * t)) << p << "," << q << "," << a << " s=" << s;
        }
      }
    }
  }
}
