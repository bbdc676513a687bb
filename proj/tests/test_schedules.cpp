#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaussdim/numeric.hpp"
#include "gaussdim/schedules.hpp"

using namespace gaussdim;

TEST_CASE("theorem windows reproduce the case formulas") {
  // phi = j, Phi = e^{2^n}: log s_n = 2^n, log t_n = 2^n + log(3 eps)
  DigitSchedule t1 = theorem_schedule(Potential::power_law(1.0), GrowthRate::super_exp(2.0),
                                      RegimeTag::T1_II, EpsilonPolicy::fixed(0.1));
  CHECK(t1.log_s(3) == doctest::Approx(8.0));
  CHECK(t1.log_t(3) == doctest::Approx(8.0 + std::log(0.3)).epsilon(1e-12));

  // c = 0.5, gamma = 2, lower window eps_n = 1/n
  DigitSchedule t3 = theorem_schedule(
      Potential::stretched_exp(0.5), GrowthRate::double_exp(2.0), RegimeTag::T3_III,
      EpsilonPolicy::vanishing([](long n) { return 1.0 / static_cast<double>(n); }, "1/n"));
  CHECK(t3.log_s(4) == doctest::Approx(32.0));          // 2^4 / 0.5
  CHECK(t3.log_t(4) == doctest::Approx(16.0 - std::log(4.0)).epsilon(1e-12));

  // a = 2, alpha = 0.8 contained window: log s_n = (n^0.8 + log(0.8 n^-0.2))/2
  DigitSchedule t1a = theorem_schedule(Potential::power_law(2.0), GrowthRate::poly_exp(0.8),
                                       RegimeTag::T1_I2, EpsilonPolicy::vanishing_power(2.0));
  double n5 = std::pow(5.0, 0.8) + std::log(0.8) - 0.2 * std::log(5.0);
  CHECK(t1a.log_s(5) == doctest::Approx(n5 / 2.0).epsilon(1e-12));
}

TEST_CASE("the covering flavor of the subthreshold window is refused") {
  CHECK_THROWS_AS(theorem_schedule(Potential::power_law(2.0), GrowthRate::poly_exp(0.8),
                                   RegimeTag::T1_I2, EpsilonPolicy::fixed(0.1)),
                  std::domain_error);
}

TEST_CASE("pairs without a window construction are refused") {
  CHECK_THROWS_AS(theorem_schedule(Potential::stretched_exp(2.0), GrowthRate::super_exp(2.0),
                                   RegimeTag::T1_II, EpsilonPolicy::fixed(0.1)),
                  std::domain_error);
  CHECK_THROWS_AS(theorem_schedule(Potential::power_law(1.0), GrowthRate::super_exp(2.0),
                                   RegimeTag::T2_II, EpsilonPolicy::fixed(0.1)),
                  std::domain_error);
}

TEST_CASE("schedule diagnostics accept the provided windows") {
  for (RegimeTag tag : {RegimeTag::T1_II, RegimeTag::T3_III}) {
    Potential p = tag == RegimeTag::T1_II ? Potential::power_law(1.0)
                                          : Potential::stretched_exp(0.5);
    GrowthRate g = tag == RegimeTag::T1_II ? GrowthRate::super_exp(2.0)
                                           : GrowthRate::double_exp(2.0);
    DigitSchedule sched = theorem_schedule(p, g, tag, EpsilonPolicy::fixed(0.1));
    ScheduleDiagnostics diag = schedule_diagnostics(sched, 40);
    CHECK(diag.t_below_s);
    CHECK(diag.s_increasing);
    CHECK(diag.min_gap_fraction > 0.0);
  }
}

TEST_CASE("sampling is deterministic and in range") {
  DigitSchedule bench = benchmark_schedule();
  SamplePoint a = sample_word(bench, 60, 7);
  SamplePoint b = sample_word(bench, 60, 7);
  CHECK(a.log_digits == b.log_digits);
  CHECK(a.exact_prefix == b.exact_prefix);
  SamplePoint c = sample_word(bench, 60, 8);
  CHECK(a.log_digits != c.log_digits);

  for (int n = 1; n <= 60; ++n) {
    double ls = bench.log_s(n), lt = bench.log_t(n);
    double la = a.log_digits[static_cast<std::size_t>(n - 1)];
    CHECK(la >= ls + log1m_exp(lt - ls) - 1e-9);
    CHECK(la <= log_add_exp(ls, lt) + 1e-9);
  }
  // exact digits reproduce the log digits while materialized
  for (std::size_t i = 0; i < a.exact_prefix.size(); ++i)
    CHECK(std::log(static_cast<double>(a.exact_prefix[i])) ==
          doctest::Approx(a.log_digits[i]).epsilon(1e-12));
}

TEST_CASE("a window narrower than one integer collapses to the center digit") {
  DigitSchedule narrow(
      [](long n) { return std::log(10.0) + 0.5 * static_cast<double>(n); },
      [](long) { return std::log(0.2); }, 1, "narrow");
  SamplePoint pt = sample_word(narrow, 8, 3);
  for (int n = 1; n <= 8; ++n) {
    double s = std::exp(narrow.log_s(n));
    CHECK(pt.exact_prefix[static_cast<std::size_t>(n - 1)] ==
          static_cast<std::uint64_t>(std::llround(s)));
  }
}

TEST_CASE("digit-one fill below the schedule start") {
  DigitSchedule shifted([](long n) { return static_cast<double>(n); },
                        [](long n) { return static_cast<double>(n) - 1.0; }, 4, "shifted");
  SamplePoint pt = sample_word(shifted, 6, 5);
  for (int n = 1; n <= 3; ++n)
    CHECK(pt.log_digits[static_cast<std::size_t>(n - 1)] == 0.0);
}

TEST_CASE("telescoping diagnostic digits have zero deviation") {
  for (const GrowthRate& g : {GrowthRate::poly_exp(1.0), GrowthRate::super_exp(1.5)}) {
    for (const Potential& p : {Potential::power_law(1.0), Potential::power_law(2.0),
                               Potential::stretched_exp(0.5)}) {
      std::vector<double> logs = diagnostic_log_digits(p, g, 20);
      ConvergenceProfile prof = convergence_profile_logs(p, g, logs);
      for (double dv : prof.deviations) CHECK(std::abs(dv) <= 1e-10);
    }
  }
}

TEST_CASE("bounded digits cannot follow super-linear growth") {
  std::vector<double> twos(30, std::log(2.0));
  ConvergenceProfile prof =
      convergence_profile_logs(Potential::power_law(1.0), GrowthRate::poly_exp(1.0), twos);
  // S_n = 2n against e^n: deviations run to -infinity
  CHECK(prof.deviations.back() == doctest::Approx(std::log(60.0) - 30.0).epsilon(1e-9));
  CHECK(prof.max_abs_tail > 5.0);
}

TEST_CASE("lower-bound samples converge at the stated rate") {
  DigitSchedule sched = theorem_schedule(Potential::power_law(1.0), GrowthRate::super_exp(2.0),
                                         RegimeTag::T1_II, EpsilonPolicy::vanishing_power(2.0));
  SamplePoint pt = sample_word(sched, 30, 1);
  ConvergenceProfile prof =
      convergence_profile(Potential::power_law(1.0), GrowthRate::super_exp(2.0), pt, 30);
  CHECK(prof.scale == LogScale::Log);
  CHECK(std::abs(prof.deviations.back()) <= 1e-3);
  for (int n = 21; n <= 30; ++n)
    CHECK(std::abs(prof.deviations[static_cast<std::size_t>(n - 1)]) <=
          std::log1p(std::pow(static_cast<double>(n), -2.0)) + 1e-12);
}

TEST_CASE("deviations switch to the outer scale for towering growth") {
  DigitSchedule sched = theorem_schedule(
      Potential::stretched_exp(0.5), GrowthRate::double_exp(2.0), RegimeTag::T3_III,
      EpsilonPolicy::vanishing_power(2.0));
  SamplePoint pt = sample_word(sched, 25, 2);
  ConvergenceProfile prof = convergence_profile(Potential::stretched_exp(0.5),
                                                GrowthRate::double_exp(2.0), pt, 25);
  CHECK(prof.scale == LogScale::LogLog);
  CHECK(prof.approximate);
  CHECK(std::abs(prof.deviations.back()) < 1e-6);
}

TEST_CASE("position sequence construction and failure") {
  EmSpec spec = em_spec(Potential::power_law(1.0), GrowthRate::poly_exp(0.4), 10, 0.1);
  CHECK(spec.exponent() == doctest::Approx(2.25));
  std::vector<long> nk = spec.positions(10);
  CHECK(nk[0] == 1);
  CHECK(nk[1] == 5);   // round(2^2.25)
  CHECK(nk[2] == 12);  // round(3^2.25)
  for (std::size_t i = 1; i < nk.size(); ++i) CHECK(nk[i] > nk[i - 1]);

  CHECK_THROWS_AS(em_spec(Potential::power_law(1.0), GrowthRate::poly_exp(2.0), 3, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(em_spec(Potential::power_law(1.0), GrowthRate::super_exp(2.0), 3, 0.1),
                  std::domain_error);
}

TEST_CASE("position-sum diagnostic verdicts") {
  UsefDiagnostic vanishing = usef_diagnostic(
      em_spec(Potential::power_law(1.0), GrowthRate::poly_exp(0.4), 10, 0.1), 200);
  CHECK(vanishing.verdict == TrendVerdict::Vanishing);
  CHECK(vanishing.ratios.size() == 200);

  UsefDiagnostic diverging = usef_diagnostic(
      em_spec(Potential::power_law(1.0), GrowthRate::poly_exp(0.6), 10, 0.01), 200);
  CHECK(diverging.verdict == TrendVerdict::Diverging);

  UsefDiagnostic tiny = usef_diagnostic(
      em_spec(Potential::power_law(1.0), GrowthRate::poly_exp(0.4), 10, 0.1), 2);
  CHECK(tiny.verdict == TrendVerdict::Inconclusive);
  CHECK(tiny.ratios.size() == 2);
}

TEST_CASE("digit windows with c >= 1 hold at most one integer") {
  CHECK(t4_window_count(Potential::stretched_exp(1.0), GrowthRate::poly_exp(1.0), 5, 0.1) == 1);
  long worst = 0;
  for (double c : {1.0, 1.5, 2.0})
    for (double alpha : {1.0, 1.5})
      for (long n = 2; n <= 40; ++n)
        for (double e : {0.01, 0.05, 0.1}) {
          long cnt =
              t4_window_count(Potential::stretched_exp(c), GrowthRate::poly_exp(alpha), n, e);
          CHECK(cnt >= 0);
          worst = std::max(worst, cnt);
        }
  CHECK(worst <= 1);
  CHECK_THROWS_AS(t4_window_count(Potential::stretched_exp(0.5), GrowthRate::poly_exp(1.0),
                                  5, 0.1),
                  std::domain_error);
  CHECK_THROWS_AS(t4_window_count(Potential::stretched_exp(1.0), GrowthRate::poly_exp(1.0),
                                  5, 0.3),
                  std::domain_error);
}
