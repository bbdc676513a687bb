#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaussdim/counting.hpp"
#include "oracles.hpp"

using namespace gaussdim;

TEST_CASE("truncated zeta matches the classical closed forms") {
  const double pi = 3.14159265358979323846;
  ZetaResult z2 = zeta_truncated(2.0, 1e-10);
  CHECK(z2.value == doctest::Approx(pi * pi / 6.0).epsilon(1e-10));
  CHECK(std::abs(z2.value - pi * pi / 6.0) <= z2.error_bound);
  CHECK(z2.error_bound <= 1e-10);
  ZetaResult z4 = zeta_truncated(4.0, 1e-10);
  CHECK(z4.value == doctest::Approx(pi * pi * pi * pi / 90.0).epsilon(1e-10));
  CHECK(std::abs(z4.value - pi * pi * pi * pi / 90.0) <= z4.error_bound);
  ZetaResult z3 = zeta_truncated(3.0, 1e-8);
  CHECK(z3.value == doctest::Approx(1.2020569032).epsilon(1e-8));
  CHECK(z3.error_bound <= 1e-8);
}

TEST_CASE("truncated zeta agrees with direct summation") {
  for (double s : {1.5, 2.5, 4.0}) {
    double ref = oracles::zeta_direct(s);
    CHECK(zeta_truncated(s, 1e-12).value == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("zeta rejects the divergent range") {
  CHECK_THROWS_AS(zeta_truncated(1.0, 1e-6), std::domain_error);
  CHECK_THROWS_AS(zeta_truncated(0.5, 1e-6), std::domain_error);
}

TEST_CASE("window counts on the examples") {
  CHECK(enumerate_count({10.0, 2, TupleShape::PowerLaw, 1.0, 0.3, false}) == 30);
  CHECK(enumerate_count({25.0, 1, TupleShape::PowerLaw, 2.0, 0.2, false}) == 1);
  CHECK(enumerate_count({2.0, 3, TupleShape::PowerLaw, 1.0, 0.1, false}) == 0);
}

TEST_CASE("closed-interval toggle captures boundary tuples") {
  // [9, 16) holds only 3^2; [9, 16] also holds 4^2
  TupleConstraint half{9.0, 1, TupleShape::PowerLaw, 2.0, 7.0 / 9.0, false};
  TupleConstraint closed = half;
  closed.closed_interval = true;
  CHECK(enumerate_count(half) == 1);
  CHECK(enumerate_count(closed) == 2);
}

TEST_CASE("weighted window sums match the naive oracle") {
  TupleConstraint c{10.0, 2, TupleShape::PowerLaw, 1.0, 0.3, false};
  WeightedSum ws = g_sum(c, 2.0, 1.0);
  auto naive = oracles::naive_tuples(
      10.0, 2, 0.3, 2.0, [](std::uint64_t v) { return static_cast<double>(v); }, 16);
  CHECK(ws.count == naive.count);
  CHECK(ws.value == doctest::Approx(naive.weighted).epsilon(1e-12));
  CHECK(ws.value == doctest::Approx(0.1051593248422809).epsilon(1e-12));

  WeightedSum single = g_sum({25.0, 1, TupleShape::PowerLaw, 2.0, 0.2, false}, 2.0, 1.0);
  CHECK(single.count == 1);
  CHECK(single.value == doctest::Approx(0.04).epsilon(1e-13));

  WeightedSum empty = g_sum({2.0, 3, TupleShape::PowerLaw, 1.0, 0.1, false}, 2.0, 1.0);
  CHECK(empty.count == 0);
  CHECK(empty.value == 0.0);
}

TEST_CASE("log-power sums match the naive oracle") {
  double m = std::exp(std::pow(std::log(5.0), 2.0));
  TupleConstraint c{m, 1, TupleShape::LogPower, 2.0, 0.01, false};
  WeightedSum ws = ghat_sum(c, 2.0, 1.0);
  CHECK(ws.count == 1);
  CHECK(ws.value == doctest::Approx(0.04).epsilon(1e-13));

  TupleConstraint pair{50.0, 2, TupleShape::LogPower, 2.0, 0.32, false};
  auto term = [](std::uint64_t v) {
    return v == 1 ? 1.0 : std::exp(std::pow(std::log(static_cast<double>(v)), 2.0));
  };
  auto naive = oracles::naive_tuples(50.0, 2, 0.32, 1.5, term, 10);
  WeightedSum got = ghat_sum(pair, 2.0, 0.75);
  CHECK(got.count == naive.count);
  CHECK(got.value == doctest::Approx(naive.weighted).epsilon(1e-12));
}

TEST_CASE("parallel and serial sums are identical") {
  TupleConstraint c{500.0, 3, TupleShape::PowerLaw, 1.0, 0.32, false};
  WeightedSum par = g_sum(c, 2.0, 0.75);
  WeightedSum ser = g_sum_serial(c, 2.0, 0.75);
  CHECK(par.value == ser.value);  // bitwise, by the ordered merge
  CHECK(par.count == ser.count);

  TupleConstraint lc{200.0, 3, TupleShape::LogPower, 1.5, 0.32, false};
  CHECK(ghat_sum(lc, 2.0, 1.0).value == ghat_sum_serial(lc, 2.0, 1.0).value);
}

TEST_CASE("pair counts are permutation symmetric") {
  TupleConstraint c{10.0, 2, TupleShape::PowerLaw, 1.0, 0.3, false};
  long asym = 0;
  enumerate_tuples(c, [&](std::span<const std::uint64_t> t) {
    TupleConstraint probe = c;
    (void)probe;
    if (t[0] != t[1]) ++asym;
  });
  CHECK(asym % 2 == 0);  // mirrored partners both enumerated
}

TEST_CASE("bound constants follow the stated combinations") {
  BoundConstants bc = bound_constants(1.0, 2.0);
  CHECK(bc.c4 == doctest::Approx(1.0));
  CHECK(bc.c1 == doctest::Approx(8.0));
  CHECK(bc.c2 == doctest::Approx(6.0 * 3.0 * zeta_value(2.0)).epsilon(1e-12));
  CHECK(bc.c3 == doctest::Approx(1.0));
  CHECK(bc.c_hat == doctest::Approx(2.0 * 9.0 * zeta_value(2.0)).epsilon(1e-12));

  BoundConstants bh = bound_constants(0.5, 2.0);
  CHECK(bh.c4 == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(bh.c1 == doctest::Approx(32.0 * 8.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("power-law bound on the worked example") {
  TupleConstraint c{10.0, 2, TupleShape::PowerLaw, 1.0, 0.3, false};
  BoundResult b = g_bound(c, 2.0, 1.0);
  CHECK(b.value == doctest::Approx(8.0 * 29.6088 * 0.3 * 0.1).epsilon(1e-4));
  CHECK(b.window_low == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(b.valid);

  TupleConstraint low = c;
  low.eps = 0.05;
  CHECK_FALSE(g_bound(low, 2.0, 1.0).valid);
  TupleConstraint high = c;
  high.eps = 0.34;
  CHECK_FALSE(g_bound(high, 2.0, 1.0).valid);
}

TEST_CASE("log-power bound on the worked example") {
  TupleConstraint c{100.0, 2, TupleShape::LogPower, 2.0, 0.2, false};
  BoundResult b = ghat_bound(c, 2.0, 1.0);
  CHECK(b.window_low == doctest::Approx(std::exp(-std::sqrt(std::log(100.0)))).epsilon(1e-12));
  CHECK(b.valid);
  CHECK(b.value == doctest::Approx(4.1533).epsilon(1e-3));

  TupleConstraint undef{1.0, 2, TupleShape::LogPower, 2.0, 0.2, false};
  CHECK_THROWS_AS(ghat_bound(undef, 2.0, 1.0), std::domain_error);
}

TEST_CASE("the enumeration cap refuses oversized windows") {
  TupleConstraint huge{2000.0, 4, TupleShape::PowerLaw, 1.0, 0.32, false};
  CHECK_THROWS_AS(enumerate_count(huge, 1000000), EnumerationCapError);
}

TEST_CASE("ds must exceed one for weighted sums") {
  TupleConstraint c{10.0, 2, TupleShape::PowerLaw, 1.0, 0.3, false};
  CHECK_THROWS_AS(g_sum(c, 2.0, 0.4), std::domain_error);
}

TEST_CASE("bound inequality holds across a small mixed grid") {
  for (double m : {50.0, 200.0}) {
    for (int n : {2, 3}) {
      for (double eps : {0.25, 0.32}) {
        for (double s : {0.75, 1.0}) {
          TupleConstraint c{m, n, TupleShape::PowerLaw, 1.0, eps, false};
          BoundResult b = g_bound(c, 2.0, s);
          if (!b.valid) continue;
          CHECK(g_sum(c, 2.0, s).value <= b.value);
        }
      }
    }
  }
}
