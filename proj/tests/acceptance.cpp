// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gaussdim/counting.hpp"
#include "gaussdim/covering.hpp"
#include "gaussdim/dimension.hpp"
#include "gaussdim/ifs.hpp"
#include "gaussdim/numeric.hpp"
#include "gaussdim/schedules.hpp"
#include "gaussdim/verify.hpp"

using namespace gaussdim;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool pass, const std::string& detail) {
  std::printf("[%s] C%02d %s%s%s\n", pass ? "PASS" : "FAIL", idx, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

double cf(const Potential& p, const GrowthRate& g, double d) {
  return *closed_form_dimension(p, g, d).value;
}

void c1_closed_forms() {
  bool ok = true;
  std::string detail;
  for (double a : {0.5, 1.0, 2.0, 7.0})
    if (std::abs(cf(Potential::power_law(a), GrowthRate::super_exp(2.0), 2.0) - 1.0 / 3.0) >
        1e-12)
      ok = false;
  if (std::abs(cf(Potential::stretched_exp(0.5), GrowthRate::double_exp(2.0), 2.0) -
               1.0 / 7.0) > 1e-12)
    ok = false;
  for (double d : {1.5, 2.0, 3.0}) {
    if (std::abs(cf(Potential::power_law(1.0), GrowthRate::poly_exp(0.9), d) - 1.0 / d) >
        1e-12)
      ok = false;
    if (std::abs(cf(Potential::log_power(2.0), GrowthRate::poly_exp(0.9), d) - 1.0 / d) >
        1e-12)
      ok = false;
  }
  for (const Potential& p : {Potential::power_law(1.0), Potential::log_power(2.0),
                             Potential::stretched_exp(0.5), Potential::stretched_exp(2.0)}) {
    DimensionResult r = closed_form_dimension(p, GrowthRate::poly_exp(0.2), 2.0);
    if (!r.value || *r.value != 1.0 || !r.requires_distortion) ok = false;
  }
  for (double c : {1.0, 1.5})
    for (double alpha : {1.0, 1.5})
      if (cf(Potential::stretched_exp(c), GrowthRate::poly_exp(alpha), 2.0) != 0.0)
        ok = false;
  report(1, "closed-form dimensions reproduced to 1e-12", ok, detail);
}

void c2_boundary_continuity() {
  bool ok = true;
  double worst = 0.0;
  for (double d : {1.5, 2.0, 3.0}) {
    double g1 = std::abs(cf(Potential::power_law(1.0), GrowthRate::super_exp(1.0 + 1e-6), d) -
                         1.0 / d);
    double g2 = std::abs(cf(Potential::log_power(2.0), GrowthRate::super_exp(1.0 + 1e-6), d) -
                         1.0 / d);
    double g3 = std::abs(
        cf(Potential::stretched_exp(0.5), GrowthRate::double_exp(1.0 + 1e-6), d) - 0.5 / d);
    worst = std::max({worst, g1, g2, g3});
  }
  ok = worst <= 1e-5;
  report(2, "closed forms continuous at the family boundaries", ok,
         "worst gap " + num(worst));
}

void c3_lemA_cross_check() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Check> checks = verify_lem_a();
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  bool ok = all_pass(checks) && ms < 5000.0;
  std::string detail;
  for (const Check& c : checks)
    if (!c.pass) detail += c.name + " (" + c.detail + ") ";
  detail += "runtime " + num(ms) + " ms";
  report(3, "liminf tails within 2% of the closed forms at depth 200", ok, detail);
}

void c4_counting_bounds() {
  GridReport g3 = verify_lemma3_grid();
  GridReport g4 = verify_lemma4_grid();
  unsigned long long nodes = g3.total_nodes + g4.total_nodes;
  bool ok = g3.valid_points >= 100 && g4.valid_points >= 100 && g3.violations == 0 &&
            g4.violations == 0 && nodes < 100000000ull;
  report(4, "window sums below their closed-form bounds on the full grids", ok,
         std::to_string(g3.valid_points) + "+" + std::to_string(g4.valid_points) +
             " valid points, " + std::to_string(g3.violations + g4.violations) +
             " violations, " + std::to_string(nodes) + " nodes");
}

void c5_independent_estimator() {
  IfsSystem sys = IfsSystem::affine_power_law(2.0);
  RootResult r40 = dimension_root(sys, benchmark_schedule(), 40, 1e-7);
  DigitSchedule t1 = theorem_schedule(Potential::power_law(1.0), GrowthRate::super_exp(2.0),
                                      RegimeTag::T1_II, EpsilonPolicy::fixed(0.1));
  RootResult r25 = dimension_root(sys, t1, 25, 1e-8);
  bool ok = std::abs(r40.root - 0.5) <= 0.02 && std::abs(r25.root - 1.0 / 3.0) <= 0.03;
  report(5, "covering-sum roots match the dimension values", ok,
         "root_40=" + num(r40.root) + " root_25=" + num(r25.root));
}

void c6_convergence_of_samples() {
  DigitSchedule sched = theorem_schedule(Potential::power_law(1.0), GrowthRate::super_exp(2.0),
                                         RegimeTag::T1_II, EpsilonPolicy::vanishing_power(2.0));
  SamplePoint pt = sample_word(sched, 30, 1);
  ConvergenceProfile prof =
      convergence_profile(Potential::power_law(1.0), GrowthRate::super_exp(2.0), pt, 30);
  bool ok = std::abs(prof.deviations.back()) <= 1e-3;
  double prev_bound = kInf;
  for (int n = 21; n <= 30; ++n) {
    double bound = std::log1p(std::pow(static_cast<double>(n), -2.0));
    if (std::abs(prof.deviations[static_cast<std::size_t>(n - 1)]) > bound + 1e-12) ok = false;
    if (bound >= prev_bound) ok = false;  // envelope strictly decreasing
    prev_bound = bound;
  }
  report(6, "constructed points converge at the window rate", ok,
         "|delta_30|=" + num(std::abs(prof.deviations.back())));
}

void c7_threshold_diagnostic() {
  UsefDiagnostic v = usef_diagnostic(
      em_spec(Potential::power_law(1.0), GrowthRate::poly_exp(0.4), 10, 0.1), 200);
  UsefDiagnostic w = usef_diagnostic(
      em_spec(Potential::power_law(1.0), GrowthRate::poly_exp(0.6), 10, 0.01), 200);
  bool ok = v.verdict == TrendVerdict::Vanishing && w.verdict == TrendVerdict::Diverging;
  report(7, "position-sum diagnostic mirrors the alpha = 1/2 threshold", ok,
         verdict_name(v.verdict) + " at 0.4, " + verdict_name(w.verdict) + " at 0.6");
}

void c8_moran_monotone() {
  bool ok = true;
  double prev = 0.0, s50 = 0.0;
  for (int M = 2; M <= 50; ++M) {
    double s = moran_dimension(2.0, M, 1e-11);
    if (s <= prev) ok = false;
    prev = s;
    if (M == 50) s50 = s;
  }
  double lb2 = lemdim1_lower_bound(2.0, 2, 1e-11);
  double lb50 = lemdim1_lower_bound(2.0, 50, 1e-11);
  double lb2000 = lemdim1_lower_bound(2.0, 2000, 1e-11);
  if (s50 < 0.9) ok = false;
  if (!(lb2 < lb50 && lb50 < lb2000 && lb2000 > 0.98)) ok = false;
  report(8, "restricted-alphabet dimension increases toward one", ok,
         "s(50)=" + num(s50) + " bound(2000)=" + num(lb2000));
}

void c9_t4_mechanism() {
  long worst = 0;
  for (double c : {1.0, 1.5, 2.0})
    for (double alpha : {1.0, 1.5})
      for (long n = 2; n <= 40; ++n)
        for (double e : {0.01, 0.05, 0.1})
          worst = std::max(worst, t4_window_count(Potential::stretched_exp(c),
                                                  GrowthRate::poly_exp(alpha), n, e));
  report(9, "at most one digit satisfies the forced-window constraint", worst <= 1,
         "max count " + std::to_string(worst));
}

void c10_product_decay() {
  ProductGDiagnostic diag = product_g_diagnostic(1.0 / 3.0, 60, 1.0, 2.0, 0.6, 0.8);
  report(10, "product cover bound decays beyond its peak",
         diag.verdict == DecayVerdict::Decays,
         decay_verdict_name(diag.verdict) + ", peak at k=" + std::to_string(diag.argmax_k));
}

void c11_axioms() {
  std::vector<Check> checks = verify_axioms();
  bool ok = all_pass(checks);
  std::string detail;
  for (const Check& c : checks)
    if (!c.pass) detail += c.name + "; ";
  report(11, "both model systems satisfy the defining conditions", ok, detail);
}

void c12_cli_determinism() {
  const char* cmds[] = {
      "dimension --potential power:1 --growth superexp:2 --d 2",
      "sample --schedule t1-ii --a 1 --beta 2 --eps 0.1 --depth 25 --seed 42",
      "sweep --potential stretched:0.5 --growth doubleexp:1.5 --d 2 --var gamma "
      "--from 1.1 --to 2.9 --step 0.3",
      "root --schedule benchmark --d 2 --depth 16 --tol 1e-6 --every 8",
  };
  bool ok = true;
  for (const char* c : cmds) {
    auto run = [&](const std::string& args) {
      std::string cmd = std::string(GAUSSDIM_CLI_PATH) + " " + args + " 2>/dev/null";
      FILE* pipe = popen(cmd.c_str(), "r");
      std::string out;
      if (pipe) {
        char buf[4096];
        while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
        pclose(pipe);
      }
      return out;
    };
    std::string first = run(c);
    std::string second = run(c);
    if (first.empty() || first != second) ok = false;
  }
  report(12, "repeated seeded runs produce byte-identical output", ok, "");
}

}  // namespace

int main() {
  c1_closed_forms();
  c2_boundary_continuity();
  c3_lemA_cross_check();
  c4_counting_bounds();
  c5_independent_estimator();
  c6_convergence_of_samples();
  c7_threshold_diagnostic();
  c8_moran_monotone();
  c9_t4_mechanism();
  c10_product_decay();
  c11_axioms();
  c12_cli_determinism();
  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
