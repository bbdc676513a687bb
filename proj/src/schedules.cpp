#include "gaussdim/schedules.hpp"

#include <cmath>

#include "gaussdim/numeric.hpp"

namespace gaussdim {

EpsilonPolicy EpsilonPolicy::fixed(double eps) {
  if (eps <= 0.0) throw std::domain_error("EpsilonPolicy: eps must be positive");
  EpsilonPolicy p;
  p.fixed_ = true;
  p.eps_ = eps;
  p.label_ = "fixed:" + std::to_string(eps);
  return p;
}

EpsilonPolicy EpsilonPolicy::vanishing_power(double rate) {
  if (rate <= 0.0) throw std::domain_error("EpsilonPolicy: rate must be positive");
  EpsilonPolicy p;
  p.fixed_ = false;
  p.seq_ = [rate](long n) { return std::pow(static_cast<double>(n), -rate); };
  p.label_ = "vanishing:n^-" + std::to_string(rate);
  return p;
}

EpsilonPolicy EpsilonPolicy::vanishing(std::function<double(long)> seq, std::string label) {
  EpsilonPolicy p;
  p.fixed_ = false;
  p.seq_ = std::move(seq);
  p.label_ = std::move(label);
  return p;
}

DigitSchedule::DigitSchedule(std::function<double(long)> log_s,
                             std::function<double(long)> log_t, long start,
                             std::string name)
    : log_s_(std::move(log_s)), log_t_(std::move(log_t)), start_(start),
      name_(std::move(name)) {
  if (start_ < 1) throw std::domain_error("DigitSchedule: start index must be >= 1");
}

DigitSchedule theorem_schedule(const Potential& p, const GrowthRate& g,
                               RegimeTag tag, const EpsilonPolicy& pol) {
  Regime actual = classify_regime(p, g);
  if (actual.tag != tag)
    throw std::domain_error("theorem_schedule: regime tag does not match the pair (got " +
                            regime_name(actual.tag) + ")");
  const double pp = p.param();
  const double gp = g.param();
  const bool upper = pol.is_fixed();
  const std::string name = regime_name(tag) + (upper ? "/upper" : "/lower");

  // fixed eps: t_n carries the 3eps/param prefactor of the covering window;
  // vanishing eps_n: the contained window with prefactor eps_n (2eps_n/b for
  // the log-power I-2a case).
  switch (tag) {
    case RegimeTag::T1_II: {
      auto ls = [pp, gp](long n) { return std::pow(gp, static_cast<double>(n)) / pp; };
      auto lt = [=](long n) {
        double coef = upper ? std::log(3.0 * pol.at(n) / pp) : std::log(pol.at(n));
        return ls(n) + coef;
      };
      return DigitSchedule(ls, lt, 1, name);
    }
    case RegimeTag::T1_I2: {
      double alpha = gp;
      if (alpha >= 1.0) {  // I-2b
        auto ls = [pp, alpha](long n) { return std::pow(static_cast<double>(n), alpha) / pp; };
        auto lt = [=](long n) {
          double coef = upper ? std::log(3.0 * pol.at(n) / pp) : std::log(pol.at(n));
          return ls(n) + coef;
        };
        return DigitSchedule(ls, lt, 1, name);
      }
      // I-2a: only the contained window is a digit schedule
      if (upper)
        throw std::domain_error(
            "theorem_schedule: the I-2a covering bound is a product of window "
            "counts, not a digit schedule; see product_g_diagnostic");
      auto ls = [pp, alpha](long n) {
        double nn = static_cast<double>(n);
        return (std::pow(nn, alpha) + std::log(alpha) + (alpha - 1.0) * std::log(nn)) / pp;
      };
      auto lt = [=](long n) { return ls(n) + std::log(pol.at(n) / pp); };
      return DigitSchedule(ls, lt, 1, name);
    }
    case RegimeTag::T2_II: {
      double b = pp;
      auto ls = [b, gp](long n) { return std::pow(gp, static_cast<double>(n) / b); };
      auto lt = [=](long n) {
        double base = ls(n) + static_cast<double>(n) * (1.0 / b - 1.0) * std::log(gp);
        double coef = upper ? std::log(3.0 * pol.at(n) / b) : std::log(pol.at(n));
        return base + coef;
      };
      return DigitSchedule(ls, lt, 1, name);
    }
    case RegimeTag::T2_I2: {
      double b = pp, alpha = gp;
      if (alpha >= 1.0) {  // I-2b
        auto ls = [b, alpha](long n) {
          return std::exp((alpha / b) * std::log(static_cast<double>(n)));
        };
        auto lt = [=](long n) {
          double base = ls(n) + alpha * (1.0 / b - 1.0) * std::log(static_cast<double>(n));
          double coef = upper ? std::log(3.0 * pol.at(n) / b) : std::log(pol.at(n));
          return base + coef;
        };
        return DigitSchedule(ls, lt, 1, name);
      }
      if (upper)
        throw std::domain_error(
            "theorem_schedule: the I-2a covering bound is a product of window "
            "counts, not a digit schedule; see product_g_diagnostic");
      auto ls = [b, alpha](long n) {
        double nn = static_cast<double>(n);
        double inner = std::pow(nn, alpha) + std::log(alpha) + (alpha - 1.0) * std::log(nn);
        return std::pow(inner, 1.0 / b);
      };
      auto lt = [=](long n) {
        return ls(n) + alpha * (1.0 / b - 1.0) * std::log(static_cast<double>(n)) +
               std::log(2.0 * pol.at(n) / b);
      };
      return DigitSchedule(ls, lt, 1, name);
    }
    case RegimeTag::T3_I2: {
      double c = pp, alpha = gp;
      auto ls = [c, alpha](long n) { return (alpha / c) * std::log(static_cast<double>(n)); };
      auto lt = [=](long n) {
        double base = alpha * (1.0 / c - 1.0) * std::log(static_cast<double>(n));
        double coef = upper ? std::log(3.0 * pol.at(n) / c) : std::log(pol.at(n));
        return base + coef;
      };
      return DigitSchedule(ls, lt, 1, name);
    }
    case RegimeTag::T3_II: {
      double c = pp;
      auto ls = [c, gp](long n) { return (static_cast<double>(n) / c) * std::log(gp); };
      auto lt = [=](long n) {
        double base = static_cast<double>(n) * (1.0 / c - 1.0) * std::log(gp);
        double coef = upper ? std::log(3.0 * pol.at(n) / c) : std::log(pol.at(n));
        return base + coef;
      };
      return DigitSchedule(ls, lt, 1, name);
    }
    case RegimeTag::T3_III: {
      double c = pp;
      auto ls = [c, gp](long n) { return std::pow(gp, static_cast<double>(n)) / c; };
      auto lt = [=](long n) {
        double base = std::pow(gp, static_cast<double>(n)) * (1.0 / c - 1.0);
        double coef = upper ? std::log(3.0 * pol.at(n) / c) : std::log(pol.at(n));
        return base + coef;
      };
      return DigitSchedule(ls, lt, 1, name);
    }
    default:
      throw std::domain_error("theorem_schedule: no digit-window construction for " +
                              regime_name(tag));
  }
}

DigitSchedule geometric_schedule(double s0, double sr, double t0, double tr) {
  if (s0 <= 0 || sr <= 1 || t0 <= 0 || tr <= 1)
    throw std::domain_error("geometric_schedule: requires s0,t0 > 0 and ratios > 1");
  auto ls = [s0, sr](long n) { return std::log(s0) + static_cast<double>(n) * std::log(sr); };
  auto lt = [t0, tr](long n) { return std::log(t0) + static_cast<double>(n) * std::log(tr); };
  return DigitSchedule(ls, lt, 1, "geometric");
}

DigitSchedule benchmark_schedule() {
  auto ls = [](long n) { return std::log(10.0) + static_cast<double>(n) * std::log(2.0); };
  auto lt = [](long n) { return std::log(10.0) + static_cast<double>(n - 1) * std::log(2.0); };
  return DigitSchedule(ls, lt, 1, "benchmark");
}

ScheduleDiagnostics schedule_diagnostics(const DigitSchedule& sched, long n_max) {
  ScheduleDiagnostics diag;
  double prev_s = -kInf;
  for (long n = sched.start(); n <= n_max; ++n) {
    double ls = sched.log_s(n), lt = sched.log_t(n);
    if (lt >= ls) diag.t_below_s = false;
    if (ls <= prev_s) diag.s_increasing = false;
    prev_s = ls;
    double gap = -std::expm1(lt - ls);  // 1 - t/s
    diag.min_gap_fraction = std::min(diag.min_gap_fraction, gap);
  }
  return diag;
}

SamplePoint sample_word(const DigitSchedule& sched, int depth, std::uint64_t seed) {
  if (depth < 1) throw std::domain_error("sample_word: depth must be >= 1");
  SamplePoint pt;
  pt.seed = seed;
  pt.log_digits.reserve(static_cast<std::size_t>(depth));
  bool exact_run = true;
  const double log_limit = std::log(static_cast<double>(kMaterializeDigitLimit));
  for (long n = 1; n <= depth; ++n) {
    if (n < sched.start()) {
      pt.log_digits.push_back(0.0);
      if (exact_run) pt.exact_prefix.push_back(1);
      continue;
    }
    double ls = sched.log_s(n), lt = sched.log_t(n);
    double log_hi = log_add_exp(ls, lt);
    if (log_hi < log_limit) {
      double s = std::exp(ls), t = std::exp(lt);
      std::uint64_t lo = s - t < 1.0 ? 1
                                     : static_cast<std::uint64_t>(std::ceil(s - t));
      std::uint64_t hi = static_cast<std::uint64_t>(std::floor(s + t));
      if (hi < lo) {
        // window narrower than one integer: collapse to the center digit
        std::uint64_t a = static_cast<std::uint64_t>(std::llround(s));
        lo = hi = a < 1 ? 1 : a;
      }
      std::uint64_t a = uniform_integer(seed, static_cast<std::uint64_t>(n), lo, hi);
      pt.log_digits.push_back(std::log(static_cast<double>(a)));
      if (exact_run) pt.exact_prefix.push_back(a);
    } else {
      exact_run = false;
      double u = 2.0 * uniform_unit(seed, static_cast<std::uint64_t>(n)) - 1.0;
      double tau = std::exp(lt - ls);  // t/s
      pt.log_digits.push_back(ls + std::log1p(u * tau));
    }
  }
  return pt;
}

std::vector<double> diagnostic_log_digits(const Potential& p, const GrowthRate& g,
                                          int depth) {
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(depth));
  for (long n = 1; n <= depth; ++n) {
    double log_inc;
    if (n == 1) {
      LogScaleValue g1 = log_growth(g, 1);  // phi(a_1) = Phi(1)
      if (g1.scale != LogScale::Log)
        throw ScaleOverflowError("diagnostic_log_digits: Phi(1) beyond Log scale");
      log_inc = g1.value;
    } else {
      IncrementLog inc = growth_increment_log(g, n);
      if (inc.value.scale != LogScale::Log)
        throw ScaleOverflowError("diagnostic_log_digits: increment beyond Log scale");
      log_inc = inc.value.value;
    }
    logs.push_back(log_phi_inverse(p, log_inc));
  }
  return logs;
}

namespace {

// log log phi(j) from log j; -inf when phi(j) = 1
double log_log_phi(const Potential& p, double log_j) {
  switch (p.kind()) {
    case PotentialKind::PowerLaw:
      return log_j > 0.0 ? std::log(p.param()) + std::log(log_j) : -kInf;
    case PotentialKind::LogPower:
      return log_j > 0.0 ? p.param() * std::log(log_j) : -kInf;
    default:
      return p.param() * log_j;
  }
}

}  // namespace

ConvergenceProfile convergence_profile_logs(const Potential& p, const GrowthRate& g,
                                            std::span<const double> log_digits) {
  ConvergenceProfile prof;
  const int depth = static_cast<int>(log_digits.size());
  if (depth < 1) throw std::domain_error("convergence_profile: empty digit sequence");

  // work at LogLog scale as soon as either side leaves the double range
  double max_loglog_phi = -kInf;
  for (double lj : log_digits)
    max_loglog_phi = std::max(max_loglog_phi, log_log_phi(p, lj));
  bool loglog = max_loglog_phi > kLogDoubleMax ||
                log_growth(g, depth).scale == LogScale::LogLog;
  prof.scale = loglog ? LogScale::LogLog : LogScale::Log;
  prof.approximate = loglog;

  double running = -kInf;  // log S_n (Log mode) or log log of the max term
  for (long n = 1; n <= depth; ++n) {
    double lj = log_digits[static_cast<std::size_t>(n - 1)];
    double dev;
    if (!loglog) {
      running = log_add_exp(running, log_phi(p, lj));
      dev = running - log_growth(g, n).value;
    } else {
      // the sum is dominated by its largest term at this scale
      running = std::max(running, log_log_phi(p, lj));
      dev = running - log_log_growth(g, n);
    }
    prof.deviations.push_back(dev);
  }
  int tail_from = depth - std::max(1, depth / 4);
  for (int n = tail_from; n < depth; ++n)
    prof.max_abs_tail = std::max(prof.max_abs_tail,
                                 std::abs(prof.deviations[static_cast<std::size_t>(n)]));
  return prof;
}

ConvergenceProfile convergence_profile(const Potential& p, const GrowthRate& g,
                                       const SamplePoint& point, int depth) {
  if (static_cast<int>(point.log_digits.size()) < depth)
    throw std::domain_error("convergence_profile: point has fewer digits than depth");
  return convergence_profile_logs(
      p, g, std::span<const double>(point.log_digits.data(), static_cast<std::size_t>(depth)));
}

EmSpec::EmSpec(const Potential& p, const GrowthRate& g, int M, double eps)
    : potential_(p), growth_(g), m_(M), eps_(eps) {
  if (g.kind() != GrowthKind::PolyExp)
    throw std::domain_error("em_spec: positions are defined for the e^{n^alpha} growth only");
  if (M < 1) throw std::domain_error("em_spec: M must be >= 1");
  if (eps <= 0.0 || eps >= 1.0) throw std::domain_error("em_spec: eps must be in (0,1)");
  exponent_ = (1.0 / g.param()) * (1.0 - eps);
  if (exponent_ <= 1.0)
    throw std::domain_error(
        "em_spec: position exponent (1/alpha)(1-eps) = " + std::to_string(exponent_) +
        " <= 1, so n_k/k cannot diverge");
}

std::vector<long> EmSpec::positions(int k_max) const {
  std::vector<long> nk;
  nk.reserve(static_cast<std::size_t>(k_max));
  long prev = 0;
  for (int k = 1; k <= k_max; ++k) {
    long v = std::llround(std::pow(static_cast<double>(k), exponent_));
    if (v <= prev) v = prev + 1;  // forward bump on rounding collisions
    nk.push_back(v);
    prev = v;
  }
  return nk;
}

double EmSpec::log_u(long n_k, long n_prev) const {
  IncrementLog inc = growth_increment_log(growth_, n_k, n_prev);
  if (inc.value.scale != LogScale::Log)
    throw ScaleOverflowError("em_spec: increment beyond Log scale");
  double lu = log_phi_inverse(potential_, inc.value.value);
  return std::max(0.0, lu);  // digits are at least 1
}

EmSpec em_spec(const Potential& p, const GrowthRate& g, int M, double eps) {
  return EmSpec(p, g, M, eps);
}

std::string verdict_name(TrendVerdict v) {
  switch (v) {
    case TrendVerdict::Vanishing: return "VANISHING";
    case TrendVerdict::Diverging: return "DIVERGING";
    default: return "INCONCLUSIVE";
  }
}

UsefDiagnostic usef_diagnostic(const EmSpec& spec, int k_max) {
  if (k_max < 2) throw std::domain_error("usef_diagnostic: k_max must be >= 2");
  UsefDiagnostic diag;
  std::vector<long> nk = spec.positions(k_max);
  double acc = 0.0;
  long prev = 0;
  for (int k = 1; k <= k_max; ++k) {
    acc += spec.log_u(nk[static_cast<std::size_t>(k - 1)], prev);
    prev = nk[static_cast<std::size_t>(k - 1)];
    diag.ratios.push_back(acc / static_cast<double>(prev));
  }
  if (k_max < 8) return diag;  // insufficient data

  // least-squares slope of log r_k against log k over the last half
  int from = k_max / 2;
  double mx = 0.0, my = 0.0;
  int cnt = 0;
  for (int k = from; k <= k_max; ++k) {
    double r = diag.ratios[static_cast<std::size_t>(k - 1)];
    if (r <= 0.0) return diag;
    mx += std::log(static_cast<double>(k));
    my += std::log(r);
    ++cnt;
  }
  mx /= cnt;
  my /= cnt;
  double sxx = 0.0, sxy = 0.0;
  for (int k = from; k <= k_max; ++k) {
    double x = std::log(static_cast<double>(k)) - mx;
    double y = std::log(diag.ratios[static_cast<std::size_t>(k - 1)]) - my;
    sxx += x * x;
    sxy += x * y;
  }
  diag.tail_slope = sxy / sxx;
  double r_end = diag.ratios[static_cast<std::size_t>(k_max - 1)];
  double r_mid = diag.ratios[static_cast<std::size_t>(from - 1)];
  if (diag.tail_slope < -0.05 && r_end < r_mid)
    diag.verdict = TrendVerdict::Vanishing;
  else if (diag.tail_slope > 0.05 && r_end > r_mid)
    diag.verdict = TrendVerdict::Diverging;
  return diag;
}

long t4_window_count(const Potential& p, const GrowthRate& g, long n, double eps) {
  if (p.kind() != PotentialKind::StretchedExp || p.param() < 1.0)
    throw std::domain_error("t4_window_count: requires the e^{j^c} potential with c >= 1");
  if (g.kind() != GrowthKind::PolyExp || g.param() < 1.0)
    throw std::domain_error("t4_window_count: requires e^{n^alpha} growth with alpha >= 1");
  if (eps <= 0.0 || eps >= 0.25)
    throw std::domain_error("t4_window_count: requires eps in (0, 1/4)");
  double c = p.param();
  double na = std::pow(static_cast<double>(n), g.param());
  double lo_t = na + std::log1p(-2.0 * eps);  // log of (1-2eps) e^{n^alpha}
  double hi_t = na + std::log1p(eps);
  // phi(j) in window  <=>  j in [lo_t^{1/c}, hi_t^{1/c}]
  if (hi_t < 0.0) return 0;
  double lo_j = lo_t <= 0.0 ? 1.0 : std::pow(lo_t, 1.0 / c);
  double hi_j = std::pow(hi_t, 1.0 / c);
  long lo = static_cast<long>(std::ceil(lo_j));
  long hi = static_cast<long>(std::floor(hi_j));
  if (lo < 1) lo = 1;
  return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace gaussdim
