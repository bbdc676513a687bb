#include "gaussdim/covering.hpp"

#include <algorithm>
#include <cmath>

#include "gaussdim/counting.hpp"
#include "gaussdim/numeric.hpp"

namespace gaussdim {

namespace {

struct LevelWindow {
  double log_lo;  // log max(1, s_n - t_n)
  double log_hi;  // log (s_n + t_n)
  bool exact;     // endpoints below the exact-summation limit
};

LevelWindow window_at(const DigitSchedule& sched, long n) {
  double ls = sched.log_s(n), lt = sched.log_t(n);
  double log_hi = log_add_exp(ls, lt);
  double log_lo;
  if (lt >= ls) {
    log_lo = 0.0;  // window reaches digit 1
  } else {
    log_lo = ls + log1m_exp(lt - ls);
    if (log_lo < 0.0) log_lo = 0.0;
  }
  return LevelWindow{log_lo, log_hi, log_hi < std::log(kExactWindowLimit)};
}

// log sum_{a in window} a^{-p} with half-integer endpoint correction
double window_power_sum_log_impl(const LevelWindow& w, double p) {
  if (w.exact) {
    // one-ulp guard against log/exp roundtrip landing just past an integer
    double vlo = std::exp(w.log_lo), vhi = std::exp(w.log_hi);
    std::uint64_t lo = static_cast<std::uint64_t>(std::ceil(vlo * (1.0 - 4e-16)));
    std::uint64_t hi = static_cast<std::uint64_t>(std::floor(vhi * (1.0 + 4e-16)));
    if (lo < 1) lo = 1;
    if (hi < lo) return -kInf;
    double acc = 0.0;
    for (std::uint64_t a = lo; a <= hi; ++a)
      acc += std::pow(static_cast<double>(a), -p);
    return std::log(acc);
  }
  // integral of x^{-p} over the half-integer hull of the digit range
  double llo, lhi;
  if (w.log_hi < 36.0) {  // endpoints still hold integers exactly
    double vlo = std::ceil(std::exp(w.log_lo) * (1.0 - 4e-16));
    double vhi = std::floor(std::exp(w.log_hi) * (1.0 + 4e-16));
    if (vlo < 1.0) vlo = 1.0;
    if (vhi < vlo) return -kInf;
    llo = std::log(vlo - 0.5);
    lhi = std::log(vhi + 0.5);
  } else {
    llo = w.log_lo + std::log1p(-0.5 * std::exp(-w.log_lo));
    lhi = w.log_hi + std::log1p(0.5 * std::exp(-w.log_hi));
  }
  double e = 1.0 - p;
  if (std::abs(e) < 1e-14) return std::log(lhi - llo);
  if (e < 0.0) return e * llo + log1m_exp(e * (lhi - llo)) - std::log(-e);
  return e * lhi + log1m_exp(e * (llo - lhi)) - std::log(e);
}

struct LevelSums {
  double weighted;  // log sum (a^-d/zeta)^s over the window
  double measure;   // log sum a^-d/zeta over the window (next-level refinement)
  InnerSumMethod method;
};

LevelSums affine_level(const DigitSchedule& sched, long n, double d, double s,
                       double log_zeta) {
  LevelWindow w = window_at(sched, n);
  LevelSums out{};
  out.method = w.exact ? InnerSumMethod::Exact : InnerSumMethod::Integral;
  out.weighted = window_power_sum_log_impl(w, d * s) - s * log_zeta;
  out.measure = window_power_sum_log_impl(w, d) - log_zeta;
  return out;
}

CoverReport cover_impl(const IfsSystem& system, const DigitSchedule& sched, int n,
                       double s, bool parallel) {
  if (system.kind() != SystemKind::AffinePowerLaw)
    throw std::domain_error(
        "covering_log_sum: single-valued sums exist for the affine system only; "
        "use covering_log_sum_bounds");
  if (n < 1) throw std::domain_error("covering_log_sum: depth must be >= 1");
  if (s <= 0.0 || s > 2.0) throw std::domain_error("covering_log_sum: s must be in (0,2]");
  const double d = system.decay();
  const double log_zeta = std::log(system.zeta_d());

  std::vector<LevelSums> levels(static_cast<std::size_t>(n + 1));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 1; i <= n + 1; ++i)
    levels[static_cast<std::size_t>(i - 1)] = affine_level(sched, i, d, s, log_zeta);

  CoverReport rep;
  rep.depth = n;
  rep.s = s;
  double acc = 0.0;
  for (int i = 1; i <= n; ++i) {
    acc += levels[static_cast<std::size_t>(i - 1)].weighted;
    rep.methods.push_back(levels[static_cast<std::size_t>(i - 1)].method);
  }
  rep.log_sum = acc;
  rep.log_sum_refined = acc + s * levels[static_cast<std::size_t>(n)].measure;
  rep.methods.push_back(levels[static_cast<std::size_t>(n)].method);
  return rep;
}

}  // namespace

double window_power_sum_log(double log_lo, double log_hi, double p, bool exact) {
  if (log_hi < log_lo) throw std::domain_error("window_power_sum_log: empty window");
  return window_power_sum_log_impl(LevelWindow{log_lo, log_hi, exact}, p);
}

CoverReport covering_log_sum(const IfsSystem& system, const DigitSchedule& sched,
                             int n, double s) {
  return cover_impl(system, sched, n, s, true);
}

CoverReport covering_log_sum_serial(const IfsSystem& system, const DigitSchedule& sched,
                                    int n, double s) {
  return cover_impl(system, sched, n, s, false);
}

CoverBounds covering_log_sum_bounds(const IfsSystem& system, const DigitSchedule& sched,
                                    int n, double s) {
  if (system.kind() != SystemKind::MirroredGaussCf)
    throw std::domain_error("covering_log_sum_bounds: mirrored system only");
  if (n < 1) throw std::domain_error("covering_log_sum_bounds: depth must be >= 1");
  if (s <= 0.0 || s > 2.0)
    throw std::domain_error("covering_log_sum_bounds: s must be in (0,2]");

  // |I_1(a)| lies in [(a+1)^-2, a^-2]; shifting the window index by one digit
  // converts the xi-sum into a plain power sum
  CoverBounds cb;
  cb.lower.depth = cb.upper.depth = n;
  cb.lower.s = cb.upper.s = s;
  double acc_lo = 0.0, acc_hi = 0.0;
  for (int i = 1; i <= n; ++i) {
    LevelWindow w = window_at(sched, i);
    // upper: sum a^{-2s}; lower: sum (a+1)^{-2s} over the same digit window
    double up = window_power_sum_log_impl(w, 2.0 * s);
    LevelWindow wshift{log_add_exp(w.log_lo, 0.0), log_add_exp(w.log_hi, 0.0), w.exact};
    double lo = window_power_sum_log_impl(wshift, 2.0 * s);
    acc_lo += lo;
    acc_hi += up;
    cb.lower.methods.push_back(w.exact ? InnerSumMethod::Exact : InnerSumMethod::Integral);
  }
  cb.upper.methods = cb.lower.methods;
  LevelWindow wn = window_at(sched, n + 1);
  LevelWindow wns{log_add_exp(wn.log_lo, 0.0), log_add_exp(wn.log_hi, 0.0), wn.exact};
  cb.lower.log_sum = acc_lo;
  cb.upper.log_sum = acc_hi;
  cb.lower.log_sum_refined = acc_lo + s * window_power_sum_log_impl(wns, 2.0);
  cb.upper.log_sum_refined = acc_hi + s * window_power_sum_log_impl(wn, 2.0);
  return cb;
}

RootResult dimension_root(const IfsSystem& system, const DigitSchedule& sched,
                          int n, double tol) {
  if (tol <= 0.0) throw std::domain_error("dimension_root: tol must be positive");
  double lo = 0.01, hi = 1.5;
  auto f = [&](double s) { return covering_log_sum(system, sched, n, s).log_sum_refined; };
  double flo = f(lo), fhi = f(hi);
  if (!(flo > 0.0 && fhi < 0.0))
    throw BracketError("dimension_root: covering sum does not change sign on (0.01, 1.5)",
                       flo, fhi);
  RootResult res;
  res.bracket_history.emplace_back(lo, hi);
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    ++res.iterations;
    res.bracket_history.emplace_back(lo, hi);
    if (res.iterations > 200) break;
  }
  res.root = 0.5 * (lo + hi);
  res.above_one = res.root > 1.0;
  return res;
}

LocalDimProfile local_dimension_profile(const IfsSystem& system,
                                        const DigitSchedule& sched,
                                        std::uint64_t seed, int depth) {
  if (depth < 4) throw std::domain_error("local_dimension_profile: depth must be >= 4");
  if (system.kind() != SystemKind::AffinePowerLaw)
    throw std::domain_error("local_dimension_profile: affine system only");
  const double d = system.decay();
  const double log_zeta = std::log(system.zeta_d());

  SamplePoint pt = sample_word(sched, depth + 1, seed);
  LocalDimProfile prof;
  double log_mu = 0.0;
  double log_r_base = 0.0;
  for (int n = 1; n <= depth; ++n) {
    LevelWindow w = window_at(sched, n);
    double log_count;
    if (w.exact) {
      std::uint64_t lo = static_cast<std::uint64_t>(std::ceil(std::exp(w.log_lo)));
      std::uint64_t hi = static_cast<std::uint64_t>(std::floor(std::exp(w.log_hi)));
      if (lo < 1) lo = 1;
      if (hi < lo) {
        prof.degenerate = true;
        log_count = 0.0;  // single forced digit carries no mass split
      } else if (hi == lo) {
        prof.degenerate = true;
        log_count = 0.0;
      } else {
        log_count = std::log(static_cast<double>(hi - lo + 1));
      }
    } else {
      // window width 2 t_n at log scale
      log_count = std::log(2.0) + sched.log_t(n);
    }
    log_mu -= log_count;
    // digit contribution to the cylinder diameter
    double la = pt.log_digits[static_cast<std::size_t>(n - 1)];
    log_r_base += -d * la - log_zeta;
    // refine by the measure of the next window
    LevelWindow wn = window_at(sched, n + 1);
    double log_r = log_r_base + window_power_sum_log_impl(wn, d) - log_zeta;
    prof.log_mu.push_back(log_mu);
    prof.log_r.push_back(log_r);
    prof.slope.push_back(log_mu == 0.0 ? 0.0 : log_mu / log_r);
  }
  if (prof.degenerate) {
    for (auto& s : prof.slope) s = 0.0;
  }
  return prof;
}

std::string decay_verdict_name(DecayVerdict v) {
  switch (v) {
    case DecayVerdict::Decays: return "DECAYS";
    case DecayVerdict::Grows: return "GROWS";
    default: return "INCONCLUSIVE";
  }
}

ProductGDiagnostic product_g_diagnostic(double eps, int k_max, double a, double d,
                                        double s, double alpha) {
  if (alpha <= 0.5)
    throw std::domain_error("product_g_diagnostic: requires alpha > 1/2");
  if (s * d <= 1.0)
    throw std::domain_error("product_g_diagnostic: requires s > 1/d");
  if (eps <= 0.0 || eps > 1.0 / 3.0)
    throw std::domain_error("product_g_diagnostic: requires eps in (0, 1/3]");
  if (k_max < 4) throw std::domain_error("product_g_diagnostic: k_max must be >= 4");

  const double ds = d * s;
  const BoundConstants bc = bound_constants(a, ds);
  const double log_k2 = -std::log(zeta_value(d));  // affine model constant
  const double log_c1 = std::log(bc.c1);
  const double log_c2 = std::log(bc.c2);
  // m(k) = (1 - eps/5) e^k - (1 + eps/5) e^{k-1} = const * e^k
  const double m_shift = std::log((1.0 - eps / 5.0) - (1.0 + eps / 5.0) / std::exp(1.0));

  ProductGDiagnostic diag;
  double cum = 0.0;
  double n_prev = 1.0;  // n_0 = 1
  for (int k = 1; k <= k_max; ++k) {
    ProductGRow row;
    row.k = k;
    row.n_k = std::pow(static_cast<double>(k), 1.0 / alpha);
    row.block_len = row.n_k - n_prev;
    row.log_m = static_cast<double>(k) + m_shift;
    if (row.block_len >= 1.0) {
      // window admits some eps < 1/3 iff C3 (m 3^{2-n})^{-1/a} < 1/3
      double lower = bc.c3 * std::exp((-1.0 / a) *
                                      (row.log_m + (2.0 - row.block_len) * std::log(3.0)));
      row.valid = lower < 1.0 / 3.0;
      cum += log_c1 + (row.block_len - 1.0) * log_c2 + std::log(eps) +
             ((1.0 - ds) / a) * row.log_m;
    }
    row.log_bound = s * row.n_k * log_k2 + cum;
    if (row.valid && diag.first_valid_k < 0) diag.first_valid_k = k;
    diag.rows.push_back(row);
    n_prev = row.n_k;
  }

  if (diag.first_valid_k < 0) return diag;  // nothing to judge
  // trend over the valid suffix
  int from = diag.first_valid_k;
  int arg = from;
  for (int k = from; k <= k_max; ++k)
    if (diag.rows[static_cast<std::size_t>(k - 1)].log_bound >
        diag.rows[static_cast<std::size_t>(arg - 1)].log_bound)
      arg = k;
  diag.argmax_k = arg;
  bool strictly_dec = arg <= k_max - 2;
  for (int k = arg; strictly_dec && k < k_max; ++k)
    if (!(diag.rows[static_cast<std::size_t>(k)].log_bound <
          diag.rows[static_cast<std::size_t>(k - 1)].log_bound))
      strictly_dec = false;
  if (strictly_dec)
    diag.verdict = DecayVerdict::Decays;
  else if (arg == k_max)
    diag.verdict = DecayVerdict::Grows;
  return diag;
}

}  // namespace gaussdim
