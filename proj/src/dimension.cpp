#include "gaussdim/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "gaussdim/counting.hpp"
#include "gaussdim/numeric.hpp"

namespace gaussdim {

std::string regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::T1_I1: return "T1-I1";
    case RegimeTag::T1_I2: return "T1-I2";
    case RegimeTag::T1_II: return "T1-II";
    case RegimeTag::T2_I1: return "T2-I1";
    case RegimeTag::T2_I2: return "T2-I2";
    case RegimeTag::T2_II: return "T2-II";
    case RegimeTag::T3_I1: return "T3-I1";
    case RegimeTag::T3_I2: return "T3-I2";
    case RegimeTag::T3_II: return "T3-II";
    case RegimeTag::T3_III: return "T3-III";
    case RegimeTag::T4_I1: return "T4-I1";
    case RegimeTag::T4_I2: return "T4-I2";
    case RegimeTag::Critical: return "CRITICAL";
    default: return "UNCOVERED";
  }
}

Regime classify_regime(const Potential& p, const GrowthRate& g) {
  const double alpha = g.param();
  switch (p.kind()) {
    case PotentialKind::PowerLaw:
      switch (g.kind()) {
        case GrowthKind::PolyExp:
          if (alpha < 0.5) return {RegimeTag::T1_I1, 0.5};
          if (alpha > 0.5) return {RegimeTag::T1_I2, 0.5};
          return {RegimeTag::Critical, 0.5};
        case GrowthKind::SuperExp: return {RegimeTag::T1_II, std::nullopt};
        default: return {RegimeTag::Uncovered, std::nullopt};
      }
    case PotentialKind::LogPower: {
      double thr = p.param() / (p.param() + 1.0);
      switch (g.kind()) {
        case GrowthKind::PolyExp:
          if (alpha < thr) return {RegimeTag::T2_I1, thr};
          if (alpha > thr) return {RegimeTag::T2_I2, thr};
          return {RegimeTag::Critical, thr};
        case GrowthKind::SuperExp: return {RegimeTag::T2_II, std::nullopt};
        default: return {RegimeTag::Uncovered, std::nullopt};
      }
    }
    default: {
      if (p.param() < 1.0) {
        switch (g.kind()) {
          case GrowthKind::PolyExp:
            if (alpha < 1.0) return {RegimeTag::T3_I1, 1.0};
            if (alpha > 1.0) return {RegimeTag::T3_I2, 1.0};
            return {RegimeTag::Critical, 1.0};
          case GrowthKind::SuperExp: return {RegimeTag::T3_II, std::nullopt};
          default: return {RegimeTag::T3_III, std::nullopt};
        }
      }
      // c >= 1: covered for e^{n^alpha} growth only, with alpha = 1 inside I-2
      if (g.kind() != GrowthKind::PolyExp) return {RegimeTag::Uncovered, std::nullopt};
      if (alpha < 1.0) return {RegimeTag::T4_I1, 1.0};
      return {RegimeTag::T4_I2, 1.0};
    }
  }
}

DimensionResult closed_form_dimension(const Potential& p, const GrowthRate& g, double d) {
  if (d <= 1.0) throw std::domain_error("closed_form_dimension: requires d > 1");
  Regime regime = classify_regime(p, g);
  DimensionResult res{std::nullopt, regime, "", false};
  const double c = p.param();
  const double gp = g.param();
  switch (regime.tag) {
    case RegimeTag::T1_I1:
    case RegimeTag::T2_I1:
    case RegimeTag::T3_I1:
    case RegimeTag::T4_I1:
      res.value = 1.0;
      res.formula = "1";
      res.requires_distortion = true;
      break;
    case RegimeTag::T1_I2:
    case RegimeTag::T2_I2:
      res.value = 1.0 / d;
      res.formula = "1/d";
      break;
    case RegimeTag::T1_II:
      res.value = 1.0 / (d * gp - gp + 1.0);
      res.formula = "1/(d*beta-beta+1)";
      break;
    case RegimeTag::T2_II: {
      double r = std::pow(gp, 1.0 / p.param());
      res.value = 1.0 / (d * r - r + 1.0);
      res.formula = "1/(d*beta^(1/b)-beta^(1/b)+1)";
      break;
    }
    case RegimeTag::T3_I2:
    case RegimeTag::T3_II:
      res.value = (1.0 - c) / d;
      res.formula = "(1-c)/d";
      break;
    case RegimeTag::T3_III:
      res.value = (1.0 - c) / (d * gp - (1.0 - c) * (gp - 1.0));
      res.formula = "(1-c)/(d*gamma-(1-c)*(gamma-1))";
      break;
    case RegimeTag::T4_I2:
      res.value = 0.0;
      res.formula = "0";
      break;
    default:
      break;  // Critical / Uncovered carry no value
  }
  return res;
}

LiminfSeries lemA_liminf(const DigitSchedule& sched, double d, int n_max) {
  if (d <= 1.0) throw std::domain_error("lemA_liminf: requires d > 1");
  if (n_max < 4) throw std::domain_error("lemA_liminf: requires n_max >= 4");
  LiminfSeries out;
  out.q.reserve(static_cast<std::size_t>(n_max));
  double num = 0.0;   // sum of clamped log t_i
  double dens = sched.log_s(1);  // running sum of log s_i up to n+1
  for (int n = 1; n <= n_max; ++n) {
    num += std::max(0.0, sched.log_t(n));
    dens += sched.log_s(n + 1);
    double den = d * dens - std::max(0.0, sched.log_t(n + 1));
    out.q.push_back(num / den);
  }
  out.tail_min = kInf;
  for (int n = n_max / 2; n <= n_max; ++n)
    out.tail_min = std::min(out.tail_min, out.q[static_cast<std::size_t>(n - 1)]);
  return out;
}

namespace {

// sum_{i<=M} w_i^s - 1 for w given as log weights; strictly decreasing in s
double moran_gap(const std::vector<double>& log_w, double s) {
  double acc = 0.0;
  for (double lw : log_w) acc += std::exp(s * lw);
  return acc - 1.0;
}

double moran_root(const std::vector<double>& log_w, double tol) {
  double lo = 1e-12, hi = 1.0;
  double flo = moran_gap(log_w, lo);
  if (flo <= 0.0) throw std::domain_error("moran root: no sign change in (0,1]");
  while (moran_gap(log_w, hi) > 0.0) {
    hi *= 2.0;
    if (hi > 64.0) throw std::domain_error("moran root: no sign change found");
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (moran_gap(log_w, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double moran_dimension(double d, int M, double tol) {
  if (d <= 1.0) throw std::domain_error("moran_dimension: requires d > 1");
  if (M < 2)
    throw std::domain_error("moran_dimension: degenerate alphabet, requires M >= 2");
  if (tol <= 0.0) throw std::domain_error("moran_dimension: tol must be positive");
  double log_zeta = std::log(zeta_value(d));
  std::vector<double> log_w;
  log_w.reserve(static_cast<std::size_t>(M));
  for (int i = 1; i <= M; ++i)
    log_w.push_back(-d * std::log(static_cast<double>(i)) - log_zeta);
  return moran_root(log_w, tol);
}

double lemdim1_lower_bound(double d, int M, double tol) {
  return std::max(0.0, 2.0 * moran_dimension(d, M, tol) - 1.0);
}

MoranBracket moran_bounds_mirrored(int M, double tol) {
  if (M < 2)
    throw std::domain_error("moran_bounds_mirrored: degenerate alphabet, requires M >= 2");
  std::vector<double> log_xi, log_lambda;
  for (int i = 1; i <= M; ++i) {
    log_xi.push_back(-2.0 * std::log(static_cast<double>(i + 1)));
    log_lambda.push_back(-2.0 * std::log(static_cast<double>(i)));
  }
  double lower = moran_root(log_xi, tol);
  // lambda_1 = 1 keeps the sum above 1 for every s, so the upper root is
  // the trivial bound 1
  double upper = moran_gap(log_lambda, 1.0) > 0.0 ? 1.0 : moran_root(log_lambda, tol);
  return MoranBracket{lower, upper};
}

}  // namespace gaussdim
