#include "gaussdim/potentials.hpp"

#include <cmath>
#include <vector>

#include "gaussdim/numeric.hpp"

namespace gaussdim {

Potential Potential::power_law(double a) {
  if (a <= 0.0) throw std::domain_error("power_law: requires a > 0");
  return Potential(PotentialKind::PowerLaw, a);
}

Potential Potential::log_power(double b) {
  if (b <= 1.0) throw std::domain_error("log_power: requires b > 1");
  return Potential(PotentialKind::LogPower, b);
}

Potential Potential::stretched_exp(double c) {
  if (c <= 0.0) throw std::domain_error("stretched_exp: requires c > 0");
  return Potential(PotentialKind::StretchedExp, c);
}

std::string Potential::name() const {
  switch (kind_) {
    case PotentialKind::PowerLaw: return "power:" + std::to_string(param_);
    case PotentialKind::LogPower: return "logpower:" + std::to_string(param_);
    default: return "stretched:" + std::to_string(param_);
  }
}

GrowthRate GrowthRate::poly_exp(double alpha) {
  if (alpha <= 0.0) throw std::domain_error("poly_exp: requires alpha > 0");
  return GrowthRate(GrowthKind::PolyExp, alpha);
}

GrowthRate GrowthRate::super_exp(double beta) {
  if (beta <= 1.0) throw std::domain_error("super_exp: requires beta > 1");
  return GrowthRate(GrowthKind::SuperExp, beta);
}

GrowthRate GrowthRate::double_exp(double gamma) {
  if (gamma <= 1.0) throw std::domain_error("double_exp: requires gamma > 1");
  return GrowthRate(GrowthKind::DoubleExp, gamma);
}

std::string GrowthRate::name() const {
  switch (kind_) {
    case GrowthKind::PolyExp: return "polyexp:" + std::to_string(param_);
    case GrowthKind::SuperExp: return "superexp:" + std::to_string(param_);
    default: return "doubleexp:" + std::to_string(param_);
  }
}

double log_phi(const Potential& p, double log_j) {
  if (log_j < 0.0) throw std::domain_error("log_phi: requires log_j >= 0");
  switch (p.kind()) {
    case PotentialKind::PowerLaw: return p.param() * log_j;
    case PotentialKind::LogPower: return std::pow(log_j, p.param());
    default: return std::exp(p.param() * log_j);
  }
}

double log_phi_inverse(const Potential& p, double log_y) {
  if (log_y < 0.0) throw std::domain_error("log_phi_inverse: requires log_y >= 0");
  switch (p.kind()) {
    case PotentialKind::PowerLaw: return log_y / p.param();
    case PotentialKind::LogPower: return std::pow(log_y, 1.0 / p.param());
    default:
      if (log_y == 0.0)
        throw std::domain_error("log_phi_inverse: phi(j)=1 has no digit j >= 1");
      return std::log(log_y) / p.param();
  }
}

double log_log_growth(const GrowthRate& g, long n) {
  if (n < 1) throw std::domain_error("log_growth: requires n >= 1");
  double nn = static_cast<double>(n);
  switch (g.kind()) {
    case GrowthKind::PolyExp: return g.param() * std::log(nn);
    case GrowthKind::SuperExp: return nn * std::log(g.param());
    default: {
      double e = nn * std::log(g.param());
      if (e > kLogDoubleMax)
        throw ScaleOverflowError(
            "log log Phi(n) = gamma^n exceeds the double range at n=" +
            std::to_string(n));
      return std::exp(e);
    }
  }
}

LogScaleValue log_growth(const GrowthRate& g, long n) {
  double ll = log_log_growth(g, n);
  if (ll <= kLogDoubleMax) return LogScaleValue{std::exp(ll), LogScale::Log};
  return LogScaleValue{ll, LogScale::LogLog};
}

IncrementLog growth_increment_log(const GrowthRate& g, long n) {
  return growth_increment_log(g, n, n - 1);
}

IncrementLog growth_increment_log(const GrowthRate& g, long n_hi, long n_lo) {
  if (n_hi < 1 || n_lo < 0 || n_lo >= n_hi)
    throw std::domain_error("growth_increment_log: requires n_hi > n_lo >= 0");
  LogScaleValue hi = log_growth(g, n_hi);
  if (hi.scale == LogScale::Log) {
    // Phi increases, so Phi(n_lo) is representable at Log scale as well
    double log_phi_lo = n_lo == 0 ? 0.0 : log_growth(g, n_lo).value;
    double delta = hi.value - log_phi_lo;
    if (!(delta > 0.0))
      throw std::domain_error("growth_increment_log: Phi must increase");
    return IncrementLog{LogScaleValue{hi.value + log1m_exp(-delta), LogScale::Log}, false};
  }
  // At LogLog scale the subtrahend is below resolution; return log Phi(n_hi)
  // with the approximation bit set.
  return IncrementLog{hi, true};
}

double birkhoff_log_sum(const Potential& p, std::span<const double> log_digits) {
  if (log_digits.empty())
    throw std::domain_error("birkhoff_log_sum: empty digit sequence");
  std::vector<double> terms;
  terms.reserve(log_digits.size());
  for (double lj : log_digits) terms.push_back(log_phi(p, lj));
  return log_sum_exp(terms);
}

}  // namespace gaussdim
