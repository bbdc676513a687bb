#ifndef GAUSSDIM_POTENTIALS_HPP
#define GAUSSDIM_POTENTIALS_HPP

#include <span>
#include <stdexcept>
#include <string>

namespace gaussdim {

enum class PotentialKind { PowerLaw, LogPower, StretchedExp };

/// phi(j) = j^a | e^{(log j)^b} | e^{j^c}, evaluated in log scale throughout.
class Potential {
 public:
  static Potential power_law(double a);      // a > 0
  static Potential log_power(double b);      // b > 1
  static Potential stretched_exp(double c);  // c > 0

  PotentialKind kind() const { return kind_; }
  double param() const { return param_; }
  std::string name() const;

 private:
  Potential(PotentialKind k, double p) : kind_(k), param_(p) {}
  PotentialKind kind_;
  double param_;
};

enum class GrowthKind { PolyExp, SuperExp, DoubleExp };

/// Phi(n) = e^{n^alpha} | e^{beta^n} | e^{e^{gamma^n}}.
class GrowthRate {
 public:
  static GrowthRate poly_exp(double alpha);   // alpha > 0
  static GrowthRate super_exp(double beta);   // beta > 1
  static GrowthRate double_exp(double gamma); // gamma > 1

  GrowthKind kind() const { return kind_; }
  double param() const { return param_; }
  std::string name() const;

 private:
  GrowthRate(GrowthKind k, double p) : kind_(k), param_(p) {}
  GrowthKind kind_;
  double param_;
};

enum class LogScale { Log, LogLog };

/// A number stored as log x (Log) or log log x (LogLog).  LogLog is used
/// only when log x itself would overflow the double range.
struct LogScaleValue {
  double value;
  LogScale scale;
};

class ScaleOverflowError : public std::runtime_error {
 public:
  explicit ScaleOverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// log phi(j) from log j.
double log_phi(const Potential& p, double log_j);

/// log of the real j solving phi(j) = y, from log y.
double log_phi_inverse(const Potential& p, double log_y);

/// log Phi(n), switching to LogLog exactly when log Phi overflows.
LogScaleValue log_growth(const GrowthRate& g, long n);

/// log log Phi(n) as a plain double.
double log_log_growth(const GrowthRate& g, long n);

struct IncrementLog {
  LogScaleValue value;
  bool approximate;  // set when the subtrahend is indistinguishable at scale
};

/// log(Phi(n) - Phi(n-1)), stable against cancellation.
IncrementLog growth_increment_log(const GrowthRate& g, long n);

/// log(Phi(n_hi) - Phi(n_lo)) along a subsequence; n_lo = 0 means Phi = 1.
IncrementLog growth_increment_log(const GrowthRate& g, long n_hi, long n_lo);

/// log S_n phi = log sum_j phi(a_j) over log digits.
double birkhoff_log_sum(const Potential& p, std::span<const double> log_digits);

}  // namespace gaussdim

#endif
