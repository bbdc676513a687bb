#ifndef GAUSSDIM_SCHEDULES_HPP
#define GAUSSDIM_SCHEDULES_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gaussdim/potentials.hpp"
#include "gaussdim/regime.hpp"

namespace gaussdim {

/// Fixed eps (upper-bound flavor) or a vanishing sequence eps_n (lower-bound
/// flavor).  Default vanishing sequence is n^-2, which is summable.
class EpsilonPolicy {
 public:
  static EpsilonPolicy fixed(double eps);
  static EpsilonPolicy vanishing_power(double rate);  // eps_n = n^-rate
  static EpsilonPolicy vanishing(std::function<double(long)> seq, std::string label);

  bool is_fixed() const { return fixed_; }
  double at(long n) const { return fixed_ ? eps_ : seq_(n); }
  const std::string& label() const { return label_; }

 private:
  EpsilonPolicy() = default;
  bool fixed_ = true;
  double eps_ = 0.1;
  std::function<double(long)> seq_;
  std::string label_;
};

/// The (log s_n, log t_n, N) data of a digit-window set: points whose n-th
/// digit lies in [s_n - t_n, s_n + t_n] for all n >= N.
class DigitSchedule {
 public:
  DigitSchedule(std::function<double(long)> log_s, std::function<double(long)> log_t,
                long start, std::string name);

  double log_s(long n) const { return log_s_(n); }
  double log_t(long n) const { return log_t_(n); }
  long start() const { return start_; }
  const std::string& name() const { return name_; }

 private:
  std::function<double(long)> log_s_, log_t_;
  long start_;
  std::string name_;
};

/// The exact digit window of the matching case analysis.  Fixed-eps policies
/// give the covering (upper bound) windows with the 3eps-style prefactors;
/// vanishing policies give the contained (lower bound) windows.
DigitSchedule theorem_schedule(const Potential& p, const GrowthRate& g,
                               RegimeTag tag, const EpsilonPolicy& eps);

/// s_i = s0 * sr^i, t_i = t0 * tr^i.
DigitSchedule geometric_schedule(double s0, double sr, double t0, double tr);

/// Benchmark schedule s_i = 10*2^i, t_i = 10*2^(i-1).
DigitSchedule benchmark_schedule();

struct ScheduleDiagnostics {
  bool t_below_s = true;        // t_n < s_n on the prefix
  bool s_increasing = true;     // log s_n strictly increasing
  double min_gap_fraction = 1;  // min over prefix of 1 - t_n/s_n
};

ScheduleDiagnostics schedule_diagnostics(const DigitSchedule& sched, long n_max);

struct SamplePoint {
  std::vector<double> log_digits;           // log a_n, n = 1..depth
  std::vector<std::uint64_t> exact_prefix;  // materialized digits (may be shorter)
  std::uint64_t seed = 0;
};

/// Deterministic digit sample: exact integer uniform on the window while it
/// fits below 2^40, log-scale uniform position afterwards.  Positions below
/// the schedule start are filled with digit 1.
SamplePoint sample_word(const DigitSchedule& sched, int depth, std::uint64_t seed);

/// Digits a_n = phi^{-1}(Phi(n) - Phi(n-1)) (a_1 = phi^{-1}(Phi(1))) that
/// telescope to S_n phi = Phi(n) exactly; test and diagnostic helper.
std::vector<double> diagnostic_log_digits(const Potential& p, const GrowthRate& g, int depth);

struct ConvergenceProfile {
  std::vector<double> deviations;  // log S_n phi - log Phi(n) per n
  LogScale scale = LogScale::Log;
  bool approximate = false;        // set when evaluated at LogLog scale
  double max_abs_tail = 0.0;       // max |dev| over the last quarter
};

ConvergenceProfile convergence_profile(const Potential& p, const GrowthRate& g,
                                       const SamplePoint& point, int depth);
ConvergenceProfile convergence_profile_logs(const Potential& p, const GrowthRate& g,
                                            std::span<const double> log_digits);

/// Sparse-position construction: n_k ~ k^{(1/alpha)(1-eps)} rounded and kept
/// strictly increasing, u_k = phi^{-1}(Phi(n_k) - Phi(n_{k-1})).
class EmSpec {
 public:
  EmSpec(const Potential& p, const GrowthRate& g, int M, double eps);

  const Potential& potential() const { return potential_; }
  const GrowthRate& growth() const { return growth_; }
  int digit_cap() const { return m_; }
  double eps() const { return eps_; }
  double exponent() const { return exponent_; }

  /// Positions n_1 < n_2 < ... < n_kmax.
  std::vector<long> positions(int k_max) const;
  /// log u_k given consecutive positions (n_prev = 0 for k = 1).
  double log_u(long n_k, long n_prev) const;

 private:
  Potential potential_;
  GrowthRate growth_;
  int m_;
  double eps_;
  double exponent_;
};

EmSpec em_spec(const Potential& p, const GrowthRate& g, int M, double eps);

enum class TrendVerdict { Vanishing, Diverging, Inconclusive };

struct UsefDiagnostic {
  std::vector<double> ratios;  // r_k = (1/n_k) sum_{j<=k} log u_j
  TrendVerdict verdict = TrendVerdict::Inconclusive;
  double tail_slope = 0.0;     // log r vs log k least-squares slope, last half
};

UsefDiagnostic usef_diagnostic(const EmSpec& spec, int k_max);

std::string verdict_name(TrendVerdict v);

/// Number of integers j with (1-2eps) e^{n^alpha} <= phi(j) <= (1+eps) e^{n^alpha}
/// for the stretched-exponential potential with c >= 1.
long t4_window_count(const Potential& p, const GrowthRate& g, long n, double eps);

}  // namespace gaussdim

#endif
