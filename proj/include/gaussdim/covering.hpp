#ifndef GAUSSDIM_COVERING_HPP
#define GAUSSDIM_COVERING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gaussdim/dimension.hpp"
#include "gaussdim/ifs.hpp"
#include "gaussdim/schedules.hpp"

namespace gaussdim {

enum class InnerSumMethod { Exact, Integral };

/// Level-n covering sums over schedule-constrained cylinders of the affine
/// system.  `log_sum` is log sum |I_n|^s over words with digits in the
/// windows; `log_sum_refined` additionally weights each cylinder by the
/// measure of the level-(n+1) window, which is the cover the dimension
/// estimate needs.
struct CoverReport {
  int depth = 0;
  double s = 0.0;
  double log_sum = 0.0;
  double log_sum_refined = 0.0;
  std::vector<InnerSumMethod> methods;  // per level 1..n+1
};

CoverReport covering_log_sum(const IfsSystem& system, const DigitSchedule& sched,
                             int n, double s);
CoverReport covering_log_sum_serial(const IfsSystem& system, const DigitSchedule& sched,
                                    int n, double s);

/// log sum_{a=ceil(lo)}^{floor(hi)} a^{-p} for a window given by its log
/// endpoints: exact summation, or the half-integer-corrected integral form
/// used once windows outgrow the exact limit.
double window_power_sum_log(double log_lo, double log_hi, double p, bool exact);

/// Two-sided bounds for the mirrored system from the xi/lambda sandwich.
struct CoverBounds {
  CoverReport lower;
  CoverReport upper;
};

CoverBounds covering_log_sum_bounds(const IfsSystem& system, const DigitSchedule& sched,
                                    int n, double s);

class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double f_lo, double f_hi)
      : std::runtime_error(what), f_lo(f_lo), f_hi(f_hi) {}
  double f_lo, f_hi;
};

struct RootResult {
  double root = 0.0;
  bool above_one = false;  // pre-asymptotic depth indicator
  int iterations = 0;
  std::vector<std::pair<double, double>> bracket_history;
};

/// Bisection root of the refined covering sum in s on (0.01, 1.5).
RootResult dimension_root(const IfsSystem& system, const DigitSchedule& sched,
                          int n, double tol);

struct LocalDimProfile {
  std::vector<double> log_r;   // refined cylinder scales
  std::vector<double> log_mu;  // uniform schedule-measure masses
  std::vector<double> slope;   // log_mu / log_r per depth
  bool degenerate = false;     // point-mass schedule
};

/// Mass-distribution profile of the uniform digit law along a seeded sample.
LocalDimProfile local_dimension_profile(const IfsSystem& system,
                                        const DigitSchedule& sched,
                                        std::uint64_t seed, int depth);

enum class DecayVerdict { Decays, Grows, Inconclusive };

struct ProductGRow {
  int k = 0;
  double n_k = 0.0;
  double block_len = 0.0;   // n(k) = n_k - n_{k-1}
  double log_m = 0.0;
  bool valid = false;       // the window admits some eps < 1/3
  double log_bound = 0.0;   // cumulative log of the product bound
};

struct ProductGDiagnostic {
  std::vector<ProductGRow> rows;
  DecayVerdict verdict = DecayVerdict::Inconclusive;
  int first_valid_k = -1;
  int argmax_k = -1;
};

/// Per-k product bound K2^{s n_k} prod_j bound(m(j), n(j)) along the
/// subsequence n_k = Phi^{-1}(e^k), m(k) = (1-eps/5)e^k - (1+eps/5)e^{k-1}.
/// Requires alpha > 1/2 and s > 1/d.
ProductGDiagnostic product_g_diagnostic(double eps, int k_max, double a, double d,
                                        double s, double alpha);

std::string decay_verdict_name(DecayVerdict v);

}  // namespace gaussdim

#endif
