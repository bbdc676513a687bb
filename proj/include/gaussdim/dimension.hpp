#ifndef GAUSSDIM_DIMENSION_HPP
#define GAUSSDIM_DIMENSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "gaussdim/regime.hpp"
#include "gaussdim/schedules.hpp"

namespace gaussdim {

struct DimensionResult {
  std::optional<double> value;  // empty for Critical / Uncovered
  Regime regime;
  std::string formula;
  bool requires_distortion = false;  // full-dimension cases assume bounded distortion
};

/// Closed-form Hausdorff dimension of the level set for d > 1.
DimensionResult closed_form_dimension(const Potential& p, const GrowthRate& g, double d);

struct LiminfSeries {
  std::vector<double> q;  // q_n = sum_{i<=n} log t_i / (d sum_{i<=n+1} log s_i - log t_{n+1})
  double tail_min = 0.0;  // min over the last half, the numeric liminf estimate
};

/// Partial liminf ratios of the digit-window dimension formula.  Indices with
/// log t_i <= 0 contribute 0 to the numerator (a one-integer window carries
/// no entropy).
LiminfSeries lemA_liminf(const DigitSchedule& sched, double d, int n_max);

/// Root s(M) of sum_{i<=M} p_i^s = 1 for the affine system with digits
/// capped at M.  Strictly increasing in M with limit 1.
double moran_dimension(double d, int M, double tol);

/// max(0, 2 s(M) - 1), the sparse-position lower bound.
double lemdim1_lower_bound(double d, int M, double tol);

struct MoranBracket {
  double lower;
  double upper;
};

/// Bracketing roots from the xi/lambda derivative bounds of the mirrored
/// continued-fraction system; upper clamps at 1 when sum lambda_i^s stays
/// above 1 on (0,1].
MoranBracket moran_bounds_mirrored(int M, double tol);

}  // namespace gaussdim

#endif
