#ifndef GAUSSDIM_COUNTING_HPP
#define GAUSSDIM_COUNTING_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussdim {

/// Truncated Riemann zeta with a certified error bound.
struct ZetaResult {
  double value;
  double error_bound;  // guaranteed |value - zeta(s)| <= error_bound <= tol
  long terms;
};

ZetaResult zeta_truncated(double s, double tol);

/// Convenience: zeta(s) with tail bound <= 1e-13.
double zeta_value(double s);

enum class TupleShape { PowerLaw, LogPower };

/// Tuple window: (i_1..i_n) in N^n with sum of term(i_k) in [m, m(1+eps)).
/// `closed_interval` switches to [m, m(1+eps)] for sensitivity checks.
struct TupleConstraint {
  double m;
  int n;
  TupleShape shape;
  double shape_param;  // a (PowerLaw) or b (LogPower)
  double eps;
  bool closed_interval = false;
};

struct EnumStats {
  unsigned long long tuples = 0;
  unsigned long long nodes = 0;
};

class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(double estimate, unsigned long long cap);
  double estimate;
  unsigned long long cap;
};

inline constexpr unsigned long long kDefaultNodeCap = 100'000'000ull;

/// Closed-form estimate of the tuple count, used to refuse oversized runs.
double estimate_tuple_count(const TupleConstraint& c);

/// Exact count (and node statistics) by pruned depth-first enumeration.
EnumStats enumerate_tuples(const TupleConstraint& c,
                           const std::function<void(std::span<const std::uint64_t>)>& visit,
                           unsigned long long node_cap = kDefaultNodeCap);

unsigned long long enumerate_count(const TupleConstraint& c,
                                   unsigned long long node_cap = kDefaultNodeCap);

struct WeightedSum {
  double value = 0.0;
  unsigned long long count = 0;
  EnumStats stats;
};

/// G(m,n,a,eps,s) = sum over the window of prod i_k^{-ds}.  Requires ds > 1.
WeightedSum g_sum(const TupleConstraint& c, double d, double s,
                  unsigned long long node_cap = kDefaultNodeCap);
WeightedSum g_sum_serial(const TupleConstraint& c, double d, double s,
                         unsigned long long node_cap = kDefaultNodeCap);

/// \hat G analogue for the LogPower shape.
WeightedSum ghat_sum(const TupleConstraint& c, double d, double s,
                     unsigned long long node_cap = kDefaultNodeCap);
WeightedSum ghat_sum_serial(const TupleConstraint& c, double d, double s,
                            unsigned long long node_cap = kDefaultNodeCap);

struct BoundConstants {
  double c4;       // ceiling constant, depends on a
  double c1;       // 2^{(ds+a)/a} * c4
  double c2;       // 6 * 3^{(ds-1)/a} * zeta(ds)
  double c3;       // 1 / c4
  double c_hat;    // 2 * 3^{ds} * zeta(ds)
  double zeta_ds;
};

BoundConstants bound_constants(double a, double ds);

struct BoundResult {
  double value;
  bool valid;         // eps inside the admissible window
  double window_low;  // lower end of the admissible eps window
};

/// Closed-form upper bound C1*C2^{n-1}*eps*m^{(1-ds)/a} with validity window.
BoundResult g_bound(const TupleConstraint& c, double d, double s);

/// Closed-form bound 6*Chat^{n-1}*eps*e^{(1-ds)(log m)^{1/b}}.
BoundResult ghat_bound(const TupleConstraint& c, double d, double s);

/// One row of the bound-verification grid.  `skipped` marks cells whose
/// enumeration would exceed the node budget.
struct GridRow {
  double m;
  int n;
  double shape_param;
  double eps;
  double d;
  double s;
  double sum;
  double bound;
  unsigned long long count;
  bool valid;
  bool pass;
  bool skipped;
};

struct GridReport {
  std::vector<GridRow> rows;
  unsigned long long total_nodes = 0;
  int valid_points = 0;
  int violations = 0;
  int skipped_cells = 0;
};

GridReport verify_lemma3_grid(unsigned long long node_budget = kDefaultNodeCap);
GridReport verify_lemma4_grid(unsigned long long node_budget = kDefaultNodeCap);

}  // namespace gaussdim

#endif
