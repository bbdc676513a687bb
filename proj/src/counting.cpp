#include "gaussdim/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaussdim/numeric.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gaussdim {

namespace {

double em_tail(double s, double m) {
  // sum_{k>=m} k^-s by Euler-Maclaurin, three correction terms
  return std::pow(m, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(m, -s) +
         s / 12.0 * std::pow(m, -s - 1.0) -
         s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(m, -s - 3.0);
}

double em_tail_error(double s, double m) {
  // magnitude of the first omitted term bounds the truncation error
  return s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 *
         std::pow(m, -s - 5.0);
}

}  // namespace

ZetaResult zeta_truncated(double s, double tol) {
  if (s <= 1.0) throw std::domain_error("zeta_truncated: series diverges for s <= 1");
  if (tol <= 0.0) throw std::domain_error("zeta_truncated: tol must be positive");
  long k = 16;
  while (em_tail_error(s, static_cast<double>(k + 1)) > tol && k < (1L << 24)) k *= 2;
  double sum = 0.0;
  for (long i = k; i >= 1; --i) sum += std::pow(static_cast<double>(i), -s);
  double m = static_cast<double>(k + 1);
  return ZetaResult{sum + em_tail(s, m), em_tail_error(s, m), k};
}

double zeta_value(double s) { return zeta_truncated(s, 1e-13).value; }

EnumerationCapError::EnumerationCapError(double estimate_, unsigned long long cap_)
    : std::runtime_error("enumeration size " + std::to_string(estimate_) +
                         " exceeds node cap " + std::to_string(cap_)),
      estimate(estimate_),
      cap(cap_) {}

namespace {

double term_value(const TupleConstraint& c, std::uint64_t i) {
  double x = static_cast<double>(i);
  if (c.shape == TupleShape::PowerLaw) return std::pow(x, c.shape_param);
  if (i == 1) return 1.0;
  return std::exp(std::pow(std::log(x), c.shape_param));
}

// largest i with term(i) <= budget (0 if none)
std::uint64_t max_index_for(const TupleConstraint& c, double budget) {
  if (budget < 1.0) return 0;
  std::uint64_t guess;
  if (c.shape == TupleShape::PowerLaw) {
    guess = static_cast<std::uint64_t>(std::pow(budget, 1.0 / c.shape_param));
  } else {
    double lb = std::log(budget);
    guess = lb <= 0.0 ? 1
                      : static_cast<std::uint64_t>(
                            std::exp(std::pow(lb, 1.0 / c.shape_param)));
  }
  if (guess < 1) guess = 1;
  while (term_value(c, guess + 1) <= budget) ++guess;
  while (guess > 1 && term_value(c, guess) > budget) --guess;
  if (term_value(c, guess) > budget) return 0;
  return guess;
}

struct Window {
  double lo, hi;
  bool closed;
  bool contains(double x) const {
    return x >= lo && (closed ? x <= hi : x < hi);
  }
};

void validate(const TupleConstraint& c) {
  if (c.m <= 0.0) throw std::domain_error("tuple window: m must be positive");
  if (c.n < 1) throw std::domain_error("tuple window: n must be >= 1");
  if (c.eps <= 0.0) throw std::domain_error("tuple window: eps must be positive");
  if (c.shape == TupleShape::PowerLaw && c.shape_param <= 0.0)
    throw std::domain_error("tuple window: a must be positive");
  if (c.shape == TupleShape::LogPower && c.shape_param <= 1.0)
    throw std::domain_error("tuple window: b must be > 1");
}

// Recursive pruned DFS below a fixed first index.  Terms are >= 1, so a
// prefix is abandoned once partial + (slots-1) reaches the window top.
template <typename Visit>
void dfs(const TupleConstraint& c, const Window& w, std::vector<std::uint64_t>& prefix,
         double partial, int slots, unsigned long long& nodes,
         unsigned long long node_cap, Visit&& visit) {
  if (slots == 0) {
    if (w.contains(partial)) visit(std::span<const std::uint64_t>(prefix));
    return;
  }
  double budget = w.hi - partial - static_cast<double>(slots - 1);
  std::uint64_t imax = max_index_for(c, w.closed ? budget : budget);
  for (std::uint64_t i = 1; i <= imax; ++i) {
    if (++nodes > node_cap) throw EnumerationCapError(static_cast<double>(nodes), node_cap);
    double t = term_value(c, i);
    double next = partial + t;
    if (next + static_cast<double>(slots - 1) > w.hi ||
        (!w.closed && next + static_cast<double>(slots - 1) >= w.hi))
      break;
    prefix.push_back(i);
    dfs(c, w, prefix, next, slots - 1, nodes, node_cap, visit);
    prefix.pop_back();
  }
}

Window window_of(const TupleConstraint& c) {
  return Window{c.m, c.m * (1.0 + c.eps), c.closed_interval};
}

}  // namespace

double estimate_tuple_count(const TupleConstraint& c) {
  validate(c);
  double top = c.m * (1.0 + c.eps);
  if (c.shape == TupleShape::PowerLaw) {
    // ~ eps*m window heights times the simplex volume of the remaining slots
    double per = std::pow(top, 1.0 / c.shape_param);
    double est = c.eps * c.m;
    for (int k = 1; k < c.n; ++k) est *= per / static_cast<double>(k);
    return std::max(est, 1.0);
  }
  double imax = static_cast<double>(max_index_for(c, top));
  return std::max(std::pow(imax, c.n - 1) * 4.0, 1.0);
}

EnumStats enumerate_tuples(const TupleConstraint& c,
                           const std::function<void(std::span<const std::uint64_t>)>& visit,
                           unsigned long long node_cap) {
  validate(c);
  double est = estimate_tuple_count(c);
  if (est > static_cast<double>(node_cap) * 4.0)
    throw EnumerationCapError(est, node_cap);
  EnumStats st;
  Window w = window_of(c);
  std::vector<std::uint64_t> prefix;
  prefix.reserve(c.n);
  dfs(c, w, prefix, 0.0, c.n, st.nodes, node_cap,
      [&](std::span<const std::uint64_t> t) {
        ++st.tuples;
        visit(t);
      });
  return st;
}

unsigned long long enumerate_count(const TupleConstraint& c, unsigned long long node_cap) {
  return enumerate_tuples(c, [](std::span<const std::uint64_t>) {}, node_cap).tuples;
}

namespace {

WeightedSum weighted_sum_impl(const TupleConstraint& c, double d, double s,
                              unsigned long long node_cap, bool parallel) {
  validate(c);
  if (d * s <= 1.0) throw std::domain_error("weighted sum: requires ds > 1");
  double est = estimate_tuple_count(c);
  if (est > static_cast<double>(node_cap) * 4.0)
    throw EnumerationCapError(est, node_cap);

  const double ds = d * s;
  const Window w = window_of(c);
  const std::uint64_t i1_max =
      max_index_for(c, w.hi - static_cast<double>(c.n - 1));

  // Each first index owns an independent subtree; partial results are merged
  // in ascending i1 order so the total is identical for any thread count.
  std::vector<double> partial_sum(i1_max + 1, 0.0);
  std::vector<unsigned long long> partial_count(i1_max + 1, 0);
  std::vector<unsigned long long> partial_nodes(i1_max + 1, 0);
  bool cap_hit = false;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel && c.n > 1)
#endif
  for (long long i1 = 1; i1 <= static_cast<long long>(i1_max); ++i1) {
    if (cap_hit) continue;
    const std::uint64_t u1 = static_cast<std::uint64_t>(i1);
    double t1 = term_value(c, u1);
    unsigned long long nodes = 1;
    double acc = 0.0;
    unsigned long long cnt = 0;
    double logw1 = -ds * std::log(static_cast<double>(u1));
    if (c.n == 1) {
      if (w.contains(t1)) {
        acc = std::exp(logw1);
        cnt = 1;
      }
    } else {
      std::vector<std::uint64_t> prefix;
      prefix.reserve(c.n - 1);
      try {
        dfs(c, w, prefix, t1, c.n - 1, nodes, node_cap,
            [&](std::span<const std::uint64_t> rest) {
              double lp = logw1;
              for (std::uint64_t v : rest) lp -= ds * std::log(static_cast<double>(v));
              acc += std::exp(lp);
              ++cnt;
            });
      } catch (const EnumerationCapError&) {
        cap_hit = true;
        continue;
      }
    }
    partial_sum[u1] = acc;
    partial_count[u1] = cnt;
    partial_nodes[u1] = nodes;
  }

  WeightedSum out;
  for (std::uint64_t i = 1; i <= i1_max; ++i) {
    out.value += partial_sum[i];
    out.count += partial_count[i];
    out.stats.nodes += partial_nodes[i];
  }
  if (cap_hit || out.stats.nodes > node_cap)
    throw EnumerationCapError(static_cast<double>(out.stats.nodes), node_cap);
  out.stats.tuples = out.count;
  return out;
}

}  // namespace

WeightedSum g_sum(const TupleConstraint& c, double d, double s,
                  unsigned long long node_cap) {
  if (c.shape != TupleShape::PowerLaw)
    throw std::domain_error("g_sum: expects the PowerLaw shape");
  return weighted_sum_impl(c, d, s, node_cap, true);
}

WeightedSum g_sum_serial(const TupleConstraint& c, double d, double s,
                         unsigned long long node_cap) {
  if (c.shape != TupleShape::PowerLaw)
    throw std::domain_error("g_sum_serial: expects the PowerLaw shape");
  return weighted_sum_impl(c, d, s, node_cap, false);
}

WeightedSum ghat_sum(const TupleConstraint& c, double d, double s,
                     unsigned long long node_cap) {
  if (c.shape != TupleShape::LogPower)
    throw std::domain_error("ghat_sum: expects the LogPower shape");
  return weighted_sum_impl(c, d, s, node_cap, true);
}

WeightedSum ghat_sum_serial(const TupleConstraint& c, double d, double s,
                            unsigned long long node_cap) {
  if (c.shape != TupleShape::LogPower)
    throw std::domain_error("ghat_sum_serial: expects the LogPower shape");
  return weighted_sum_impl(c, d, s, node_cap, false);
}

BoundConstants bound_constants(double a, double ds) {
  if (ds <= 1.0) throw std::domain_error("bound_constants: requires ds > 1");
  if (a <= 0.0) throw std::domain_error("bound_constants: requires a > 0");
  BoundConstants bc{};
  bc.zeta_ds = zeta_value(ds);
  bc.c4 = a >= 1.0 ? std::pow(3.0, 1.0 - 1.0 / a) / a
                   : std::pow(4.0 / 3.0, 1.0 / a - 1.0) / a;
  bc.c1 = std::pow(2.0, (ds + a) / a) * bc.c4;
  bc.c2 = 6.0 * std::pow(3.0, (ds - 1.0) / a) * bc.zeta_ds;
  bc.c3 = 1.0 / bc.c4;
  bc.c_hat = 2.0 * std::pow(3.0, ds) * bc.zeta_ds;
  return bc;
}

BoundResult g_bound(const TupleConstraint& c, double d, double s) {
  if (c.shape != TupleShape::PowerLaw)
    throw std::domain_error("g_bound: expects the PowerLaw shape");
  validate(c);
  double a = c.shape_param;
  double ds = d * s;
  BoundConstants bc = bound_constants(a, ds);
  double value = bc.c1 * std::pow(bc.c2, c.n - 1) * c.eps *
                 std::pow(c.m, (1.0 - ds) / a);
  double window_low = bc.c3 * std::pow(c.m * std::pow(3.0, 2.0 - c.n), -1.0 / a);
  bool valid = c.eps > window_low && c.eps < 1.0 / 3.0;
  return BoundResult{value, valid, window_low};
}

BoundResult ghat_bound(const TupleConstraint& c, double d, double s) {
  if (c.shape != TupleShape::LogPower)
    throw std::domain_error("ghat_bound: expects the LogPower shape");
  validate(c);
  double b = c.shape_param;
  double ds = d * s;
  double x = c.m * std::pow(3.0, 2.0 - c.n);
  if (x <= 1.0)
    throw std::domain_error("ghat_bound: window undefined, m*3^(2-n) <= 1");
  BoundConstants bc = bound_constants(1.0, ds);
  double value = 6.0 * std::pow(bc.c_hat, c.n - 1) * c.eps *
                 std::exp((1.0 - ds) * std::pow(std::log(c.m), 1.0 / b));
  double window_low = std::exp(-std::pow(std::log(x), 1.0 / b));
  bool valid = c.eps > window_low && c.eps < 1.0 / 3.0;
  return BoundResult{value, valid, window_low};
}

namespace {

GridReport run_grid(TupleShape shape, std::span<const double> shape_params,
                    unsigned long long node_budget) {
  const double ms[] = {50, 100, 200, 500, 1000, 2000};
  const int ns[] = {2, 3, 4};
  const double eps_list[] = {0.15, 0.25, 0.32};
  const double ds_list[] = {1.5, 2.0};

  GridReport rep;
  unsigned long long spent = 0;
  for (double p : shape_params) {
    for (double m : ms) {
      for (int n : ns) {
        // enumerate once per cell at the widest window, then bin tuples
        TupleConstraint widest{m, n, shape, p, eps_list[2], false};
        double est = estimate_tuple_count(widest);
        bool skip = spent + static_cast<unsigned long long>(std::min(
                                est, 4e18)) > node_budget * 9 / 10;
        double sums[3][2] = {};
        unsigned long long counts[3] = {};
        unsigned long long nodes = 0;
        if (!skip) {
          EnumStats st = enumerate_tuples(
              widest,
              [&](std::span<const std::uint64_t> t) {
                double total = 0.0, logprod = 0.0;
                for (std::uint64_t v : t) {
                  total += term_value(widest, v);
                  logprod += std::log(static_cast<double>(v));
                }
                for (int e = 0; e < 3; ++e) {
                  if (total < m * (1.0 + eps_list[e])) {
                    ++counts[e];
                    for (int k = 0; k < 2; ++k)
                      sums[e][k] += std::exp(-ds_list[k] * logprod);
                  }
                }
              },
              node_budget);
          nodes = st.nodes;
          spent += nodes;
        } else {
          ++rep.skipped_cells;
        }
        for (int e = 0; e < 3; ++e) {
          for (int k = 0; k < 2; ++k) {
            TupleConstraint c{m, n, shape, p, eps_list[e], false};
            BoundResult b = shape == TupleShape::PowerLaw ? g_bound(c, 2.0, ds_list[k] / 2.0)
                                                          : ghat_bound(c, 2.0, ds_list[k] / 2.0);
            GridRow row{m,    n,          p,     eps_list[e], 2.0,
                        ds_list[k] / 2.0, skip ? 0.0 : sums[e][k],
                        b.value,          skip ? 0ull : counts[e],
                        b.valid,          true, skip};
            if (!skip && b.valid) {
              ++rep.valid_points;
              row.pass = row.sum <= row.bound;
              if (!row.pass) ++rep.violations;
            }
            rep.rows.push_back(row);
          }
        }
      }
    }
  }
  rep.total_nodes = spent;
  return rep;
}

}  // namespace

GridReport verify_lemma3_grid(unsigned long long node_budget) {
  const double as[] = {1.0, 2.0};
  return run_grid(TupleShape::PowerLaw, as, node_budget);
}

GridReport verify_lemma4_grid(unsigned long long node_budget) {
  const double bs[] = {1.5, 2.0};
  return run_grid(TupleShape::LogPower, bs, node_budget);
}

}  // namespace gaussdim
