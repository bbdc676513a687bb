#include "gaussdim/ifs.hpp"

#include <algorithm>
#include <cmath>

#include "gaussdim/counting.hpp"
#include "gaussdim/numeric.hpp"

namespace gaussdim {

namespace {

// sum_{j>=m} j^-d, Euler-Maclaurin with three corrections
double power_tail(double d, double m) {
  return std::pow(m, 1.0 - d) / (d - 1.0) + 0.5 * std::pow(m, -d) +
         d / 12.0 * std::pow(m, -d - 1.0) -
         d * (d + 1.0) * (d + 2.0) / 720.0 * std::pow(m, -d - 3.0);
}

// sum_{j<=i} j^-d
double power_prefix(double d, std::uint64_t i) {
  if (i == 0) return 0.0;
  if (i <= 512) {
    double s = 0.0;
    for (std::uint64_t j = i; j >= 1; --j) s += std::pow(static_cast<double>(j), -d);
    return s;
  }
  static thread_local double cached_d = -1.0;
  static thread_local double cached_zeta = 0.0;
  if (cached_d != d) {
    cached_zeta = zeta_value(d);
    cached_d = d;
  }
  return cached_zeta - power_tail(d, static_cast<double>(i) + 1.0);
}

void require_digits(const Word& w) {
  for (std::uint64_t a : w) {
    if (a == 0) throw std::domain_error("word digits must be >= 1");
    if (a >= kMaterializeDigitLimit)
      throw CylinderOverflowError(
          "digit " + std::to_string(a) +
          " too large to materialize endpoints; use log_cylinder_diameter");
  }
}

}  // namespace

IfsSystem::IfsSystem(SystemKind kind, double d) : kind_(kind), d_(d) {
  zeta_d_ = zeta_value(d);
  log_zeta_d_ = std::log(zeta_d_);
}

IfsSystem IfsSystem::affine_power_law(double d) {
  if (d <= 1.0) throw std::domain_error("affine_power_law: requires d > 1");
  return IfsSystem(SystemKind::AffinePowerLaw, d);
}

IfsSystem IfsSystem::mirrored_gauss_cf() {
  return IfsSystem(SystemKind::MirroredGaussCf, 2.0);
}

BranchBounds IfsSystem::branch_bounds(std::uint64_t i) const {
  if (i == 0) throw std::domain_error("branch_bounds: branch index starts at 1");
  double x = static_cast<double>(i);
  if (kind_ == SystemKind::AffinePowerLaw) {
    double p = std::pow(x, -d_) / zeta_d_;
    return BranchBounds{p, p};
  }
  return BranchBounds{1.0 / ((x + 1.0) * (x + 1.0)), 1.0 / (x * x)};
}

double IfsSystem::sandwich_k1() const {
  return kind_ == SystemKind::AffinePowerLaw ? 1.0 / zeta_d_ : 0.25;
}

double IfsSystem::sandwich_k2() const {
  return kind_ == SystemKind::AffinePowerLaw ? 1.0 / zeta_d_ : 1.0;
}

double IfsSystem::branch_measure(std::uint64_t i) const {
  if (i == 0) throw std::domain_error("branch_measure: branch index starts at 1");
  double x = static_cast<double>(i);
  if (kind_ == SystemKind::AffinePowerLaw) return std::pow(x, -d_) / zeta_d_;
  // image of branch i is [(i-1)/i, i/(i+1)]
  return 1.0 / (x * (x + 1.0));
}

double IfsSystem::branch_left(std::uint64_t i) const {
  if (i == 0) throw std::domain_error("branch_left: branch index starts at 1");
  double x = static_cast<double>(i);
  if (kind_ == SystemKind::AffinePowerLaw) return affine_prefix_measure(i - 1);
  return (x - 1.0) / x;
}

double IfsSystem::affine_prefix_measure(std::uint64_t i) const {
  if (kind_ != SystemKind::AffinePowerLaw)
    throw std::domain_error("affine_prefix_measure: affine system only");
  return power_prefix(d_, i) / zeta_d_;
}

CylinderInterval IfsSystem::unit_cylinder(std::uint64_t i) const {
  double lo = branch_left(i);
  double hi = lo + branch_measure(i);
  return CylinderInterval{Word{i}, lo, hi, std::log(hi - lo)};
}

void IfsSystem::apply_branch(std::uint64_t digit, double& lo, double& hi) const {
  double a = static_cast<double>(digit);
  if (kind_ == SystemKind::AffinePowerLaw) {
    double left = branch_left(digit);
    double p = branch_measure(digit);
    lo = left + p * lo;
    hi = left + p * hi;
  } else {
    // f_i(x) = 1 - 1/(i+1-x), decreasing, so the endpoints swap
    double nlo = 1.0 - 1.0 / (a + 1.0 - hi);
    double nhi = 1.0 - 1.0 / (a + 1.0 - lo);
    lo = nlo;
    hi = nhi;
  }
}

CylinderInterval IfsSystem::cylinder(const Word& word) const {
  require_digits(word);
  double lo = 0.0, hi = 1.0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_branch(*it, lo, hi);
  if (!(lo < hi))
    throw CylinderOverflowError(
        "cylinder width underflows at this depth; use log_cylinder_diameter");
  return CylinderInterval{word, lo, hi, std::log(hi - lo)};
}

DiameterLogBounds IfsSystem::log_cylinder_diameter(const Word& word) const {
  for (std::uint64_t a : word)
    if (a == 0) throw std::domain_error("word digits must be >= 1");
  double lower = 0.0, upper = 0.0;
  for (std::uint64_t a : word) {
    BranchBounds b = branch_bounds(a);
    lower += std::log(b.xi);
    upper += std::log(b.lambda);
  }
  return DiameterLogBounds{lower, upper};
}

DiameterLogBounds IfsSystem::log_cylinder_diameter_logs(
    std::span<const double> log_digits) const {
  double lower = 0.0, upper = 0.0;
  for (double la : log_digits) {
    if (la < 0.0) throw std::domain_error("log digits must be >= 0");
    if (kind_ == SystemKind::AffinePowerLaw) {
      double t = -d_ * la - log_zeta_d_;
      lower += t;
      upper += t;
    } else {
      // xi = (a+1)^-2, lambda = a^-2
      lower += -2.0 * (la + std::log1p(std::exp(-la)));
      upper += -2.0 * la;
    }
  }
  return DiameterLogBounds{lower, upper};
}

double IfsSystem::log_diameter_exact(const Word& word) const {
  for (std::uint64_t a : word)
    if (a == 0) throw std::domain_error("word digits must be >= 1");
  if (kind_ == SystemKind::AffinePowerLaw) {
    double acc = 0.0;
    for (std::uint64_t a : word)
      acc += -d_ * std::log(static_cast<double>(a)) - log_zeta_d_;
    return acc;
  }
  // |I_n| = 1/(q_n (q_n + q_{n-1})) with the continuant recurrence
  // q_k = a_k q_{k-1} + q_{k-2}, tracked as log q_k plus the ratio
  // q_{k-1}/q_k so arbitrarily deep words stay representable.
  double log_q = 0.0;  // q_0 = 1
  double ratio = 0.0;  // q_{-1}/q_0
  for (std::uint64_t a : word) {
    double ad = static_cast<double>(a);
    log_q += std::log(ad + ratio);
    ratio = 1.0 / (ad + ratio);
  }
  return -(2.0 * log_q + std::log1p(ratio));
}

std::uint64_t IfsSystem::digit_of(double x, double& next) const {
  if (kind_ == SystemKind::MirroredGaussCf) {
    double u = 1.0 / (1.0 - x);
    double fl = std::floor(u);
    if (u == fl)
      throw BoundaryAmbiguityError("point lies on a cylinder boundary");
    next = 1.0 - (u - fl);
    return static_cast<std::uint64_t>(fl);
  }
  // binary search for the branch whose image [L_{i-1}, L_i) contains x
  std::uint64_t lo = 1, hi = 2;
  while (affine_prefix_measure(hi) <= x) {
    lo = hi;
    if (hi > (std::uint64_t{1} << 62)) throw std::domain_error("digit out of range");
    hi *= 2;
  }
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (affine_prefix_measure(mid) <= x)
      lo = mid + 1;
    else
      hi = mid;
  }
  double left = affine_prefix_measure(lo - 1);
  if (x == left) throw BoundaryAmbiguityError("point lies on a cylinder boundary");
  next = (x - left) / branch_measure(lo);
  if (next >= 1.0) throw BoundaryAmbiguityError("point lies on a cylinder boundary");
  return lo;
}

Word IfsSystem::expand_point(double x, int depth) const {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("expand_point: x must be in (0,1)");
  if (depth < 0) throw std::domain_error("expand_point: depth must be >= 0");
  Word w;
  w.reserve(static_cast<std::size_t>(depth));
  double cur = x;
  for (int k = 0; k < depth; ++k) {
    if (cur <= 0.0 || cur >= 1.0)
      throw BoundaryAmbiguityError("point lies on a cylinder boundary");
    double next;
    w.push_back(digit_of(cur, next));
    cur = next;
  }
  return w;
}

double IfsSystem::distortion_ratio(const Word& w1, const Word& w2) const {
  if (w1.empty() || w2.empty())
    throw std::domain_error("distortion_ratio: words must be nonempty");
  Word joined = w1;
  joined.insert(joined.end(), w2.begin(), w2.end());
  return std::exp(log_diameter_exact(joined) - log_diameter_exact(w1) -
                  log_diameter_exact(w2));
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

namespace {

double derivative_magnitude(const IfsSystem& sys, std::uint64_t i, double x) {
  if (sys.kind() == SystemKind::AffinePowerLaw) return sys.branch_measure(i);
  double a = static_cast<double>(i);
  double t = a + 1.0 - x;
  return 1.0 / (t * t);
}

double branch_apply(const IfsSystem& sys, std::uint64_t i, double x) {
  if (sys.kind() == SystemKind::AffinePowerLaw)
    return sys.branch_left(i) + sys.branch_measure(i) * x;
  return 1.0 - 1.0 / (static_cast<double>(i) + 1.0 - x);
}

// sup over words of length m (digits <= digit_cap) and grid x of |word'(x)|
double composition_sup(const IfsSystem& sys, int m, std::uint64_t digit_cap,
                       int grid) {
  std::vector<std::uint64_t> word(static_cast<std::size_t>(m), 1);
  double sup = 0.0;
  for (;;) {
    for (int g = 0; g <= grid; ++g) {
      double x = static_cast<double>(g) / grid;
      double deriv = 1.0;
      double cur = x;
      for (int k = m - 1; k >= 0; --k) {
        deriv *= derivative_magnitude(sys, word[static_cast<std::size_t>(k)], cur);
        cur = branch_apply(sys, word[static_cast<std::size_t>(k)], cur);
      }
      sup = std::max(sup, deriv);
    }
    // odometer over the word digits
    int pos = 0;
    while (pos < m && word[static_cast<std::size_t>(pos)] == digit_cap) {
      word[static_cast<std::size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == m) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return sup;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

AxiomReport check_system_axioms(const IfsSystem& system, int index_limit,
                                int sample_grid) {
  if (index_limit < 2) throw std::domain_error("check_system_axioms: index_limit >= 2");
  if (sample_grid < 2) throw std::domain_error("check_system_axioms: sample_grid >= 2");
  AxiomReport rep;
  const double tol = 1e-9;

  // (1)+(3): open images pairwise disjoint and ordered by index
  {
    bool ok = true;
    std::string detail;
    double prev_hi = 0.0;
    for (std::uint64_t i = 1; ok && i <= static_cast<std::uint64_t>(index_limit); ++i) {
      CylinderInterval ci = system.unit_cylinder(i);
      if (i > 1 && ci.lo < prev_hi - tol) {
        ok = false;
        detail = "images of branches " + std::to_string(i - 1) + " and " +
                 std::to_string(i) + " overlap";
      }
      prev_hi = ci.hi;
    }
    rep.checks.push_back({"(1) disjoint images", ok, detail});
    rep.checks.push_back({"(3) ordered by index", ok, detail});
  }

  // (2): images tile [0,1) with no gaps, coverage -> 1
  {
    bool ok = true;
    std::string detail;
    double cursor = 0.0;
    for (std::uint64_t i = 1; ok && i <= static_cast<std::uint64_t>(index_limit); ++i) {
      CylinderInterval ci = system.unit_cylinder(i);
      if (std::abs(ci.lo - cursor) > tol) {
        ok = false;
        detail = "gap before branch " + std::to_string(i);
      }
      cursor = ci.hi;
    }
    if (ok && cursor >= 1.0 + tol) {
      ok = false;
      detail = "coverage exceeds 1";
    }
    if (ok) detail = "coverage " + fmt(cursor) + " at index " + std::to_string(index_limit);
    rep.checks.push_back({"(2) tiles [0,1)", ok, detail});
  }

  // (4): some m-fold composition is a uniform contraction
  {
    bool ok = false;
    std::string detail;
    std::uint64_t cap = std::min<std::uint64_t>(static_cast<std::uint64_t>(index_limit), 24);
    for (int m = 1; m <= 3 && !ok; ++m) {
      double sup = composition_sup(system, m, cap, sample_grid);
      if (sup < 1.0 - 1e-9) {
        ok = true;
        rep.contraction_m = m;
        rep.contraction_a = sup;
        detail = "m=" + std::to_string(m) + ", A=" + fmt(sup);
      } else {
        detail = "sup at m=" + std::to_string(m) + " is " + fmt(sup);
      }
    }
    rep.checks.push_back({"(4) uniform contraction", ok, detail});
  }

  // (5): grid min/max of |f_i'| matches the xi/lambda formulas and the
  // K1/i^d .. K2/i^d sandwich holds with the reported constants
  {
    bool ok = true;
    std::string detail;
    double k1 = kInf, k2 = 0.0;
    for (std::uint64_t i = 1; ok && i <= static_cast<std::uint64_t>(index_limit); ++i) {
      BranchBounds b = system.branch_bounds(i);
      double mn = kInf, mx = 0.0;
      for (int g = 0; g <= sample_grid; ++g) {
        double x = static_cast<double>(g) / sample_grid;
        double dv = derivative_magnitude(system, i, x);
        mn = std::min(mn, dv);
        mx = std::max(mx, dv);
      }
      if (mn < b.xi - tol || mx > b.lambda + tol) {
        ok = false;
        detail = "derivative leaves [xi,lambda] at branch " + std::to_string(i);
      }
      double idp = std::pow(static_cast<double>(i), system.decay());
      k1 = std::min(k1, b.xi * idp);
      k2 = std::max(k2, b.lambda * idp);
    }
    rep.k1 = k1;
    rep.k2 = k2;
    if (ok) {
      if (std::abs(k1 - system.sandwich_k1()) > 1e-9 ||
          std::abs(k2 - system.sandwich_k2()) > 1e-9) {
        ok = false;
        detail = "K constants drift from closed forms";
      } else {
        detail = "K1=" + fmt(k1) + ", K2=" + fmt(k2);
      }
    }
    rep.checks.push_back({"(5) derivative sandwich", ok, detail});
  }
  return rep;
}

DistortionBand distortion_band(const IfsSystem& system, int max_len,
                               std::uint64_t max_digit, int pairs, std::uint64_t seed) {
  if (max_len < 1 || pairs < 1) throw std::domain_error("distortion_band: bad corpus");
  DistortionBand band{kInf, 0.0, pairs};
  std::uint64_t idx = 0;
  for (int p = 0; p < pairs; ++p) {
    Word w1, w2;
    int l1 = static_cast<int>(uniform_integer(seed, idx++, 1, static_cast<std::uint64_t>(max_len)));
    int l2 = static_cast<int>(uniform_integer(seed, idx++, 1, static_cast<std::uint64_t>(max_len)));
    for (int k = 0; k < l1; ++k) w1.push_back(uniform_integer(seed, idx++, 1, max_digit));
    for (int k = 0; k < l2; ++k) w2.push_back(uniform_integer(seed, idx++, 1, max_digit));
    double r = system.distortion_ratio(w1, w2);
    band.k3 = std::min(band.k3, r);
    band.k4 = std::max(band.k4, r);
  }
  return band;
}

}  // namespace gaussdim
