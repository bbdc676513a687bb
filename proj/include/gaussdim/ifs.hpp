#ifndef GAUSSDIM_IFS_HPP
#define GAUSSDIM_IFS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussdim {

using Word = std::vector<std::uint64_t>;

enum class SystemKind { AffinePowerLaw, MirroredGaussCf };

struct CylinderInterval {
  Word word;
  double lo = 0.0;
  double hi = 1.0;
  double log_diameter = 0.0;
};

/// Log-scale diameter bounds from the branch derivative sandwich.  The two
/// sides coincide for the affine system.
struct DiameterLogBounds {
  double lower;
  double upper;
};

struct BranchBounds {
  double xi;      // min |f_i'|
  double lambda;  // max |f_i'|
};

class CylinderOverflowError : public std::runtime_error {
 public:
  explicit CylinderOverflowError(const std::string& what) : std::runtime_error(what) {}
};

class BoundaryAmbiguityError : public std::runtime_error {
 public:
  explicit BoundaryAmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

/// A concrete d-decaying Gauss-like system on [0,1].
///
/// AffinePowerLaw: branch i is affine increasing onto [L_{i-1}, L_i) with
/// length i^{-d}/zeta(d).  MirroredGaussCf: the continued-fraction branches
/// 1/(i+x) conjugated by x -> 1-x so branch images sit left-to-right.
class IfsSystem {
 public:
  static IfsSystem affine_power_law(double d);
  static IfsSystem mirrored_gauss_cf();

  SystemKind kind() const { return kind_; }
  double decay() const { return d_; }
  double zeta_d() const { return zeta_d_; }

  BranchBounds branch_bounds(std::uint64_t i) const;
  double sandwich_k1() const;
  double sandwich_k2() const;

  /// Branch length |I_1(i)|.
  double branch_measure(std::uint64_t i) const;
  /// Left endpoint of the image of branch i (affine: L_{i-1}).
  double branch_left(std::uint64_t i) const;

  /// Image interval of [0,1] under branch i.
  CylinderInterval unit_cylinder(std::uint64_t i) const;

  /// f_{a_1} o ... o f_{a_n}([0,1]).  Digits must be below the
  /// materialization limit and the interval width must stay positive.
  CylinderInterval cylinder(const Word& word) const;

  DiameterLogBounds log_cylinder_diameter(const Word& word) const;
  DiameterLogBounds log_cylinder_diameter_logs(std::span<const double> log_digits) const;

  /// Exact log |I_n| at any depth: the plain product for the affine system,
  /// the continuant recurrence for the continued-fraction system.
  double log_diameter_exact(const Word& word) const;

  /// First `depth` expansion digits of x.  Points lying on a cylinder
  /// boundary have no unique expansion and are rejected.
  Word expand_point(double x, int depth) const;

  /// |I(w1.w2)| / (|I(w1)| |I(w2)|).
  double distortion_ratio(const Word& w1, const Word& w2) const;

  /// Partial sum L_i = sum_{j<=i} p_j for the affine system.
  double affine_prefix_measure(std::uint64_t i) const;

 private:
  IfsSystem(SystemKind kind, double d);
  void apply_branch(std::uint64_t digit, double& lo, double& hi) const;
  std::uint64_t digit_of(double x, double& next) const;

  SystemKind kind_;
  double d_;
  double zeta_d_;
  double log_zeta_d_;
};

struct AxiomCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  double k1 = 0.0;
  double k2 = 0.0;
  int contraction_m = 0;   // word length at which uniform contraction holds
  double contraction_a = 1.0;
  bool all_pass() const;
};

/// Verifies conditions (1)-(5) on branches 1..index_limit over a sample grid.
AxiomReport check_system_axioms(const IfsSystem& system, int index_limit, int sample_grid);

struct DistortionBand {
  double k3 = 0.0;  // smallest observed ratio
  double k4 = 0.0;  // largest observed ratio
  int pairs = 0;
};

/// Empirical distortion constants over seeded random word pairs.
DistortionBand distortion_band(const IfsSystem& system, int max_len,
                               std::uint64_t max_digit, int pairs, std::uint64_t seed);

}  // namespace gaussdim

#endif
