#ifndef GAUSSDIM_REGIME_HPP
#define GAUSSDIM_REGIME_HPP

#include <optional>
#include <string>

#include "gaussdim/potentials.hpp"

namespace gaussdim {

enum class RegimeTag {
  T1_I1, T1_I2, T1_II,
  T2_I1, T2_I2, T2_II,
  T3_I1, T3_I2, T3_II, T3_III,
  T4_I1, T4_I2,
  Critical, Uncovered,
};

struct Regime {
  RegimeTag tag;
  std::optional<double> threshold;  // critical exponent of the family, if any
};

/// Case table over (potential, growth): thresholds at alpha = 1/2 (power
/// law), b/(b+1) (log power) and 1 (stretched exponential, c < 1).  For
/// c >= 1 the boundary alpha = 1 belongs to T4_I2.
Regime classify_regime(const Potential& p, const GrowthRate& g);

std::string regime_name(RegimeTag tag);

}  // namespace gaussdim

#endif
