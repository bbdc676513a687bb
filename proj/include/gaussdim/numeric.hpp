#ifndef GAUSSDIM_NUMERIC_HPP
#define GAUSSDIM_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>

namespace gaussdim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Digits above this cannot be materialized as exact interval endpoints;
// callers must switch to log-scale diameters.
inline constexpr std::uint64_t kMaterializeDigitLimit = std::uint64_t{1} << 40;

// Largest window endpoint for which per-digit sums are evaluated exactly.
inline constexpr double kExactWindowLimit = 1e6;

// log(DBL_MAX), the cutoff between LOG and LOGLOG representations.
inline constexpr double kLogDoubleMax = 709.78;

/// log(1 - e^x) for x < 0, stable near both ends.
inline double log1m_exp(double x) {
  if (x >= 0.0) throw std::domain_error("log1m_exp: argument must be negative");
  if (x > -0.6931471805599453) return std::log(-std::expm1(x));
  return std::log1p(-std::exp(x));
}

/// log(e^a + e^b).
inline double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  double hi = a > b ? a : b;
  double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

/// log(e^a - e^b), requires a > b.
inline double log_sub_exp(double a, double b) {
  if (b == -kInf) return a;
  if (a <= b) throw std::domain_error("log_sub_exp: requires a > b");
  return a + log1m_exp(b - a);
}

/// log sum of exponentials of a sequence, -inf for empty input.
inline double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return -kInf;
  double hi = -kInf;
  for (double x : xs)
    if (x > hi) hi = x;
  if (hi == -kInf || std::isinf(hi)) return hi;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

// splitmix64; the fixed-increment variant, used everywhere a deterministic
// stream is needed so output never depends on platform library details.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic uniform double in [0,1) from a (seed, index) pair.
inline double uniform_unit(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ull ^ index * 0xD1B54A32D192ED03ull;
  (void)splitmix64(s);
  std::uint64_t z = splitmix64(s);
  return static_cast<double>(z >> 11) / 9007199254740992.0;  // 2^53
}

/// Deterministic uniform integer in [lo, hi] from a (seed, index) pair.
inline std::uint64_t uniform_integer(std::uint64_t seed, std::uint64_t index,
                                     std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_integer: empty range");
  std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t s = seed ^ index;
    return splitmix64(s);
  }
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ull ^ index * 0xD1B54A32D192ED03ull;
  (void)splitmix64(s);
  std::uint64_t bound = span + 1;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t z = splitmix64(s);
    if (z < limit) return lo + z % bound;
  }
}

}  // namespace gaussdim

#endif
