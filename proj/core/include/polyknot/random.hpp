#pragma once

#include <cstdint>
#include <random>

#include "polyknot/rational.hpp"

namespace polyknot {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so bounded integers and
/// rationals are derived from the raw 64-bit engine output directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return static_cast<std::uint64_t>(uniform_int(0, static_cast<std::int64_t>(den) - 1)) < num; }

  /// Uniform on the grid {lo + (hi - lo) k / steps}.
  Rational uniform_rational(const Rational& lo, const Rational& hi, std::int64_t steps = 1 << 20) {
    Rational r = lo + (hi - lo) * Rational(uniform_int(0, steps), steps);
    r.canonicalize();
    return r;
  }

  /// Uniform on the open grid {lo + (hi - lo) k / steps : 0 < k < steps}.
  Rational open_rational(const Rational& lo, const Rational& hi, std::int64_t steps = 1 << 20) {
    Rational r = lo + (hi - lo) * Rational(uniform_int(1, steps - 1), steps);
    r.canonicalize();
    return r;
  }

  /// Raw double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace polyknot
