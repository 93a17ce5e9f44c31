#pragma once

#include <cstdint>
#include <random>

#include "fcs/coherent.hpp"
#include "fcs/padic_fn.hpp"

namespace fcs {

/// Seeded generator for reproducible property checks. Only raw
/// mt19937_64 output is used, so draws are identical on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  /// Real and imaginary parts drawn from {a/b : |a| <= 4, 1 <= b <= 4}.
  GaussianRational small_gaussian(bool complex_values = true);

 private:
  std::mt19937_64 engine_;
};

DiskCoefficients random_cascade(unsigned p, int depth, SeededRng& rng, bool complex_values = true);
TestFunction random_test_function(unsigned p, int level, SeededRng& rng, bool complex_values = true);
PAdicPoint random_point(unsigned p, std::size_t resolution, SeededRng& rng);
Word random_word(unsigned p, std::size_t length, SeededRng& rng);
/// `terms` random X_I with |I| <= max_length.
XCombination random_combination(unsigned p, int max_length, int terms, SeededRng& rng, bool complex_values = true);

}  // namespace fcs
