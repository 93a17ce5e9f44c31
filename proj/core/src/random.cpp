#include "fcs/random.hpp"

#include <vector>

namespace fcs {

GaussianRational SeededRng::small_gaussian(bool complex_values) {
  const long a = between(-4, 4);
  const long b = between(1, 4);
  mpq_class re(a, b);
  re.canonicalize();
  if (!complex_values) return GaussianRational(re);
  const long c = between(-4, 4);
  const long d = between(1, 4);
  mpq_class im(c, d);
  im.canonicalize();
  return GaussianRational(re, im);
}

DiskCoefficients random_cascade(unsigned p, int depth, SeededRng& rng, bool complex_values) {
  std::vector<GaussianRational> leaves(checked_power(p, static_cast<std::size_t>(depth)));
  for (auto& v : leaves) v = rng.small_gaussian(complex_values);
  return cascade_from_leaves(p, std::move(leaves), depth);
}

TestFunction random_test_function(unsigned p, int level, SeededRng& rng, bool complex_values) {
  std::vector<GaussianRational> values(checked_power(p, static_cast<std::size_t>(level)));
  for (auto& v : values) v = rng.small_gaussian(complex_values);
  return TestFunction(p, level, std::move(values));
}

Word random_word(unsigned p, std::size_t length, SeededRng& rng) {
  std::vector<Digit> digits(length);
  for (auto& d : digits) d = static_cast<Digit>(rng.below(p));
  return Word(p, std::move(digits));
}

PAdicPoint random_point(unsigned p, std::size_t resolution, SeededRng& rng) {
  return PAdicPoint(p, random_word(p, resolution, rng).digits());
}

XCombination random_combination(unsigned p, int max_length, int terms, SeededRng& rng, bool complex_values) {
  XCombination out(p);
  for (int t = 0; t < terms; ++t) {
    const auto len = static_cast<std::size_t>(rng.between(0, max_length));
    out.add(random_word(p, len, rng), rng.small_gaussian(complex_values));
  }
  return out;
}

}  // namespace fcs
