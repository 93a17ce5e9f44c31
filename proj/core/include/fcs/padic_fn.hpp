#pragma once

#include <vector>

#include "fcs/coherent.hpp"
#include "fcs/gaussian.hpp"
#include "fcs/words.hpp"

namespace fcs {

/// Locally constant function on Z_p at resolution level k: one value per
/// disk of radius p^{-k}, indexed by the p-adic value of the center.
class TestFunction {
 public:
  /// Zero function.
  TestFunction(unsigned p, int level);
  /// Throws std::invalid_argument unless values.size() == p^level.
  TestFunction(unsigned p, int level, std::vector<GaussianRational> values);
  static TestFunction constant(unsigned p, GaussianRational c);

  unsigned p() const { return p_; }
  int level() const { return level_; }
  const std::vector<GaussianRational>& values() const { return values_; }
  /// Value on the disk centered at a length-level word.
  const GaussianRational& value(const Word& center) const;
  void set(const Word& center, GaussianRational v);

  TestFunction& operator+=(const TestFunction& o);
  TestFunction& operator*=(const GaussianRational& c);
  friend TestFunction operator+(TestFunction a, const TestFunction& b) { return a += b; }
  friend TestFunction operator*(const GaussianRational& c, TestFunction f) { return f *= c; }
  /// Equal as functions on Z_p (compared at the finer of the two levels).
  friend bool operator==(const TestFunction& a, const TestFunction& b);

 private:
  unsigned p_;
  int level_;
  std::vector<GaussianRational> values_;
};

/// A continuous linear functional on D(Z_p), stored as its disk coefficients.
class GeneralizedFunction {
 public:
  explicit GeneralizedFunction(DiskCoefficients coefficients) : coeffs_(std::move(coefficients)) {}
  const DiskCoefficients& coefficients() const { return coeffs_; }
  unsigned p() const { return coeffs_.p(); }
  int depth() const { return coeffs_.depth(); }
  friend bool operator==(const GeneralizedFunction& a, const GeneralizedFunction& b) = default;

 private:
  DiskCoefficients coeffs_;
};

/// θ_{|I|}(x - I) at the given level (>= |I|). Throws std::invalid_argument otherwise.
TestFunction indicator(const Word& I, int level);
TestFunction indicator(const Word& I);
/// Copies each disk value onto its subdisks at level k' >= k.
TestFunction refine(const TestFunction& f, int level);
/// Pointwise product at the common level.
TestFunction product(const TestFunction& f, const TestFunction& g);

/// sum over disks of value * p^{-k} (normalized Haar measure).
GaussianRational haar_integral(const TestFunction& f);
/// (f, g) = integral of conj(f) g.
GaussianRational l2_inner(const TestFunction& f, const TestFunction& g);
/// Throws std::invalid_argument when the point resolution is below the level.
GaussianRational evaluate(const TestFunction& f, const PAdicPoint& x);

/// sum_{|I|=k} f(I) Ψ_I with k the level of f. Throws std::invalid_argument
/// if the functional is shallower than f.
GaussianRational gf_pair(const GeneralizedFunction& u, const TestFunction& f);
GeneralizedFunction gf_delta(const PAdicPoint& x, int depth);

struct DkNorm {
  /// max_{|I|<=k} |Ψ_I|^2
  mpq_class modulus_squared;
  /// Lexicographically smallest maximizer.
  Word argmax;
};

/// Sup-norm of the functional on D_k(Z_p); compares squared moduli exactly.
DkNorm dk_functional_norm(const GeneralizedFunction& u, int k);

}  // namespace fcs
