#pragma once

#include <map>
#include <string>

#include "fcs/scalar.hpp"
#include "fcs/words.hpp"

namespace fcs {

/// Depth-truncated vector in the free Fock space over C^p.
///
/// Basis vectors are A†_I Ω for words I with |I| <= depth. `guarantee` g
/// records that coefficients on words of length <= g agree with the
/// untruncated object; g = -1 means nothing is guaranteed.
class FockVector {
 public:
  using Coefficients = std::map<Word, Scalar, ShortlexOrder>;

  /// Zero vector. Throws std::invalid_argument for p < 2 or depth < 0.
  FockVector(unsigned p, int depth);
  FockVector(unsigned p, int depth, int guarantee);
  /// e_w = A†_w Ω.
  static FockVector basis(const Word& w, int depth);

  unsigned p() const { return p_; }
  int depth() const { return depth_; }
  int guarantee() const { return guarantee_; }
  void set_guarantee(int g);

  const Coefficients& coefficients() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(const Word& w) const;

  /// Overwrites the coefficient on w; zero removes the entry.
  void set(const Word& w, Scalar value);
  /// Adds to the coefficient on w; zero results are removed.
  void add(const Word& w, const Scalar& value);

  FockVector conj() const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, FockVector v) { return v *= c; }

  /// Equality of p and the coefficient maps. Depth and guarantee are metadata.
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

 private:
  void check_word(const Word& w) const;

  unsigned p_;
  int depth_;
  int guarantee_;
  Coefficients coeffs_;
};

/// Ω with coefficient 1 on the empty word.
FockVector vacuum(unsigned p, int depth);
/// A†_i: appends digit i as the new last digit. Words pushed past the depth
/// are dropped.
FockVector create(Digit i, const FockVector& v);
/// A_i: strips a final digit i; other words (and Ω) map to zero.
FockVector annihilate(Digit i, const FockVector& v);
/// A = sum_i A_i.
FockVector total_annihilate(const FockVector& v);
/// (1/p) sum_i A†_i.
FockVector averaged_create(const FockVector& v);
/// <u, v> = sum_w conj(u_w) v_w. Throws std::invalid_argument on p mismatch.
Scalar inner_product(const FockVector& u, const FockVector& v);
/// Bilinear sum_w u_w v_w: the action of u, read as a functional, on v.
Scalar bilinear_pairing(const FockVector& u, const FockVector& v);
/// Words of length exactly k with L^k divided out. Throws std::domain_error
/// if a coefficient keeps a pole at L = 0 after the division.
FockVector level_component(const FockVector& v, int k);

}  // namespace fcs
