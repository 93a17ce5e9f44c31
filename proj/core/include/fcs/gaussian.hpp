#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace fcs {

/// Exact complex number a + b*i with arbitrary-precision rational parts.
///
/// This is the lambda-free coefficient field used for disk coefficients,
/// test-function values and every renormalized pairing.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = mpq_class(0));

  static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }
  /// p^e for integer e of either sign.
  static GaussianRational power_of(long p, long e);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = a^2 + b^2, exact.
  mpq_class norm_squared() const { return mpq_class(re_ * re_ + im_ * im_); }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Renders `5/6`, `-i`, `1/2+3/4*i`; parsable by parse_scalar.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Exact p^e in Q (e may be negative).
mpq_class rational_power(long p, long e);

}  // namespace fcs
