#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "fcs/gaussian.hpp"

namespace fcs {

/// Polynomial in the formal eigenvalue L (lambda) with Gaussian-rational
/// coefficients, lowest degree first. Trailing zero coefficients are trimmed,
/// so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  explicit Polynomial(GaussianRational constant);
  /// c * L^k
  static Polynomial monomial(GaussianRational c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Smallest k with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_even() const;
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(int k) const;
  const GaussianRational& leading() const { return coeffs_.back(); }

  Polynomial conj() const;
  /// Multiplies by L^k (k may be negative when the low coefficients vanish).
  Polynomial shifted(int k) const;
  Polynomial scaled(const GaussianRational& c) const;

  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;
  /// Requires an even polynomial; evaluates at L^2 = t.
  GaussianRational evaluate_square(const GaussianRational& t) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Exact rational function of L over the Gaussian rationals.
///
/// Always stored reduced: gcd(num, den) = 1 and den is monic, which makes the
/// representation canonical and equality structural.
class Scalar {
 public:
  Scalar() : num_(), den_(GaussianRational(1)) {}
  Scalar(long c) : Scalar(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational c);                      // NOLINT(google-explicit-constructor)
  Scalar(Polynomial num, Polynomial den);
  explicit Scalar(Polynomial num);

  static Scalar lambda() { return Scalar(Polynomial::monomial(GaussianRational(1), 1)); }
  static Scalar lambda_power(int k);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_lambda_free() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a lambda-free scalar; throws std::invalid_argument otherwise.
  GaussianRational constant() const;

  /// Conjugates the coefficients; L is real.
  Scalar conj() const;
  /// Throws std::domain_error for zero.
  Scalar inverse() const;
  Scalar pow(int e) const;
  /// Divides by L^k; cheap when this is a polynomial.
  Scalar divided_by_lambda_power(int k) const;

  /// Value at L = x. Throws std::domain_error at a pole.
  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<double> evaluate(double x) const;
  /// Value at L^2 = t for even functions of L; exact pole detection.
  /// Throws std::invalid_argument for non-even scalars and std::domain_error at a pole.
  GaussianRational evaluate_at_square(const GaussianRational& t) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// `num/den` with L for lambda, integer coefficients, e.g. `(1+L^2)/(2)`.
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Parses the scalar expression grammar: rational literals, `i`, `L`,
/// `+ - * / ^` and parentheses. Throws std::invalid_argument on bad input.
Scalar parse_scalar(std::string_view text);
/// parse_scalar restricted to lambda-free values.
GaussianRational parse_gaussian(std::string_view text);

/// Formats a double in scientific notation with 15 significant digits.
std::string format_double(double x);

/// A pairing series split as P(L) + c * sum_{k>K} (L^2/p)^k * p^K.
///
/// P is a polynomial; the tail is the geometric series whose closed form has
/// its only pole at L^2 = p.
class GeometricSeriesValue {
 public:
  GeometricSeriesValue(int p, Scalar polynomial_part, GaussianRational tail_constant, int tail_start);

  int p() const { return p_; }
  const Scalar& polynomial_part() const { return poly_; }
  const GaussianRational& tail_constant() const { return tail_c_; }
  int tail_start() const { return tail_k_; }

  /// Closed form as a single rational function of L.
  Scalar to_scalar() const;
  /// (1 - t/p) * value at L^2 = t, 0 < t < p; throws std::domain_error outside.
  std::complex<double> prelimit(double t) const;
  /// Exact (1 - t/p) * value at rational L^2 = t, 0 <= t < p.
  GaussianRational prelimit_exact(const mpq_class& t) const;

  std::string to_string() const;

 private:
  int p_;
  Scalar poly_;
  GaussianRational tail_c_;
  int tail_k_;
};

/// lim_{L^2 -> p-} (1 - L^2/p) * g  =  p^K * c.
GaussianRational renormalized_limit(const GeometricSeriesValue& g);

}  // namespace fcs
