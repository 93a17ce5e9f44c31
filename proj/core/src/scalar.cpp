#include "fcs/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace fcs {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial Polynomial::monomial(GaussianRational c, int k) {
  if (k < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
  if (c.is_zero()) return {};
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = std::move(c);
  Polynomial out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Polynomial::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

bool Polynomial::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

GaussianRational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::conj() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial out;
  if (k > 0) {
    out.coeffs_.assign(static_cast<std::size_t>(k), GaussianRational());
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
  }
  const int drop = -k;
  if (valuation() < drop) throw std::invalid_argument("Polynomial::shifted: not divisible by L^k");
  out.coeffs_.assign(coeffs_.begin() + drop, coeffs_.end());
  return out;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

GaussianRational Polynomial::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

GaussianRational Polynomial::evaluate_square(const GaussianRational& t) const {
  if (!is_even()) throw std::invalid_argument("Polynomial::evaluate_square: odd powers of L present");
  GaussianRational acc;
  for (int k = degree(); k >= 0; k -= 1) {
    if (k % 2 != 0) continue;
    acc *= t;
    acc += coeffs_[static_cast<std::size_t>(k)];
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero polynomial");
  r = a;
  q = Polynomial();
  if (a.degree() < b.degree()) return;
  std::vector<GaussianRational> qc(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const GaussianRational& lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    GaussianRational c = r.leading() / lead;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[static_cast<std::size_t>(shift) + j] -= c * b.coeffs_[j];
    }
    // The leading term cancels exactly; drop it even if trim would.
    r.coeffs_.pop_back();
    r.trim();
    qc[static_cast<std::size_t>(shift)] = std::move(c);
  }
  q = Polynomial(std::move(qc));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q;
    Polynomial r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const GaussianRational inv = GaussianRational(1) / a.leading();
  return a.scaled(inv);
}

// -------------------------------------------------------------------- Scalar

Scalar::Scalar(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}

Scalar::Scalar(Polynomial num) : num_(std::move(num)), den_(GaussianRational(1)) {}

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

Scalar Scalar::lambda_power(int k) {
  if (k >= 0) return Scalar(Polynomial::monomial(GaussianRational(1), k));
  return Scalar(Polynomial(GaussianRational(1)), Polynomial::monomial(GaussianRational(1), -k));
}

void Scalar::normalize() {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  if (den_.is_constant()) {
    if (!den_.leading().is_one()) num_ = num_.scaled(GaussianRational(1) / den_.leading());
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  const int dv = den_.valuation();
  if (dv == den_.degree()) {
    // Monomial denominator: the gcd is a power of L.
    const int k = std::min(dv, num_.valuation());
    num_ = num_.shifted(-k);
    den_ = den_.shifted(-k);
  } else {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      Polynomial q;
      Polynomial r;
      Polynomial::divmod(num_, g, q, r);
      num_ = std::move(q);
      Polynomial::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  if (!den_.leading().is_one()) {
    const GaussianRational inv = GaussianRational(1) / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

GaussianRational Scalar::constant() const {
  if (!is_lambda_free()) throw std::invalid_argument("Scalar::constant: value depends on L: " + to_string());
  return num_.coefficient(0);
}

Scalar Scalar::conj() const {
  Scalar out;
  out.num_ = num_.conj();
  out.den_ = den_.conj();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar Scalar::divided_by_lambda_power(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (is_polynomial() && k > 0 && num_.valuation() >= k) {
    Scalar out;
    out.num_ = num_.shifted(-k);
    out.den_ = den_;
    return out;
  }
  return *this * lambda_power(-k);
}

GaussianRational Scalar::evaluate(const GaussianRational& x) const {
  const GaussianRational d = den_.evaluate(x);
  if (d.is_zero()) throw std::domain_error("Scalar::evaluate: pole at L = " + x.to_string());
  return num_.evaluate(x) / d;
}

std::complex<double> Scalar::evaluate(double x) const {
  const std::complex<double> d = den_.evaluate(std::complex<double>(x, 0.0));
  if (d == std::complex<double>(0.0, 0.0)) throw std::domain_error("Scalar::evaluate: pole");
  return num_.evaluate(std::complex<double>(x, 0.0)) / d;
}

GaussianRational Scalar::evaluate_at_square(const GaussianRational& t) const {
  if (!num_.is_even() || !den_.is_even()) {
    throw std::invalid_argument("Scalar::evaluate_at_square: not an even function of L");
  }
  const GaussianRational d = den_.evaluate_square(t);
  if (d.is_zero()) throw std::domain_error("Scalar::evaluate_at_square: pole at L^2 = " + t.to_string());
  return num_.evaluate_square(t) / d;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = num_.scaled(GaussianRational(-1));
  return out;
}

namespace {

mpz_class denominator_lcm(const Polynomial& poly, mpz_class acc) {
  for (const auto& c : poly.coefficients()) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.real().get_den_mpz_t());
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.imag().get_den_mpz_t());
  }
  return acc;
}

std::string render_polynomial(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  const auto& coeffs = poly.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const GaussianRational& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string term;
    const bool mixed = sgn(c.real()) != 0 && !c.is_real();
    if (k == 0) {
      term = mixed ? "(" + c.to_string() + ")" : c.to_string();
    } else {
      if (c.is_one()) {
        term.clear();
      } else if (c == GaussianRational(-1)) {
        term = "-";
      } else if (mixed) {
        term = "(" + c.to_string() + ")*";
      } else {
        term = c.to_string() + "*";
      }
      term += k == 1 ? "L" : "L^" + std::to_string(k);
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_scalar: " + why + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) negative = true;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (negative && base.is_zero()) fail("zero to a negative power");
    return base.pow(negative ? -e : e);
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'i') {
      ++pos_;
      return Scalar(GaussianRational::imaginary_unit());
    }
    if (c == 'L') {
      ++pos_;
      return Scalar::lambda();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return Scalar(GaussianRational(mpq_class(n)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Scalar::to_string() const {
  if (is_lambda_free()) return constant().to_string();
  mpz_class m = denominator_lcm(den_, denominator_lcm(num_, mpz_class(1)));
  const GaussianRational scale{mpq_class(m)};
  const Polynomial num = num_.scaled(scale);
  const Polynomial den = den_.scaled(scale);
  if (den == Polynomial(GaussianRational(1))) return render_polynomial(num);
  return "(" + render_polynomial(num) + ")/(" + render_polynomial(den) + ")";
}

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

GaussianRational parse_gaussian(std::string_view text) {
  const Scalar s = parse_scalar(text);
  if (!s.is_lambda_free()) throw std::invalid_argument("parse_gaussian: value depends on L: " + std::string(text));
  return s.constant();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", x);
  return buf;
}

// ------------------------------------------------------ GeometricSeriesValue

GeometricSeriesValue::GeometricSeriesValue(int p, Scalar polynomial_part, GaussianRational tail_constant,
                                           int tail_start)
    : p_(p), poly_(std::move(polynomial_part)), tail_c_(std::move(tail_constant)), tail_k_(tail_start) {
  if (p_ < 2) throw std::invalid_argument("GeometricSeriesValue: p must be >= 2");
  if (tail_k_ < 0) throw std::invalid_argument("GeometricSeriesValue: negative tail start");
  if (!poly_.is_polynomial()) throw std::invalid_argument("GeometricSeriesValue: polynomial part has a pole");
}

Scalar GeometricSeriesValue::to_scalar() const {
  const Scalar ratio = Scalar::lambda_power(2) * Scalar(GaussianRational(mpq_class(1, p_)));
  const Scalar head = Scalar(tail_c_ * GaussianRational::power_of(p_, tail_k_)) * ratio.pow(tail_k_ + 1);
  return poly_ + head / (Scalar(1) - ratio);
}

std::complex<double> GeometricSeriesValue::prelimit(double t) const {
  if (!(t > 0.0) || !(t < static_cast<double>(p_))) {
    throw std::domain_error("GeometricSeriesValue::prelimit: L^2 must lie in (0, p); the series diverges at L^2 >= p");
  }
  const double r = t / static_cast<double>(p_);
  const std::complex<double> head = poly_.evaluate(std::sqrt(t));
  const double tail_scale = std::pow(static_cast<double>(p_), tail_k_) * std::pow(r, tail_k_ + 1);
  return (1.0 - r) * head + tail_c_.to_complex() * tail_scale;
}

GaussianRational GeometricSeriesValue::prelimit_exact(const mpq_class& t) const {
  if (sgn(t) < 0 || t >= p_) throw std::domain_error("GeometricSeriesValue::prelimit_exact: L^2 must lie in [0, p)");
  const mpq_class r = t / p_;
  mpq_class r_pow(1);
  for (int k = 0; k <= tail_k_; ++k) r_pow *= r;
  const GaussianRational head = poly_.numerator().evaluate_square(GaussianRational(t));
  return GaussianRational(mpq_class(1 - r)) * head +
         tail_c_ * GaussianRational(mpq_class(rational_power(p_, tail_k_) * r_pow));
}

std::string GeometricSeriesValue::to_string() const {
  return "P(L) = " + poly_.to_string() + " ; tail = " + tail_c_.to_string() + " * sum_{k>" +
         std::to_string(tail_k_) + "} (L^2/" + std::to_string(p_) + ")^k * " + std::to_string(p_) + "^" +
         std::to_string(tail_k_);
}

GaussianRational renormalized_limit(const GeometricSeriesValue& g) {
  return g.tail_constant() * GaussianRational::power_of(g.p(), g.tail_start());
}

}  // namespace fcs
