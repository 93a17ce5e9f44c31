#include "fcs/gaussian.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fcs {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::power_of(long p, long e) { return {rational_power(p, e)}; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  if (sgn(o.re_) != 0) re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  if (sgn(o.re_) != 0) re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm_squared();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag_part;
  const mpq_class mag = abs(im_);
  if (mag == 1) {
    imag_part = "i";
  } else {
    imag_part = mag.get_str() + "*i";
  }
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag_part;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag_part;
}

namespace {

mpq_class compute_power(long p, long e) {
  mpz_class base(p);
  mpz_class r;
  const unsigned long mag = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), mag);
  if (e >= 0) return mpq_class(r);
  mpq_class q(mpz_class(1), r);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class rational_power(long p, long e) {
  // Small powers of small primes recur constantly in the pairings.
  constexpr long kMaxBase = 64;
  constexpr long kMaxExp = 64;
  if (p < 0 || p >= kMaxBase || e <= -kMaxExp || e >= kMaxExp) return compute_power(p, e);
  thread_local std::vector<std::optional<mpq_class>> cache(static_cast<std::size_t>(kMaxBase * (2 * kMaxExp - 1)));
  auto& slot = cache[static_cast<std::size_t>(p * (2 * kMaxExp - 1) + e + kMaxExp - 1)];
  if (!slot) slot = compute_power(p, e);
  return *slot;
}

}  // namespace fcs
