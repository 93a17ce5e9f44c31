#include "fcs/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcs {

FockVector::FockVector(unsigned p, int depth) : FockVector(p, depth, depth) {}

FockVector::FockVector(unsigned p, int depth, int guarantee) : p_(p), depth_(depth), guarantee_(guarantee) {
  if (p_ < 2) throw std::invalid_argument("FockVector: p must be >= 2");
  if (depth_ < 0) throw std::invalid_argument("FockVector: depth must be >= 0");
  set_guarantee(guarantee);
}

FockVector FockVector::basis(const Word& w, int depth) {
  FockVector v(w.p(), depth);
  v.set(w, Scalar(1));
  return v;
}

void FockVector::set_guarantee(int g) {
  if (g < -1 || g > depth_) throw std::invalid_argument("FockVector: guarantee must lie in [-1, depth]");
  guarantee_ = g;
}

void FockVector::check_word(const Word& w) const {
  if (w.p() != p_) throw std::invalid_argument("FockVector: word has p=" + std::to_string(w.p()) + ", vector has p=" + std::to_string(p_));
  if (static_cast<int>(w.length()) > depth_) {
    throw std::invalid_argument("FockVector: word " + w.to_string() + " exceeds depth " + std::to_string(depth_));
  }
}

Scalar FockVector::coefficient(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void FockVector::set(const Word& w, Scalar value) {
  check_word(w);
  if (value.is_zero()) {
    coeffs_.erase(w);
  } else {
    coeffs_.insert_or_assign(w, std::move(value));
  }
}

void FockVector::add(const Word& w, const Scalar& value) {
  if (value.is_zero()) return;
  check_word(w);
  auto [it, inserted] = coeffs_.try_emplace(w, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) coeffs_.erase(it);
}

FockVector FockVector::conj() const {
  FockVector out(p_, depth_, guarantee_);
  for (const auto& [w, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), w, c.conj());
  return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.p_ != p_) throw std::invalid_argument("FockVector: p mismatch");
  depth_ = std::max(depth_, o.depth_);
  guarantee_ = std::min(guarantee_, o.guarantee_);
  for (const auto& [w, c] : o.coeffs_) add(w, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (o.p_ != p_) throw std::invalid_argument("FockVector: p mismatch");
  depth_ = std::max(depth_, o.depth_);
  guarantee_ = std::min(guarantee_, o.guarantee_);
  for (const auto& [w, c] : o.coeffs_) add(w, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, x] : coeffs_) x *= c;
  return *this;
}

FockVector vacuum(unsigned p, int depth) { return FockVector::basis(Word(p), depth); }

FockVector create(Digit i, const FockVector& v) {
  if (i >= v.p()) throw std::invalid_argument("create: digit out of range");
  FockVector out(v.p(), v.depth(), std::min(v.guarantee() + 1, v.depth()));
  for (const auto& [w, c] : v.coefficients()) {
    if (static_cast<int>(w.length()) + 1 > v.depth()) continue;
    out.set(w.appended(i), c);
  }
  return out;
}

FockVector annihilate(Digit i, const FockVector& v) {
  if (i >= v.p()) throw std::invalid_argument("annihilate: digit out of range");
  FockVector out(v.p(), v.depth(), std::max(v.guarantee() - 1, -1));
  for (const auto& [w, c] : v.coefficients()) {
    if (w.empty() || w.digits().back() != i) continue;
    out.set(w.prefix(w.length() - 1), c);
  }
  return out;
}

FockVector total_annihilate(const FockVector& v) {
  FockVector out(v.p(), v.depth(), std::max(v.guarantee() - 1, -1));
  for (const auto& [w, c] : v.coefficients()) {
    if (w.empty()) continue;
    out.add(w.prefix(w.length() - 1), c);
  }
  return out;
}

FockVector averaged_create(const FockVector& v) {
  const Scalar weight(GaussianRational(mpq_class(1, v.p())));
  FockVector out(v.p(), v.depth(), std::min(v.guarantee() + 1, v.depth()));
  for (const auto& [w, c] : v.coefficients()) {
    if (static_cast<int>(w.length()) + 1 > v.depth()) continue;
    const Scalar share = c * weight;
    for (Digit i = 0; i < v.p(); ++i) out.set(w.appended(i), share);
  }
  return out;
}

namespace {

template <bool Conjugate>
Scalar pairing_impl(const FockVector& u, const FockVector& v) {
  if (u.p() != v.p()) throw std::invalid_argument("inner_product: p mismatch");
  const auto& small = u.support_size() <= v.support_size() ? u.coefficients() : v.coefficients();
  const auto& large = u.support_size() <= v.support_size() ? v.coefficients() : u.coefficients();
  const bool u_is_small = &small == &u.coefficients();
  Scalar acc;
  for (const auto& [w, c] : small) {
    auto it = large.find(w);
    if (it == large.end()) continue;
    const Scalar& uc = u_is_small ? c : it->second;
    const Scalar& vc = u_is_small ? it->second : c;
    if constexpr (Conjugate) {
      acc += uc.conj() * vc;
    } else {
      acc += uc * vc;
    }
  }
  return acc;
}

}  // namespace

Scalar inner_product(const FockVector& u, const FockVector& v) { return pairing_impl<true>(u, v); }

Scalar bilinear_pairing(const FockVector& u, const FockVector& v) { return pairing_impl<false>(u, v); }

FockVector level_component(const FockVector& v, int k) {
  if (k < 0 || k > v.depth()) throw std::out_of_range("level_component: level outside [0, depth]");
  FockVector out(v.p(), v.depth(), v.guarantee());
  for (const auto& [w, c] : v.coefficients()) {
    if (static_cast<int>(w.length()) != k) continue;
    Scalar reduced = c.divided_by_lambda_power(k);
    if (reduced.denominator().valuation() > 0) {
      throw std::domain_error("level_component: coefficient " + c.to_string() + " on " + w.to_string() +
                              " is not divisible by L^" + std::to_string(k));
    }
    out.set(w, std::move(reduced));
  }
  return out;
}

}  // namespace fcs
