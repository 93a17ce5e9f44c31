#include "fcs/padic_fn.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fcs {

namespace {

std::size_t level_size(unsigned p, int k) { return static_cast<std::size_t>(checked_power(p, static_cast<std::size_t>(k))); }

std::size_t index_of(const Word& w) { return static_cast<std::size_t>(w.to_padic_integer()); }

}  // namespace

TestFunction::TestFunction(unsigned p, int level) : p_(p), level_(level) {
  if (p_ < 2) throw std::invalid_argument("TestFunction: p must be >= 2");
  if (level_ < 0) throw std::invalid_argument("TestFunction: negative level");
  values_.resize(level_size(p_, level_));
}

TestFunction::TestFunction(unsigned p, int level, std::vector<GaussianRational> values)
    : p_(p), level_(level), values_(std::move(values)) {
  if (p_ < 2) throw std::invalid_argument("TestFunction: p must be >= 2");
  if (level_ < 0) throw std::invalid_argument("TestFunction: negative level");
  if (values_.size() != level_size(p_, level_)) throw std::invalid_argument("TestFunction: need p^level values");
}

TestFunction TestFunction::constant(unsigned p, GaussianRational c) { return TestFunction(p, 0, {std::move(c)}); }

const GaussianRational& TestFunction::value(const Word& center) const {
  if (center.p() != p_ || static_cast<int>(center.length()) != level_) {
    throw std::invalid_argument("TestFunction::value: expected a length-" + std::to_string(level_) + " word");
  }
  return values_[index_of(center)];
}

void TestFunction::set(const Word& center, GaussianRational v) {
  if (center.p() != p_ || static_cast<int>(center.length()) != level_) {
    throw std::invalid_argument("TestFunction::set: expected a length-" + std::to_string(level_) + " word");
  }
  values_[index_of(center)] = std::move(v);
}

TestFunction& TestFunction::operator+=(const TestFunction& o) {
  if (o.p_ != p_) throw std::invalid_argument("TestFunction: p mismatch");
  const int level = std::max(level_, o.level_);
  TestFunction a = refine(*this, level);
  const TestFunction b = refine(o, level);
  for (std::size_t n = 0; n < a.values_.size(); ++n) a.values_[n] += b.values_[n];
  *this = std::move(a);
  return *this;
}

TestFunction& TestFunction::operator*=(const GaussianRational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool operator==(const TestFunction& a, const TestFunction& b) {
  if (a.p_ != b.p_) return false;
  const int level = std::max(a.level_, b.level_);
  return refine(a, level).values_ == refine(b, level).values_;
}

TestFunction indicator(const Word& I, int level) {
  const int len = static_cast<int>(I.length());
  if (level < len) throw std::invalid_argument("indicator: level below |I|");
  std::vector<GaussianRational> values(level_size(I.p(), level));
  const std::size_t base = index_of(I);
  const std::size_t stride = level_size(I.p(), len);
  const std::size_t count = level_size(I.p(), level - len);
  for (std::size_t j = 0; j < count; ++j) values[base + j * stride] = 1;
  return TestFunction(I.p(), level, std::move(values));
}

TestFunction indicator(const Word& I) { return indicator(I, static_cast<int>(I.length())); }

TestFunction refine(const TestFunction& f, int level) {
  if (level < f.level()) throw std::invalid_argument("refine: target level below current level");
  if (level == f.level()) return f;
  const std::size_t coarse = f.values().size();
  std::vector<GaussianRational> values(level_size(f.p(), level));
  for (std::size_t n = 0; n < values.size(); ++n) values[n] = f.values()[n % coarse];
  return TestFunction(f.p(), level, std::move(values));
}

TestFunction product(const TestFunction& f, const TestFunction& g) {
  if (f.p() != g.p()) throw std::invalid_argument("product: p mismatch");
  const int level = std::max(f.level(), g.level());
  const TestFunction a = refine(f, level);
  const TestFunction b = refine(g, level);
  std::vector<GaussianRational> values(a.values().size());
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (a.values()[n].is_zero() || b.values()[n].is_zero()) continue;
    values[n] = a.values()[n] * b.values()[n];
  }
  return TestFunction(f.p(), level, std::move(values));
}

GaussianRational haar_integral(const TestFunction& f) {
  GaussianRational acc;
  for (const auto& v : f.values()) acc += v;
  return acc * GaussianRational::power_of(static_cast<long>(f.p()), -f.level());
}

GaussianRational l2_inner(const TestFunction& f, const TestFunction& g) {
  if (f.p() != g.p()) throw std::invalid_argument("l2_inner: p mismatch");
  const int level = std::max(f.level(), g.level());
  const TestFunction a = refine(f, level);
  const TestFunction b = refine(g, level);
  GaussianRational acc;
  for (std::size_t n = 0; n < a.values().size(); ++n) {
    if (a.values()[n].is_zero() || b.values()[n].is_zero()) continue;
    acc += a.values()[n].conj() * b.values()[n];
  }
  return acc * GaussianRational::power_of(static_cast<long>(f.p()), -level);
}

GaussianRational evaluate(const TestFunction& f, const PAdicPoint& x) {
  if (x.p() != f.p()) throw std::invalid_argument("evaluate: p mismatch");
  if (static_cast<int>(x.resolution()) < f.level()) {
    throw std::invalid_argument("evaluate: point resolution " + std::to_string(x.resolution()) + " below level " +
                                std::to_string(f.level()));
  }
  return f.value(x.truncation(static_cast<std::size_t>(f.level())));
}

GaussianRational gf_pair(const GeneralizedFunction& u, const TestFunction& f) {
  if (u.p() != f.p()) throw std::invalid_argument("gf_pair: p mismatch");
  if (u.depth() < f.level()) {
    throw std::invalid_argument("gf_pair: functional depth " + std::to_string(u.depth()) + " below test level " +
                                std::to_string(f.level()));
  }
  const auto& psi = u.coefficients().level(f.level());
  GaussianRational acc;
  for (std::size_t n = 0; n < psi.size(); ++n) {
    if (f.values()[n].is_zero()) continue;
    acc += f.values()[n] * psi[n];
  }
  return acc;
}

GeneralizedFunction gf_delta(const PAdicPoint& x, int depth) {
  return GeneralizedFunction(delta_disk_coefficients(x, depth));
}

DkNorm dk_functional_norm(const GeneralizedFunction& u, int k) {
  if (k < 0 || k > u.depth()) throw std::out_of_range("dk_functional_norm: level outside [0, depth]");
  DkNorm best{mpq_class(-1), Word(u.p())};
  for (int level = 0; level <= k; ++level) {
    const auto& psi = u.coefficients().level(level);
    for (std::size_t n = 0; n < psi.size(); ++n) {
      const mpq_class m = psi[n].norm_squared();
      if (m < best.modulus_squared) continue;
      Word w = Word::from_index(u.p(), static_cast<std::size_t>(level), n);
      if (m > best.modulus_squared || w < best.argmax) best = DkNorm{m, std::move(w)};
    }
  }
  return best;
}

}  // namespace fcs
