#include "fcs/coherent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace fcs {

namespace {

std::size_t level_size(unsigned p, int k) { return static_cast<std::size_t>(checked_power(p, static_cast<std::size_t>(k))); }

Word concat(const Word& a, const Word& b) {
  std::vector<Digit> digits = a.digits();
  digits.insert(digits.end(), b.digits().begin(), b.digits().end());
  return Word(a.p(), std::move(digits));
}

std::size_t prefix_index(const Word& w, std::size_t k) {
  std::size_t idx = 0;
  std::size_t scale = 1;
  for (std::size_t j = 0; j < k; ++j) {
    idx += w.digits()[j] * scale;
    scale *= w.p();
  }
  return idx;
}

Scalar monomial(const GaussianRational& c, int k) { return Scalar(Polynomial::monomial(c, k)); }

/// Builds P(L) = sum_{k<=M} S_k p^{-k} L^{2k} and the tail from S_0..S_{M+1}.
GeometricSeriesValue assemble_series(unsigned p, const std::vector<GaussianRational>& stabilized, int top) {
  if (!(stabilized[static_cast<std::size_t>(top)] == stabilized[static_cast<std::size_t>(top) + 1])) {
    throw std::logic_error("pairing_series: stabilized level pairing changed between levels " + std::to_string(top) +
                           " and " + std::to_string(top + 1) + ": " +
                           stabilized[static_cast<std::size_t>(top)].to_string() + " vs " +
                           stabilized[static_cast<std::size_t>(top) + 1].to_string());
  }
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(2 * top + 1));
  for (int k = 0; k <= top; ++k) {
    coeffs[static_cast<std::size_t>(2 * k)] =
        stabilized[static_cast<std::size_t>(k)] * GaussianRational::power_of(static_cast<long>(p), -k);
  }
  GaussianRational tail = stabilized[static_cast<std::size_t>(top)] * GaussianRational::power_of(static_cast<long>(p), -top);
  return GeometricSeriesValue(static_cast<int>(p), Scalar(Polynomial(std::move(coeffs))), std::move(tail), top);
}

}  // namespace

// --------------------------------------------------------- DiskCoefficients

std::optional<Word> cascade_defect(unsigned p, const LevelArrays& levels) {
  if (levels.empty()) throw std::invalid_argument("cascade_defect: no levels");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].size() != level_size(p, static_cast<int>(k))) {
      throw std::invalid_argument("cascade_defect: level " + std::to_string(k) + " has the wrong size");
    }
  }
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const std::size_t stride = levels[k].size();
    for (std::size_t n = 0; n < stride; ++n) {
      GaussianRational sum;
      for (std::size_t j = 0; j < p; ++j) sum += levels[k + 1][n + j * stride];
      if (!(sum == levels[k][n])) return Word::from_index(p, k, n);
    }
  }
  return std::nullopt;
}

DiskCoefficients::DiskCoefficients(unsigned p, LevelArrays levels) : p_(p), levels_(std::move(levels)) {
  if (p_ < 2) throw std::invalid_argument("DiskCoefficients: p must be >= 2");
  if (auto bad = cascade_defect(p_, levels_)) {
    throw std::invalid_argument("DiskCoefficients: cascade relation fails at word " + bad->to_string());
  }
}

DiskCoefficients DiskCoefficients::zero(unsigned p, int depth) {
  if (depth < 0) throw std::invalid_argument("DiskCoefficients: depth must be >= 0");
  LevelArrays levels(static_cast<std::size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k) levels[static_cast<std::size_t>(k)].resize(level_size(p, k));
  return DiskCoefficients(Unchecked{}, p, std::move(levels));
}

const GaussianRational& DiskCoefficients::value(const Word& w) const {
  if (w.p() != p_) throw std::invalid_argument("DiskCoefficients::value: p mismatch");
  if (static_cast<int>(w.length()) > depth()) {
    throw std::out_of_range("DiskCoefficients::value: word " + w.to_string() + " deeper than " + std::to_string(depth()));
  }
  return levels_[w.length()][prefix_index(w, w.length())];
}

DiskCoefficients DiskCoefficients::extended(int extra_levels) const {
  LevelArrays levels = levels_;
  const GaussianRational share(mpq_class(1, p_));
  for (int e = 0; e < extra_levels; ++e) {
    const auto& leaf = levels.back();
    std::vector<GaussianRational> next(leaf.size() * p_);
    for (std::size_t n = 0; n < leaf.size(); ++n) {
      const GaussianRational v = leaf[n] * share;
      for (std::size_t j = 0; j < p_; ++j) next[n + j * leaf.size()] = v;
    }
    levels.push_back(std::move(next));
  }
  return DiskCoefficients(Unchecked{}, p_, std::move(levels));
}

DiskCoefficients DiskCoefficients::truncated(int depth) const {
  if (depth < 0 || depth > this->depth()) throw std::out_of_range("DiskCoefficients::truncated: bad depth");
  return DiskCoefficients(Unchecked{}, p_, LevelArrays(levels_.begin(), levels_.begin() + depth + 1));
}

DiskCoefficients DiskCoefficients::conj() const {
  LevelArrays levels = levels_;
  for (auto& level : levels) {
    for (auto& v : level) v = v.conj();
  }
  return DiskCoefficients(Unchecked{}, p_, std::move(levels));
}

DiskCoefficients& DiskCoefficients::operator+=(const DiskCoefficients& o) {
  if (o.p_ != p_ || o.depth() != depth()) throw std::invalid_argument("DiskCoefficients: shape mismatch");
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    for (std::size_t n = 0; n < levels_[k].size(); ++n) levels_[k][n] += o.levels_[k][n];
  }
  return *this;
}

DiskCoefficients& DiskCoefficients::operator*=(const GaussianRational& c) {
  for (auto& level : levels_) {
    for (auto& v : level) v *= c;
  }
  return *this;
}

DiskCoefficients cascade_from_leaves(unsigned p, std::vector<GaussianRational> leaves, int depth) {
  if (depth < 0) throw std::invalid_argument("cascade_from_leaves: negative depth");
  if (leaves.size() != level_size(p, depth)) throw std::invalid_argument("cascade_from_leaves: need p^D leaves");
  LevelArrays levels(static_cast<std::size_t>(depth) + 1);
  levels.back() = std::move(leaves);
  for (int k = depth - 1; k >= 0; --k) {
    const std::size_t stride = level_size(p, k);
    auto& parent = levels[static_cast<std::size_t>(k)];
    const auto& child = levels[static_cast<std::size_t>(k) + 1];
    parent.resize(stride);
    for (std::size_t n = 0; n < stride; ++n) {
      for (std::size_t j = 0; j < p; ++j) parent[n] += child[n + j * stride];
    }
  }
  return DiskCoefficients(p, std::move(levels));
}

DiskCoefficients cascade_from_leaves(unsigned p, int depth, const std::map<Word, GaussianRational>& leaves) {
  std::vector<GaussianRational> dense(level_size(p, depth));
  for (const auto& [w, v] : leaves) {
    if (w.p() != p || static_cast<int>(w.length()) != depth) {
      throw std::invalid_argument("cascade_from_leaves: leaf " + w.to_string() + " is not a length-" +
                                  std::to_string(depth) + " word");
    }
    dense[prefix_index(w, w.length())] = v;
  }
  return cascade_from_leaves(p, std::move(dense), depth);
}

// ------------------------------------------------------------- XCombination

XCombination::XCombination(unsigned p) : p_(p) {
  if (p_ < 2) throw std::invalid_argument("XCombination: p must be >= 2");
}

XCombination XCombination::single(const Word& I, GaussianRational c) {
  XCombination v(I.p());
  v.add(I, c);
  return v;
}

int XCombination::max_length() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, static_cast<int>(w.length()));
  return m;
}

void XCombination::add(const Word& I, const GaussianRational& c) {
  if (I.p() != p_) throw std::invalid_argument("XCombination: p mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(I, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

XCombination XCombination::conj() const {
  XCombination out(p_);
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, c.conj());
  return out;
}

std::map<Word, GaussianRational, ShortlexOrder> XCombination::level_coefficients(int k) const {
  std::map<Word, GaussianRational, ShortlexOrder> out;
  auto accumulate = [&out](const Word& w, const GaussianRational& c) {
    auto [it, inserted] = out.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [I, c] : terms_) {
    const int len = static_cast<int>(I.length());
    if (len >= k) {
      accumulate(I.prefix(static_cast<std::size_t>(k)), c);
      continue;
    }
    const int m = k - len;
    const GaussianRational weight = c * GaussianRational::power_of(static_cast<long>(p_), -m);
    const std::size_t count = level_size(p_, m);
    for (std::size_t n = 0; n < count; ++n) {
      accumulate(concat(I, Word::from_index(p_, static_cast<std::size_t>(m), n)), weight);
    }
  }
  return out;
}

XCombination XCombination::canonicalized(int level) const {
  XCombination out(p_);
  for (const auto& [I, c] : terms_) {
    const int len = static_cast<int>(I.length());
    if (len >= level) {
      out.add(I, c);
      continue;
    }
    const int m = level - len;
    const GaussianRational weight = c * GaussianRational::power_of(static_cast<long>(p_), -m);
    const std::size_t count = level_size(p_, m);
    for (std::size_t n = 0; n < count; ++n) out.add(concat(I, Word::from_index(p_, static_cast<std::size_t>(m), n)), weight);
  }
  return out;
}

XCombination& XCombination::operator+=(const XCombination& o) {
  if (o.p_ != p_) throw std::invalid_argument("XCombination: p mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

XCombination& XCombination::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

bool equivalent(const XCombination& a, const XCombination& b) {
  if (a.p() != b.p()) return false;
  const int level = std::max({a.max_length(), b.max_length(), 0});
  return a.canonicalized(level) == b.canonicalized(level);
}

// ------------------------------------------------------------ constructions

DiskCoefficients x_disk_coefficients(const Word& I, int depth) {
  const int len = static_cast<int>(I.length());
  if (len > depth) throw std::invalid_argument("x_disk_coefficients: |I| exceeds depth");
  const unsigned p = I.p();
  LevelArrays levels(static_cast<std::size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k) levels[static_cast<std::size_t>(k)].resize(level_size(p, k));
  for (int k = 0; k <= len; ++k) levels[static_cast<std::size_t>(k)][prefix_index(I, static_cast<std::size_t>(k))] = 1;
  const std::size_t base = prefix_index(I, I.length());
  const std::size_t stride = level_size(p, len);
  for (int k = len + 1; k <= depth; ++k) {
    const GaussianRational v = GaussianRational::power_of(static_cast<long>(p), len - k);
    const std::size_t count = level_size(p, k - len);
    for (std::size_t j = 0; j < count; ++j) levels[static_cast<std::size_t>(k)][base + j * stride] = v;
  }
  return DiskCoefficients(p, std::move(levels));
}

DiskCoefficients delta_disk_coefficients(const PAdicPoint& x, int depth) {
  if (static_cast<int>(x.resolution()) < depth) throw std::invalid_argument("delta: point resolution below depth");
  std::map<Word, GaussianRational> leaves{{x.truncation(static_cast<std::size_t>(depth)), GaussianRational(1)}};
  return cascade_from_leaves(x.p(), depth, leaves);
}

DiskCoefficients combination_disk_coefficients(const XCombination& v, int depth) {
  if (v.max_length() > depth) throw std::invalid_argument("combination_disk_coefficients: term deeper than depth");
  DiskCoefficients acc = DiskCoefficients::zero(v.p(), depth);
  for (const auto& [I, c] : v.terms()) {
    DiskCoefficients term = x_disk_coefficients(I, depth);
    term *= c;
    acc += term;
  }
  return acc;
}

DiskCoefficients riesz_coefficients(const XCombination& v, int depth) {
  return combination_disk_coefficients(v.conj(), depth);
}

FockVector fcs_to_fock(const DiskCoefficients& dc) {
  FockVector out(dc.p(), dc.depth());
  for (int k = 0; k <= dc.depth(); ++k) {
    const auto& level = dc.level(k);
    for (std::size_t n = 0; n < level.size(); ++n) {
      if (level[n].is_zero()) continue;
      out.set(Word::from_index(dc.p(), static_cast<std::size_t>(k), n), monomial(level[n], k));
    }
  }
  return out;
}

FockVector build_x(const Word& I, int depth) {
  const int len = static_cast<int>(I.length());
  if (len > depth) throw std::invalid_argument("build_x: |I| = " + std::to_string(len) + " exceeds depth " + std::to_string(depth));
  const unsigned p = I.p();
  FockVector out(p, depth);
  for (int j = 0; j <= len; ++j) out.set(I.prefix(static_cast<std::size_t>(j)), Scalar::lambda_power(j));
  for (int m = 1; m <= depth - len; ++m) {
    const Scalar c = monomial(GaussianRational::power_of(static_cast<long>(p), -m), len + m);
    const std::size_t count = level_size(p, m);
    for (std::size_t n = 0; n < count; ++n) out.set(concat(I, Word::from_index(p, static_cast<std::size_t>(m), n)), c);
  }
  return out;
}

FockVector build_combination(const XCombination& v, int depth) {
  FockVector out(v.p(), depth);
  for (const auto& [I, c] : v.terms()) out += Scalar(c) * build_x(I, depth);
  return out;
}

FockVector build_delta(const PAdicPoint& x, int depth) {
  if (depth < 0) throw std::invalid_argument("build_delta: negative depth");
  if (static_cast<int>(x.resolution()) < depth) {
    throw std::invalid_argument("build_delta: point resolution " + std::to_string(x.resolution()) + " below depth " +
                                std::to_string(depth));
  }
  FockVector out(x.p(), depth);
  for (int k = 0; k <= depth; ++k) out.set(x.truncation(static_cast<std::size_t>(k)), Scalar::lambda_power(k));
  return out;
}

FockVector eigen_residual(const FockVector& v) { return total_annihilate(v) - Scalar::lambda() * v; }

bool supported_on_level(const FockVector& v, int k) {
  return std::all_of(v.coefficients().begin(), v.coefficients().end(),
                     [k](const auto& entry) { return static_cast<int>(entry.first.length()) == k; });
}

// ----------------------------------------------------------------- pairings

GaussianRational stabilized_level_pairing(const DiskCoefficients& psi, const XCombination& phi, int k) {
  if (psi.p() != phi.p()) throw std::invalid_argument("stabilized_level_pairing: p mismatch");
  if (k < 0 || k > psi.depth()) throw std::out_of_range("stabilized_level_pairing: level beyond depth of psi");
  const unsigned p = psi.p();
  const auto& level = psi.level(k);
  GaussianRational acc;
  for (const auto& [I, c] : phi.terms()) {
    const int len = static_cast<int>(I.length());
    GaussianRational s;
    if (k <= len) {
      s = level[prefix_index(I, static_cast<std::size_t>(k))] * GaussianRational::power_of(static_cast<long>(p), k);
    } else {
      const std::size_t base = prefix_index(I, I.length());
      const std::size_t stride = level_size(p, len);
      const std::size_t count = level_size(p, k - len);
      for (std::size_t j = 0; j < count; ++j) s += level[base + j * stride];
      s *= GaussianRational::power_of(static_cast<long>(p), len);
    }
    acc += c * s;
  }
  return acc;
}

GeometricSeriesValue pairing_series(const DiskCoefficients& psi, const XCombination& phi) {
  if (psi.p() != phi.p()) throw std::invalid_argument("pairing_series: p mismatch");
  const int top = std::max(phi.max_length(), 0);
  if (psi.depth() < top) {
    throw std::invalid_argument("pairing_series: depth " + std::to_string(psi.depth()) +
                                " of the coherent state is below the support depth " + std::to_string(top));
  }
  std::optional<DiskCoefficients> extended;
  if (psi.depth() == top) extended = psi.extended(1);
  const DiskCoefficients& work = extended ? *extended : psi;
  std::vector<GaussianRational> stabilized;
  stabilized.reserve(static_cast<std::size_t>(top) + 2);
  for (int k = 0; k <= top + 1; ++k) stabilized.push_back(stabilized_level_pairing(work, phi, k));
  return assemble_series(psi.p(), stabilized, top);
}

GeometricSeriesValue pairing_series(const FockVector& psi, const XCombination& phi) {
  if (psi.p() != phi.p()) throw std::invalid_argument("pairing_series: p mismatch");
  const int top = std::max(phi.max_length(), 0);
  if (psi.depth() < top + 1 || psi.guarantee() < top + 1) {
    throw std::invalid_argument("pairing_series: Fock vector must be exact to depth " + std::to_string(top + 1));
  }
  const FockVector phi_vec = build_combination(phi, top + 1);
  std::vector<GaussianRational> stabilized;
  for (int k = 0; k <= top + 1; ++k) {
    const Scalar level = bilinear_pairing(level_component(psi, k), level_component(phi_vec, k));
    stabilized.push_back(level.constant() * GaussianRational::power_of(static_cast<long>(psi.p()), k));
  }
  return assemble_series(psi.p(), stabilized, top);
}

GaussianRational renormalized_pairing(const DiskCoefficients& psi, const XCombination& phi) {
  return renormalized_limit(pairing_series(psi, phi));
}

GaussianRational renormalized_pairing(const FockVector& psi, const XCombination& phi) {
  return renormalized_limit(pairing_series(psi, phi));
}

std::complex<double> renormalized_pairing_numeric(const DiskCoefficients& psi, const XCombination& phi,
                                                  double lambda_squared) {
  return pairing_series(psi, phi).prelimit(lambda_squared);
}

LevelArrays induced_coefficients(const FockVector& v, int depth) {
  LevelArrays out(static_cast<std::size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k) {
    const std::size_t count = level_size(v.p(), k);
    const GaussianRational scale = GaussianRational::power_of(static_cast<long>(v.p()), -k);
    out[static_cast<std::size_t>(k)].reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
      const Word I = Word::from_index(v.p(), static_cast<std::size_t>(k), n);
      out[static_cast<std::size_t>(k)].push_back(renormalized_pairing(v, XCombination::single(I)) * scale);
    }
  }
  return out;
}

// -------------------------------------------------------------------- norms

mpq_class NormSeries::partial_sum(const mpq_class& t, int up_to) const {
  if (up_to > last_level()) throw std::out_of_range("NormSeries::partial_sum: level not listed");
  mpq_class acc(0);
  mpq_class t_pow(1);
  for (int k = 0; k <= up_to; ++k) {
    acc += level_norms[static_cast<std::size_t>(k)] * t_pow;
    t_pow *= t;
  }
  return acc;
}

std::optional<mpq_class> NormSeries::closed_form(const mpq_class& t) const {
  if (!tail_ratio || level_norms.empty()) return std::nullopt;
  const int last = last_level();
  const mpq_class& n_last = level_norms.back();
  const mpq_class q = *tail_ratio * t;
  if (sgn(n_last) == 0) return partial_sum(t, last);
  if (q >= 1) return std::nullopt;
  mpq_class t_pow(1);
  for (int k = 0; k < last; ++k) t_pow *= t;
  return mpq_class(partial_sum(t, last) + n_last * t_pow * q / (1 - q));
}

std::optional<GeometricSeriesValue> NormSeries::geometric() const {
  if (!tail_ratio || *tail_ratio != mpq_class(1, p)) return std::nullopt;
  const int last = last_level();
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(2 * last + 1));
  for (int k = 0; k <= last; ++k) coeffs[static_cast<std::size_t>(2 * k)] = GaussianRational(level_norms[static_cast<std::size_t>(k)]);
  return GeometricSeriesValue(static_cast<int>(p), Scalar(Polynomial(std::move(coeffs))),
                              GaussianRational(level_norms.back()), last);
}

NormSeries norm_squared(const XCombination& v, int depth) {
  NormSeries out;
  out.p = v.p();
  const int m = std::max(v.max_length(), 0);
  const int top = std::max(m, depth);
  for (int k = 0; k <= m; ++k) {
    mpq_class n(0);
    for (const auto& [w, c] : v.level_coefficients(k)) n += c.norm_squared();
    out.level_norms.push_back(n);
  }
  // past M every level-M coefficient spreads evenly over p children
  for (int k = m + 1; k <= top; ++k) out.level_norms.push_back(mpq_class(out.level_norms.back() / v.p()));
  out.tail_ratio = mpq_class(1, v.p());
  return out;
}

NormSeries norm_squared(const DiskCoefficients& dc) {
  NormSeries out;
  out.p = dc.p();
  for (const auto& level : dc.levels()) {
    mpq_class n(0);
    for (const auto& c : level) n += c.norm_squared();
    out.level_norms.push_back(n);
  }
  return out;
}

NormSeries norm_squared(const FockVector& v) {
  NormSeries out;
  out.p = v.p();
  for (int k = 0; k <= v.guarantee(); ++k) {
    const FockVector level = level_component(v, k);
    out.level_norms.push_back(inner_product(level, level).constant().real());
  }
  return out;
}

NormSeries delta_norm_squared(const PAdicPoint& x, int depth) {
  if (static_cast<int>(x.resolution()) < depth) throw std::invalid_argument("delta_norm_squared: resolution below depth");
  NormSeries out;
  out.p = x.p();
  out.level_norms.assign(static_cast<std::size_t>(depth) + 1, mpq_class(1));
  out.tail_ratio = mpq_class(1);
  return out;
}

DivergenceCertificate divergence_certificate(const NormSeries& norm, const mpq_class& t) {
  DivergenceCertificate cert;
  cert.t = t;
  std::vector<mpq_class> terms;
  mpq_class t_pow(1);
  mpq_class acc(0);
  for (const auto& n : norm.level_norms) {
    terms.push_back(n * t_pow);
    acc += terms.back();
    if (!cert.partial_sums.empty() && acc < cert.partial_sums.back()) cert.nondecreasing = false;
    cert.partial_sums.push_back(acc);
    t_pow *= t;
  }
  bool started = false;
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
    if (sgn(terms[k]) == 0) {
      if (started) cert.min_term_ratio = mpq_class(0);
      continue;
    }
    started = true;
    const mpq_class ratio = terms[k + 1] / terms[k];
    if (!cert.min_term_ratio || ratio < *cert.min_term_ratio) cert.min_term_ratio = ratio;
  }
  const bool tail_grows = !norm.tail_ratio || *norm.tail_ratio * t >= 1;
  cert.diverges = cert.nondecreasing && cert.min_term_ratio && *cert.min_term_ratio >= 1 && tail_grows;
  return cert;
}

}  // namespace fcs
