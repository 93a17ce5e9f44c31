#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "fcs/fock.hpp"
#include "fcs/gaussian.hpp"
#include "fcs/scalar.hpp"
#include "fcs/words.hpp"

namespace fcs {

/// Dense per-level storage: levels[k][n] is the value on the length-k word
/// with p-adic value n.
using LevelArrays = std::vector<std::vector<GaussianRational>>;

/// First word (shortlex) where Ψ_I != sum_i Ψ_{Ii} fails, or nullopt.
/// Also rejects arrays whose level sizes are not p^k.
std::optional<Word> cascade_defect(unsigned p, const LevelArrays& levels);

/// Coefficients Ψ_I, |I| <= depth, of a free coherent state. The cascade
/// relation Ψ_I = sum_i Ψ_{Ii} holds on every interior word; the same data is
/// a generalized function on Z_p (finite additivity over subdisks).
class DiskCoefficients {
 public:
  /// Throws std::invalid_argument on malformed levels or a cascade violation.
  DiskCoefficients(unsigned p, LevelArrays levels);
  static DiskCoefficients zero(unsigned p, int depth);

  unsigned p() const { return p_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  /// Throws std::out_of_range for |w| > depth.
  const GaussianRational& value(const Word& w) const;
  const std::vector<GaussianRational>& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const LevelArrays& levels() const { return levels_; }

  /// Appends levels by splitting each leaf uniformly over its p children.
  /// Any cascade-consistent extension gives the same pairings with X.
  DiskCoefficients extended(int extra_levels) const;
  DiskCoefficients truncated(int depth) const;
  DiskCoefficients conj() const;

  DiskCoefficients& operator+=(const DiskCoefficients& o);
  DiskCoefficients& operator*=(const GaussianRational& c);
  friend bool operator==(const DiskCoefficients& a, const DiskCoefficients& b) = default;

 private:
  struct Unchecked {};
  DiskCoefficients(Unchecked, unsigned p, LevelArrays levels) : p_(p), levels_(std::move(levels)) {}

  unsigned p_;
  LevelArrays levels_;
};

/// Fills interior values by upward summation; leaf words absent from the map are 0.
/// Throws std::invalid_argument for leaves that are not of length D.
DiskCoefficients cascade_from_leaves(unsigned p, int depth, const std::map<Word, GaussianRational>& leaves);
DiskCoefficients cascade_from_leaves(unsigned p, std::vector<GaussianRational> leaves, int depth);

/// Finite formal sum sum_I c_I X_I.
class XCombination {
 public:
  using Terms = std::map<Word, GaussianRational, ShortlexOrder>;

  explicit XCombination(unsigned p);
  static XCombination single(const Word& I, GaussianRational c = GaussianRational(1));

  unsigned p() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Longest |I| with a nonzero coefficient, -1 when empty.
  int max_length() const;

  void add(const Word& I, const GaussianRational& c);
  XCombination conj() const;

  /// Lambda-free coefficients of the level-k component Φ^k.
  std::map<Word, GaussianRational, ShortlexOrder> level_coefficients(int k) const;
  /// Pushes every term with |I| < level down through X_I = p^{-1} sum_j X_{Ij}.
  XCombination canonicalized(int level) const;

  XCombination& operator+=(const XCombination& o);
  XCombination& operator*=(const GaussianRational& c);
  friend XCombination operator+(XCombination a, const XCombination& b) { return a += b; }
  friend XCombination operator*(const GaussianRational& c, XCombination v) { return v *= c; }
  /// Structural equality of the term maps.
  friend bool operator==(const XCombination& a, const XCombination& b) { return a.p_ == b.p_ && a.terms_ == b.terms_; }

 private:
  unsigned p_;
  Terms terms_;
};

/// Equality modulo the refinement identity: both sides canonicalized to a common level.
bool equivalent(const XCombination& a, const XCombination& b);

/// Ψ_J = 1 on prefixes of I, Ψ_{I.w} = p^{-|w|}, 0 elsewhere.
DiskCoefficients x_disk_coefficients(const Word& I, int depth);
/// Ψ_J = 1 iff J is a prefix of x.
DiskCoefficients delta_disk_coefficients(const PAdicPoint& x, int depth);
/// sum_I c_I x_disk_coefficients(I).
DiskCoefficients combination_disk_coefficients(const XCombination& v, int depth);
/// Cascade of the dual functional <Φ, .> (conjugate-linear in Φ). Equal to
/// combination_disk_coefficients for real combinations.
DiskCoefficients riesz_coefficients(const XCombination& v, int depth);

/// Ψ = sum_I L^{|I|} Ψ_I A†_I Ω truncated at depth D, guarantee D.
FockVector fcs_to_fock(const DiskCoefficients& dc);
/// X_I expanded to depth D: L^{|J|} on prefixes J of I and L^{|I|+m} p^{-m}
/// on every extension I.w with |w| = m. Throws std::invalid_argument if |I| > D.
FockVector build_x(const Word& I, int depth);
FockVector build_combination(const XCombination& v, int depth);
/// δ_x = sum_k L^k A†_{x_k} Ω for k = 0..D.
FockVector build_delta(const PAdicPoint& x, int depth);

/// A v - L v. For states of coherent form it vanishes below the truncation level.
FockVector eigen_residual(const FockVector& v);
/// True iff every stored word has length exactly k.
bool supported_on_level(const FockVector& v, int k);

/// S_k = p^k <Ψ^k, Φ^k> (bilinear). Throws std::out_of_range if k > depth of Ψ.
GaussianRational stabilized_level_pairing(const DiskCoefficients& psi, const XCombination& phi, int k);

/// <Ψ, Φ> as P(L) + tail, from the level pairings up to M = max |I| in Φ and
/// the chain S_k = S_M for k >= M. Stabilization is asserted on levels M and
/// M+1 (Ψ extended uniformly when its depth is exactly M).
///
/// Throws std::invalid_argument if depth(Ψ) < M or p differs.
GeometricSeriesValue pairing_series(const DiskCoefficients& psi, const XCombination& phi);
/// Same series through Fock vectors: level_component of Ψ paired with the
/// levels of build_combination(Φ). Needs depth and guarantee of Ψ >= M+1.
GeometricSeriesValue pairing_series(const FockVector& psi, const XCombination& phi);

/// lim_{L^2 -> p-} (1 - L^2/p) <Ψ, Φ>.
GaussianRational renormalized_pairing(const DiskCoefficients& psi, const XCombination& phi);
GaussianRational renormalized_pairing(const FockVector& psi, const XCombination& phi);

/// (1 - t/p) <Ψ, Φ> at L^2 = t in (0, p), tail in closed form.
/// Throws std::domain_error outside (0, p).
std::complex<double> renormalized_pairing_numeric(const DiskCoefficients& psi, const XCombination& phi,
                                                  double lambda_squared);

/// p^{-|I|} (v, X_I) for every |I| <= depth, read through the Fock route.
LevelArrays induced_coefficients(const FockVector& v, int depth);

/// Level decomposition of <v, v> = sum_k n_k L^{2k}.
struct NormSeries {
  unsigned p = 2;
  /// n_k = <v^k, v^k> for k = 0..levels-1.
  std::vector<mpq_class> level_norms;
  /// n_{k+1} = rho n_k beyond the last listed level, when the tail is known.
  std::optional<mpq_class> tail_ratio;

  int last_level() const { return static_cast<int>(level_norms.size()) - 1; }
  /// sum_{k<=up_to} n_k t^k using listed levels only.
  mpq_class partial_sum(const mpq_class& t, int up_to) const;
  /// Exact sum for a known tail with rho t < 1; nullopt otherwise.
  std::optional<mpq_class> closed_form(const mpq_class& t) const;
  /// The X-span tail (rho = 1/p) as P(L) + c sum_{k>K}(L^2/p)^k p^K.
  std::optional<GeometricSeriesValue> geometric() const;
};

/// Levels listed up to max(M, depth); beyond M each level norm shrinks by 1/p.
NormSeries norm_squared(const XCombination& v, int depth = 0);
NormSeries norm_squared(const DiskCoefficients& dc);
/// Levels up to the guarantee of v; the tail is unknown.
NormSeries norm_squared(const FockVector& v);
/// δ_x has n_k = 1 at every level (rho = 1).
NormSeries delta_norm_squared(const PAdicPoint& x, int depth);

/// Partial-sum growth of <v, v> at L^2 = t.
struct DivergenceCertificate {
  mpq_class t;
  std::vector<mpq_class> partial_sums;
  /// min over levels of t n_{k+1} / n_k (only levels with n_k > 0).
  std::optional<mpq_class> min_term_ratio;
  bool nondecreasing = true;
  /// Terms never shrink: partial sums grow at least linearly in the depth.
  bool diverges = false;
};

DivergenceCertificate divergence_certificate(const NormSeries& norm, const mpq_class& t);

}  // namespace fcs
